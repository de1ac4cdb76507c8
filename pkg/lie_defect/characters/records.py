from dataclasses import dataclass
from typing import Union

from lie_defect.errors import DomainError, InvalidRecordError
from lie_defect.nilpotent import UnipotentClass
from lie_defect.qpoly import QPolynomial
from lie_defect.rootsys import GroupSpec, order_polynomial
from lie_defect.util import format_partition


@dataclass(frozen=True)
class CharacterRecord:
    group: GroupSpec
    label: Union[tuple, str]
    degree: QPolynomial
    support_class: UnipotentClass

    @property
    def name(self):
        return format_partition(self.label) if isinstance(self.label, tuple) else self.label


def defect_polynomial(group, character):
    """ |G^F| / chi(1) as an exact polynomial """
    if character.degree.is_zero:
        raise InvalidRecordError(character.name, "zero degree")
    try:
        return order_polynomial(group).exact_div(character.degree)
    except DomainError:
        raise InvalidRecordError(character.name, "degree " + str(character.degree) + " does not divide |"
                                 + str(group) + "(q)|")
