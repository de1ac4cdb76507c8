from collections import namedtuple
from dataclasses import dataclass, field
import logging

from tqdm import tqdm

from lie_defect.nilpotent import centralizer_dim_oracle, enumerate_classes, grading_dims, radical_structure
from lie_defect.rootsys import build_root_system

logger = logging.getLogger(__name__)

IdentityViolation = namedtuple("IdentityViolation", ("class_name", "identity", "lhs", "rhs"))


@dataclass
class IdentitySummary:
    group: str
    classes: int
    records: int
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def to_record(self):
        return {"group": self.group, "classes": self.classes, "records": self.records,
                "violations": [violation._asdict() for violation in self.violations]}


def _identities(root_system, dims):
    n, rank = root_system.N, root_system.rank
    return [
        ("2(N - dimBu) = dimU1 + dimU2", 2 * (n - dims.dim_bu), dims.dim_u1 + dims.dim_u2),
        ("dimU1 - dimU2 even", (dims.dim_u1 - dims.dim_u2) % 2, 0),
        ("dimP + dimU1 = 2N + rank", dims.dim_p + dims.dim_u1, 2 * n + rank),
        ("dimC = dimP - dimU2", dims.dim_c, dims.dim_p - dims.dim_u2),
        ("dimC = rank + 2 dimBu", dims.dim_c, rank + 2 * dims.dim_bu),
        ("dimU2 <= dimU1", dims.dim_u2 <= dims.dim_u1, True),
        ("(dimU1 + dimU2) / 2 = N - dimBu", (dims.dim_u1 + dims.dim_u2) // 2, n - dims.dim_bu),
    ]


def check_dimension_identities(group, catalog=None):
    """
    Evaluate the dimension identities for every unipotent class of `group`.

    The two classes of a very even pair share a diagram and are checked once. Classical classes are also
    compared against the partition formula for dim C_G(u).
    """
    root_system = build_root_system(group)
    classes = enumerate_classes(group, catalog)
    summary = IdentitySummary(group=str(group), classes=len(classes), records=0)
    seen = set()
    for unipotent_class in classes:
        key = (unipotent_class.label, unipotent_class.diagram)
        if key in seen:
            continue
        seen.add(key)
        summary.records += 1

        dims = grading_dims(unipotent_class)
        checks = _identities(root_system, dims)
        structure = radical_structure(unipotent_class)
        checks += [(name, getattr(structure, name), True) for name in structure._fields if name != "u1_equals_u2"]
        checks.append(("U1 = U2 iff even", structure.u1_equals_u2, dims.is_even))
        if unipotent_class.is_classical:
            checks.append(("dimC = partition formula", dims.dim_c, centralizer_dim_oracle(unipotent_class)))

        for identity, lhs, rhs in checks:
            if lhs != rhs:
                summary.violations.append(IdentityViolation(unipotent_class.name, identity, lhs, rhs))
    logger.debug("%s: %d classes, %d records, %d violations", group, summary.classes, summary.records,
                 len(summary.violations))
    return summary


def check_identities_many(groups, catalog=None, progress=False):
    return [check_dimension_identities(group, catalog) for group in tqdm(groups, desc="Identities",
                                                                          disable=not progress)]
