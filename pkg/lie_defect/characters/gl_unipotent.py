from lie_defect.errors import DomainError, InvariantViolation
from lie_defect.nilpotent import all_partitions, classical_class, validate_partition
from lie_defect.qpoly import QPolynomial, product
from lie_defect.rootsys import GroupSpec
from lie_defect.util import hook_lengths, n_statistic
from .records import CharacterRecord


def gl_unipotent_degree(n, partition):
    """
    Degree of the unipotent character of GL_n(q) labelled by `partition`, by the q-analogue of the hook
    formula: q^{n(lambda)} * prod_{k=1..n} (q^k - 1) / prod_{boxes} (q^{h(b)} - 1).
    """
    partition = validate_partition(GroupSpec("GL", n), partition)
    numerator = QPolynomial.monomial(n_statistic(partition)) * product(QPolynomial.q_power_minus_one(k)
                                                                     for k in range(1, n + 1))
    denominator = product(QPolynomial.q_power_minus_one(h) for h in hook_lengths(partition))
    try:
        return numerator.exact_div(denominator)
    except DomainError as e:
        raise InvariantViolation("q-hook formula left a remainder for " + str(partition) + ": " + str(e))


def gl_support_class(partition):
    """Unipotent support of the unipotent character `partition`: the class with the same Jordan type."""
    partition = tuple(partition)
    return classical_class(GroupSpec("GL", sum(partition)), partition)


def gl_unipotent_characters(n):
    group = GroupSpec("GL", n)
    return [CharacterRecord(group, partition, gl_unipotent_degree(n, partition), gl_support_class(partition))
            for partition in all_partitions(n)]
