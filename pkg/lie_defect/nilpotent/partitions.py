from sympy.utilities.iterables import partitions as sympy_partitions

from lie_defect.errors import DomainError
from lie_defect.util import multiplicities, format_partition


def partition_size(spec):
    """Size of the natural representation: GL_n -> n, A_n -> n+1, B_n -> 2n+1, C_n, D_n -> 2n."""
    n = spec.rank
    sizes = {"GL": n, "A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}
    try:
        return sizes[spec.family]
    except KeyError:
        raise DomainError("Type " + spec.family + " has no partition labels")


def all_partitions(n):
    """All partitions of n, reverse lexicographic (refines dominance, largest first)."""
    result = []
    for parts in sympy_partitions(n):
        # sympy reuses the dict it yields
        result.append(tuple(sorted((part for part, count in parts.items() for _ in range(count)), reverse=True)))
    return sorted(result, reverse=True)


def partition_error(spec, partition):
    """Reason why `partition` labels no unipotent class of `spec`, or None."""
    if not partition or any(part <= 0 for part in partition):
        return "parts must be positive"
    if list(partition) != sorted(partition, reverse=True):
        return "parts must be non-increasing"
    size = partition_size(spec)
    if sum(partition) != size:
        return "must be a partition of " + str(size)
    counts = multiplicities(partition)
    if spec.family in ("B", "D"):
        if any(part % 2 == 0 and count % 2 for part, count in counts.items()):
            return "even parts need even multiplicity in type " + spec.family
    elif spec.family == "C":
        if any(part % 2 and count % 2 for part, count in counts.items()):
            return "odd parts need even multiplicity in type C"
    return None


def validate_partition(spec, partition):
    partition = tuple(partition)
    reason = partition_error(spec, partition)
    if reason is not None:
        raise DomainError(format_partition(partition) + " is not a class of " + str(spec) + ": " + reason)
    return partition


def is_very_even(spec, partition):
    return spec.family == "D" and all(part % 2 == 0 for part in partition)


def class_partitions(spec):
    return [partition for partition in all_partitions(partition_size(spec))
            if partition_error(spec, partition) is None]
