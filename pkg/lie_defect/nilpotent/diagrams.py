from dataclasses import dataclass

from lie_defect.errors import DomainError
from lie_defect.util import format_labels
from .partitions import validate_partition


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    labels: tuple

    def __post_init__(self):
        labels = tuple(int(label) for label in self.labels)
        if any(label not in (0, 1, 2) for label in labels):
            raise DomainError("Weighted Dynkin labels must lie in {0, 1, 2}, got " + format_labels(labels))
        object.__setattr__(self, "labels", labels)

    @property
    def is_even(self):
        return all(label != 1 for label in self.labels)

    def __str__(self):
        return format_labels(self.labels)


def h_multiset(partition):
    """Eigenvalues of h in the sl_2-triple: a Jordan block of size m gives m-1, m-3, ..., 1-m."""
    values = []
    for m in partition:
        values.extend(range(m - 1, -m, -2))
    return sorted(values, reverse=True)


def diagram_from_partition(spec, partition):
    """
    Weighted Dynkin diagram of a classical class.

    The sorted h-multiset is the dominant coweight in GL; for B, C, D the n largest values are the coordinates
    h_1 >= ... >= h_n >= 0 and the labels are the pairings with the simple roots e_i - e_{i+1} and
    e_n (B), 2e_n (C), e_{n-1} + e_n (D).
    """
    partition = validate_partition(spec, partition)
    h = h_multiset(partition)
    if spec.family in ("GL", "A"):
        return WeightedDynkinDiagram(tuple(h[i] - h[i + 1] for i in range(len(h) - 1)))
    n = spec.rank
    top = h[:n]
    labels = [top[i] - top[i + 1] for i in range(n - 1)]
    if spec.family == "B":
        labels.append(top[n - 1])
    elif spec.family == "C":
        labels.append(2 * top[n - 1])
    else:
        labels.append(top[n - 2] + top[n - 1])
    return WeightedDynkinDiagram(tuple(labels))


# Classical diagrams of rank <= 4 as tabulated in the literature (Bourbaki numbering). A very even D4
# partition is listed once: both of its classes carry this diagram here.
_CLASSICAL_LITERATURE = {
    "A1": {(2,): (2,), (1, 1): (0,)},
    "A2": {(3,): (2, 2), (2, 1): (1, 1), (1, 1, 1): (0, 0)},
    "A3": {(4,): (2, 2, 2), (3, 1): (2, 0, 2), (2, 2): (0, 2, 0), (2, 1, 1): (1, 0, 1), (1, 1, 1, 1): (0, 0, 0)},
    "B2": {(5,): (2, 2), (3, 1, 1): (2, 0), (2, 2, 1): (0, 1), (1, 1, 1, 1, 1): (0, 0)},
    "C2": {(4,): (2, 2), (2, 2): (0, 2), (2, 1, 1): (1, 0), (1, 1, 1, 1): (0, 0)},
    "B3": {(7,): (2, 2, 2), (5, 1, 1): (2, 2, 0), (3, 3, 1): (0, 2, 0), (3, 2, 2): (1, 0, 1),
           (3, 1, 1, 1, 1): (2, 0, 0), (2, 2, 1, 1, 1): (0, 1, 0), (1,) * 7: (0, 0, 0)},
    "C3": {(6,): (2, 2, 2), (4, 2): (2, 0, 2), (4, 1, 1): (2, 1, 0), (3, 3): (0, 2, 0), (2, 2, 2): (0, 0, 2),
           (2, 2, 1, 1): (0, 1, 0), (2, 1, 1, 1, 1): (1, 0, 0), (1,) * 6: (0, 0, 0)},
    "D4": {(7, 1): (2, 2, 2, 2), (5, 3): (2, 0, 2, 2), (4, 4): (0, 2, 0, 2), (5, 1, 1, 1): (2, 2, 0, 0),
           (3, 3, 1, 1): (0, 2, 0, 0), (3, 2, 2, 1): (1, 0, 1, 1), (2, 2, 2, 2): (0, 0, 0, 2),
           (3, 1, 1, 1, 1, 1): (2, 0, 0, 0), (2, 2, 1, 1, 1, 1): (0, 1, 0, 0), (1,) * 8: (0, 0, 0, 0)},
}


def classical_literature_diagrams():
    """{group text: {partition: labels}} for cross-checking the h-multiset recipe."""
    return {group: dict(table) for group, table in _CLASSICAL_LITERATURE.items()}
