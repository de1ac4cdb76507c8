from collections import namedtuple
from dataclasses import dataclass
import functools

import numpy as np

from lie_defect.errors import InvariantViolation, UnsupportedGroupError
from lie_defect.rootsys import build_root_system
from lie_defect.util import conjugate

RadicalStructure = namedtuple("RadicalStructure",
                              ("u1_closed", "u2_closed", "u2_normal_in_p", "u2_in_u1", "u1_equals_u2"))


@dataclass(frozen=True)
class GradingDims:
    g0: int
    g1: int
    g2: int
    dim_u1: int
    dim_u2: int
    dim_p: int
    dim_c: int
    dim_bu: int
    is_even: bool

    @property
    def is_distinguished(self):
        return self.g0 == self.g2


def root_weight(root, diagram):
    """Linear extension of the labels: sum_i c_i * d_i."""
    return int(np.dot(np.asarray(root, dtype=np.int64), np.asarray(diagram.labels, dtype=np.int64)))


def root_weights(group, diagram):
    """Weights of all positive roots of `group`, in root-system order."""
    root_system = build_root_system(group)
    return root_system.root_matrix @ np.asarray(diagram.labels, dtype=np.int64).reshape(-1)


@functools.lru_cache(maxsize=None)
def _grading_dims(group, diagram):
    root_system = build_root_system(group)
    weights = root_weights(group, diagram)
    weight0 = int(np.sum(weights == 0))
    weight1 = int(np.sum(weights == 1))
    g0 = group.rank + 2 * weight0
    dim_c = g0 + weight1
    if (dim_c - group.rank) % 2:
        raise InvariantViolation("dim C_G(u) - rank is odd for diagram " + str(diagram) + " of " + str(group))
    dim_u1 = int(np.sum(weights >= 1))
    return GradingDims(g0=g0,
                       g1=weight1,
                       g2=int(np.sum(weights == 2)),
                       dim_u1=dim_u1,
                       dim_u2=int(np.sum(weights >= 2)),
                       dim_p=root_system.dim - dim_u1,
                       dim_c=dim_c,
                       dim_bu=(dim_c - group.rank) // 2,
                       is_even=diagram.is_even)


def grading_dims(unipotent_class):
    """
    Dimensions attached to the grading of g by the weighted Dynkin diagram: U_1 (weights >= 1) is the unipotent
    radical of P (weights >= 0), U_2 collects weights >= 2, dim C_G(u) = dim g(0) + dim g(1) and
    dim B_u = (dim C_G(u) - rank) / 2.
    """
    return _grading_dims(unipotent_class.group, unipotent_class.diagram)


def centralizer_dim_oracle(unipotent_class):
    """Closed partition formulas for dim C_G(u) in GL, SL, Sp and SO."""
    group = unipotent_class.group
    if not unipotent_class.is_classical:
        raise UnsupportedGroupError("No partition formula for the centralizers of " + str(group))
    partition = unipotent_class.label
    squares = sum(column ** 2 for column in conjugate(partition))
    odd_parts = sum(1 for part in partition if part % 2)
    if group.family == "GL":
        return squares
    if group.family == "A":
        return squares - 1
    if group.family == "C":
        return (squares + odd_parts) // 2
    return (squares - odd_parts) // 2


def radical_structure(unipotent_class):
    """Root-set form of: U_1, U_2 are closed, U_2 is normalised by P and lies in U_1."""
    root_system = build_root_system(unipotent_class.group)
    weights = dict(zip(root_system.positive_roots, (int(w) for w in root_weights(unipotent_class.group,
                                                                                   unipotent_class.diagram))))
    # negative roots have the negated weights
    weights.update({tuple(-c for c in root): -w for root, w in list(weights.items())})
    u1 = {root for root, w in weights.items() if w >= 1}
    u2 = {root for root, w in weights.items() if w >= 2}
    p = {root for root, w in weights.items() if w >= 0}

    def closed(subset, acting):
        for alpha in acting:
            for beta in subset:
                total = tuple(a + b for a, b in zip(alpha, beta))
                if total in weights and total not in subset:
                    return False
        return True

    positive = set(root_system.positive_roots)
    return RadicalStructure(u1_closed=closed(u1, u1),
                            u2_closed=closed(u2, u2),
                            u2_normal_in_p=closed(u2, p),
                            u2_in_u1=u2 <= u1 and u1 <= positive,
                            u1_equals_u2=u1 == u2)
