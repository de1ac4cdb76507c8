from dataclasses import dataclass, field
import functools
import logging
import re

import numpy as np
import sympy

from lie_defect.errors import ConfigurationError, DomainError
from lie_defect.qpoly import QPolynomial, product
from .cartan import cartan_matrix

logger = logging.getLogger(__name__)

_SPEC_PATTERN = re.compile(r"^(GL|[A-G])(\d+)$")
_MIN_RANK = {"GL": 1, "A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_EXCEPTIONAL_DEGREES = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("G", 2): (2, 6),
}


@dataclass(frozen=True)
class GroupSpec:
    """
    GL_n or a simple type with its rank, e.g. GroupSpec("GL", 3), GroupSpec("C", 2).

    `rank` is the rank of G (dimension of a maximal torus), so GL_n has rank n while its root system is A_{n-1}.
    """
    family: str
    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise ConfigurationError("Rank must be an integer, got " + repr(self.rank))
        if self.family in _FIXED_RANKS:
            valid = self.rank in _FIXED_RANKS[self.family]
        elif self.family in _MIN_RANK:
            valid = self.rank >= _MIN_RANK[self.family]
        else:
            raise ConfigurationError("Unknown group family: " + str(self.family))
        if not valid:
            raise ConfigurationError("Invalid rank " + str(self.rank) + " for type " + self.family)

    @classmethod
    def parse(cls, text):
        match = _SPEC_PATTERN.match(text.strip().upper())
        if match is None:
            raise ConfigurationError("Cannot parse group spec '" + text + "', expected e.g. GL3, A2, C2, F4")
        return cls(match.group(1), int(match.group(2)))

    @property
    def lie_type(self):
        return "A" if self.family == "GL" else self.family

    @property
    def semisimple_rank(self):
        return self.rank - 1 if self.family == "GL" else self.rank

    @property
    def is_classical(self):
        return self.family in ("GL", "A", "B", "C", "D")

    def __str__(self):
        return self.family + str(self.rank)


@dataclass(frozen=True, eq=False)
class RootSystem:
    spec: GroupSpec
    simple_rank: int
    positive_roots: tuple
    fundamental_degrees: tuple
    cartan: np.ndarray = field(repr=False)
    root_matrix: np.ndarray = field(repr=False)

    @property
    def N(self):
        return len(self.positive_roots)

    @property
    def rank(self):
        return self.spec.rank

    @property
    def dim(self):
        return 2 * self.N + self.rank


def _root_order(root):
    # height first, then alpha_1-heavy roots first
    return sum(root), tuple(-c for c in root)


def _string_depth(known, beta, i):
    """How many times alpha_i can be subtracted from beta while staying a root."""
    down = list(beta)
    depth = 0
    while True:
        down[i] -= 1
        if tuple(down) not in known:
            return depth
        depth += 1


def root_closure(cartan, roots=()):
    """
    Close a set of positive roots under the alpha-string rule.

    For a root beta the alpha_i string through beta runs from beta - p*alpha_i to beta + r*alpha_i with
    p - r = <beta, alpha_i^vee>, so beta + alpha_i is a root exactly when p - <beta, alpha_i^vee> > 0.
    Starting from the simple roots this yields all positive roots.
    """
    rank = cartan.shape[0]
    known = {tuple(int(x) for x in row) for row in np.eye(rank, dtype=np.int64)}
    known.update(tuple(int(x) for x in root) for root in roots)
    changed = True
    while changed:
        changed = False
        for beta in sorted(known, key=_root_order):
            pairing = cartan @ np.array(beta, dtype=np.int64)
            for i in range(rank):
                if _string_depth(known, beta, i) - pairing[i] <= 0:
                    continue
                up = list(beta)
                up[i] += 1
                up = tuple(up)
                if up not in known:
                    known.add(up)
                    changed = True
    return sorted(known, key=_root_order)


def fundamental_degrees(spec):
    n = spec.rank
    if spec.family == "GL":
        return tuple(range(1, n + 1))
    if spec.family == "A":
        return tuple(range(2, n + 2))
    if spec.family in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if spec.family == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    return _EXCEPTIONAL_DEGREES[(spec.family, n)]


@functools.lru_cache(maxsize=None)
def build_root_system(spec):
    cartan = cartan_matrix(spec.lie_type, spec.semisimple_rank)
    roots = tuple(root_closure(cartan))
    root_matrix = np.array(roots, dtype=np.int64).reshape(len(roots), spec.semisimple_rank)
    root_matrix.setflags(write=False)
    degrees = fundamental_degrees(spec)
    if sum(d - 1 for d in degrees) != len(roots):
        raise ConfigurationError("Fundamental degrees of " + str(spec) + " do not match " + str(len(roots))
                                 + " positive roots")
    logger.debug("Built root system %s with %d positive roots", spec, len(roots))
    return RootSystem(spec, spec.semisimple_rank, roots, degrees, cartan, root_matrix)


@functools.lru_cache(maxsize=None)
def order_polynomial(spec):
    """ |G^F| = q^N * prod_i (q^{d_i} - 1) """
    root_system = build_root_system(spec)
    return QPolynomial.monomial(root_system.N) * product(QPolynomial.q_power_minus_one(d)
                                                        for d in root_system.fundamental_degrees)


def bad_primes(spec):
    if spec.family in ("GL", "A") or (spec.family == "D" and spec.rank == 3):
        return frozenset()
    if spec.family in ("B", "C", "D"):
        return frozenset({2})
    if spec.family == "E" and spec.rank == 8:
        return frozenset({2, 3, 5})
    return frozenset({2, 3})


def is_good_prime(spec, p):
    if not isinstance(p, int) or not sympy.isprime(p):
        raise DomainError(str(p) + " is not a prime")
    return p not in bad_primes(spec)


def is_good_prime_for(specs, p):
    """p is good for a reductive group if it is good for each of its simple factors."""
    return all(is_good_prime(spec, p) for spec in specs)
