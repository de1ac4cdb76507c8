from dataclasses import dataclass

import sympy

from lie_defect.errors import DomainError
from .polynomial import QPolynomial


@dataclass(frozen=True)
class QPartSplit:
    """f = q^valuation * cofactor with cofactor(0) != 0."""
    valuation: int
    cofactor: QPolynomial


def q_valuation(f):
    if f.is_zero:
        raise DomainError("the zero polynomial has no q-valuation")
    valuation = 0
    while f.coefficients[valuation] == 0:
        valuation += 1
    return valuation


def split_q_part(f):
    valuation = q_valuation(f)
    return QPartSplit(valuation, QPolynomial(f.coefficients[valuation:]))


def cofactor_is_p_unit(g, bad_primes):
    """
    True if g(q) is a p-adic unit for every good prime p and every power q of p.

    Every prime dividing the numerator or denominator of g(0) has to be bad. Primes in the denominators of the
    other coefficients have to be bad as well, otherwise g(q) = g(0) mod p does not hold.
    """
    constant = g.constant_term
    if constant == 0:
        raise DomainError("cofactor " + str(g) + " vanishes at q = 0")
    primes = set(sympy.primefactors(abs(constant.numerator))) | set(sympy.primefactors(constant.denominator))
    for c in g.coefficients:
        primes.update(sympy.primefactors(c.denominator))
    return primes <= set(bad_primes)


def _check_prime(p):
    if not isinstance(p, int) or not sympy.isprime(p):
        raise DomainError(str(p) + " is not a prime")


def evaluate_at_prime_power(f, p, k):
    _check_prime(p)
    if not isinstance(k, int) or k < 1:
        raise DomainError("exponent k must be a positive integer, got " + str(k))
    return f.evaluate(p ** k)


def integer_p_part(n, p):
    """ p^{v_p(n)} """
    _check_prime(p)
    if not isinstance(n, int) or n < 1:
        raise DomainError("p-part needs a positive integer, got " + str(n))
    return p ** sympy.multiplicity(p, n)
