from fractions import Fraction
from functools import reduce
import math
import operator

import sympy

from lie_defect.errors import DomainError

q_symbol = sympy.Symbol("q")


def _to_rational(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


class QPolynomial(object):
    """
    Exact polynomial in q with rational coefficients.

    Arithmetic is delegated to a sympy Poly over QQ, the dense coefficient tuple (low-to-high, as Fractions)
    is kept next to it for valuations and evaluation. Instances are immutable.
    """
    __slots__ = ("_coefficients", "_poly")

    def __init__(self, coefficients=()):
        coefficients = [Fraction(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients = tuple(coefficients)
        high_to_low = [_to_rational(c) for c in reversed(coefficients)] or [sympy.Integer(0)]
        self._poly = sympy.Poly.from_list(high_to_low, q_symbol, domain=sympy.QQ)

    @classmethod
    def _from_poly(cls, poly):
        if poly.is_zero:
            return cls()
        return cls(_to_fraction(c) for c in reversed(poly.all_coeffs()))

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        if exponent < 0:
            raise DomainError("negative exponent " + str(exponent))
        return cls([0] * exponent + [coefficient])

    @classmethod
    def q(cls):
        return cls.monomial(1)

    @classmethod
    def q_power_minus_one(cls, k):
        """ q^k - 1 """
        return cls([-1] + [0] * (k - 1) + [1])

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def is_zero(self):
        return not self._coefficients

    @property
    def degree(self):
        return len(self._coefficients) - 1

    @property
    def constant_term(self):
        return self._coefficients[0] if self._coefficients else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return QPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QPolynomial._from_poly(self._poly + other._poly)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self._coefficients)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QPolynomial._from_poly(self._poly - other._poly)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QPolynomial._from_poly(self._poly * other._poly)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("only non-negative integer powers are supported")
        return QPolynomial._from_poly(self._poly ** exponent)

    def exact_div(self, divisor):
        """Quotient self / divisor. Raises DomainError unless the division leaves no remainder."""
        divisor = self._coerce(divisor)
        if divisor is NotImplemented or divisor.is_zero:
            raise DomainError("division by the zero polynomial")
        quotient, remainder = self._poly.div(divisor._poly)
        if not remainder.is_zero:
            raise DomainError(str(divisor) + " does not divide " + str(self))
        return QPolynomial._from_poly(quotient)

    def divides(self, other):
        if self.is_zero:
            return False
        _, remainder = other._poly.div(self._poly)
        return remainder.is_zero

    def evaluate(self, value):
        # Horner, exact
        value = Fraction(value)
        result = Fraction(0)
        for c in reversed(self._coefficients):
            result = result * value + c
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __str__(self):
        return str(self._poly.as_expr())

    def __repr__(self):
        return "QPolynomial(" + str(self) + ")"

    def to_record(self):
        return to_record(self)


def product(factors):
    return reduce(operator.mul, factors, QPolynomial.constant(1))


def to_record(f):
    """Encode as {"numerator": [ints, low-to-high], "denominator": lcm of the coefficient denominators}."""
    denominator = reduce(math.lcm, (c.denominator for c in f.coefficients), 1)
    numerator = [int(c * denominator) for c in f.coefficients]
    return {"numerator": numerator, "denominator": denominator}


def from_record(record):
    """Decode the reduced form written by to_record. Records with trailing zeros or a common factor are rejected."""
    try:
        numerator = record["numerator"]
        denominator = record.get("denominator", 1)
    except (KeyError, TypeError, AttributeError):
        raise DomainError("polynomial record needs a numerator list: " + repr(record))
    if not isinstance(denominator, int) or isinstance(denominator, bool) or denominator <= 0:
        raise DomainError("polynomial denominator must be a positive integer, got " + repr(denominator))
    if not isinstance(numerator, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in numerator):
        raise DomainError("polynomial numerator must be a list of integers, got " + repr(numerator))
    if numerator and numerator[-1] == 0:
        raise DomainError("polynomial numerator has trailing zeros: " + repr(numerator))
    if math.gcd(denominator, *numerator) != 1:
        raise DomainError("polynomial record is not reduced: " + repr(record))
    return QPolynomial(Fraction(c, denominator) for c in numerator)
