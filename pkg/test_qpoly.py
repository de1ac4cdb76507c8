from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lie_defect.errors import DomainError
from lie_defect.qpoly import QPolynomial, QPartSplit, q_valuation, split_q_part, cofactor_is_p_unit, \
    evaluate_at_prime_power, integer_p_part, from_record, to_record, product

q = QPolynomial.q()

coefficient_lists = st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=12), max_size=6)


def test_trailing_zeros_are_stripped():
    f = QPolynomial([1, 2, 0, 0])
    assert f.coefficients == (1, 2)
    assert f.degree == 1
    assert QPolynomial([0, 0]).is_zero
    assert QPolynomial().degree == -1


def test_arithmetic():
    f = q * (q + 1)
    assert f.coefficients == (0, 1, 1)
    assert (f - q * q).coefficients == (0, 1)
    assert (2 * f).coefficients == (0, 2, 2)
    assert (q + 1) ** 2 == q * q + 2 * q + 1
    assert QPolynomial.q_power_minus_one(3) == q ** 3 - 1
    assert product([q, q + 1, q - 1]) == q ** 3 - q


def test_exact_div():
    assert (q ** 3 - q).exact_div(q - 1) == q * q + q
    with pytest.raises(DomainError):
        (q ** 2 + 1).exact_div(q - 1)
    with pytest.raises(DomainError):
        q.exact_div(QPolynomial())
    assert (q - 1).divides(q ** 2 - 1)
    assert not QPolynomial().divides(q)


def test_evaluate_is_exact():
    f = QPolynomial([0, Fraction(1, 2), 0, Fraction(1, 2)])
    assert f.evaluate(2) == 5
    assert f.evaluate(3) == 15


@settings(deadline=None)
@given(coefficient_lists, coefficient_lists, st.integers(-5, 5))
def test_product_evaluates_to_product_of_values(a, b, x):
    f, g = QPolynomial(a), QPolynomial(b)
    assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)
    assert (f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x)


@settings(deadline=None)
@given(coefficient_lists, coefficient_lists)
def test_exact_div_inverts_multiplication(a, b):
    f, g = QPolynomial(a), QPolynomial(b)
    if g.is_zero:
        return
    assert (f * g).exact_div(g) == f


def test_q_valuation():
    assert q_valuation(QPolynomial([0, 0, 3, 1])) == 2
    assert q_valuation(QPolynomial.constant(7)) == 0
    with pytest.raises(DomainError):
        q_valuation(QPolynomial())


def test_split_q_part():
    # q^2 (q + 1)
    split = split_q_part(q ** 2 * (q + 1))
    assert split == QPartSplit(2, q + 1)
    assert split.cofactor.constant_term == 1


@settings(deadline=None)
@given(coefficient_lists, st.integers(0, 6))
def test_split_recombines(a, shift):
    f = QPolynomial(a)
    if f.is_zero:
        return
    shifted = QPolynomial.monomial(shift) * f
    split = split_q_part(shifted)
    assert QPolynomial.monomial(split.valuation) * split.cofactor == shifted
    assert split.cofactor.constant_term != 0


def test_cofactor_is_p_unit():
    assert cofactor_is_p_unit(q + 1, [])
    # 1/2 (q^2 + 1) is a unit only once 2 is bad
    half = QPolynomial([Fraction(1, 2), 0, Fraction(1, 2)])
    assert cofactor_is_p_unit(half, [2])
    assert not cofactor_is_p_unit(half, [])
    assert not cofactor_is_p_unit(QPolynomial([3, 1]), [2])
    assert cofactor_is_p_unit(QPolynomial([-6, 1]), [2, 3])
    with pytest.raises(DomainError):
        cofactor_is_p_unit(q, [2])


def test_evaluate_at_prime_power():
    assert evaluate_at_prime_power(q + 1, 2, 3) == 9
    with pytest.raises(DomainError):
        evaluate_at_prime_power(q, 4, 1)
    with pytest.raises(DomainError):
        evaluate_at_prime_power(q, 2, 0)


def test_integer_p_part():
    assert integer_p_part(144, 2) == 16
    assert integer_p_part(144, 3) == 9
    assert integer_p_part(35, 2) == 1
    with pytest.raises(DomainError):
        integer_p_part(0, 2)
    with pytest.raises(DomainError):
        integer_p_part(12, 6)


@settings(deadline=None)
@given(st.integers(0, 5), st.sampled_from([1, -1]), st.lists(st.integers(-20, 20), max_size=4),
       st.sampled_from([2, 3, 5, 7, 11]), st.integers(1, 4))
def test_p_part_of_value_matches_q_valuation(valuation, unit, tail, p, k):
    cofactor = QPolynomial([unit] + tail)
    assert cofactor_is_p_unit(cofactor, [])
    f = QPolynomial.monomial(valuation) * cofactor
    value = evaluate_at_prime_power(f, p, k)
    assert value.denominator == 1
    assert integer_p_part(abs(int(value)), p) == (p ** k) ** q_valuation(f)


def test_record_encoding():
    f = QPolynomial([0, Fraction(1, 2), Fraction(1, 3)])
    record = to_record(f)
    assert record == {"numerator": [0, 3, 2], "denominator": 6}
    assert from_record(record) == f
    assert to_record(QPolynomial()) == {"numerator": [], "denominator": 1}
    assert f.to_record() == record
    half = {"numerator": [0, 1, 0, 1], "denominator": 2}
    assert to_record(from_record(half)) == half


@settings(deadline=None)
@given(coefficient_lists)
def test_record_decode_is_bit_exact(a):
    f = QPolynomial(a)
    assert from_record(to_record(f)).coefficients == f.coefficients


@pytest.mark.parametrize("record", [
    {"numerator": [1, 2], "denominator": 0},
    {"numerator": [1, 2], "denominator": -3},
    {"numerator": [1.5], "denominator": 1},
    {"numerator": "12"},
    {"denominator": 2},
    {"numerator": [0, 2, 0, 2], "denominator": 4},
    {"numerator": [1, 0], "denominator": 1},
    {"numerator": [], "denominator": 3},
    [1, 2],
])
def test_bad_records_are_rejected(record):
    with pytest.raises(DomainError):
        from_record(record)
