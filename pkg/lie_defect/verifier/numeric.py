from lie_defect.errors import DomainError
from lie_defect.nilpotent import grading_dims
from lie_defect.qpoly import evaluate_at_prime_power, integer_p_part
from lie_defect.rootsys import order_polynomial
from .report import NumericCheck


def numeric_check(group, character, p, k):
    """
    Evaluate at q = p^k with big integers: the p-part of |G^F| / chi(1) against q^{(dim U_1 + dim U_2) / 2}.

    At a bad prime the two may differ, e.g. Sp_4(2) and chi(1) = q(q^2 + 1) / 2 give 16 against 8.
    """
    degree = evaluate_at_prime_power(character.degree, p, k)
    if degree.denominator != 1 or degree <= 0:
        raise DomainError("chi(1) of " + character.name + " is " + str(degree) + " at q = " + str(p ** k)
                          + ", not a positive integer")
    ratio = evaluate_at_prime_power(order_polynomial(group), p, k) / degree
    if ratio.denominator != 1:
        raise DomainError("chi(1) of " + character.name + " does not divide |G^F| at q = " + str(p ** k))
    dims = grading_dims(character.support_class)
    measured = integer_p_part(int(ratio), p)
    predicted = (p ** k) ** ((dims.dim_u1 + dims.dim_u2) // 2)
    return NumericCheck(measured, predicted, measured == predicted)
