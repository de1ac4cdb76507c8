from .polynomial import QPolynomial, product, to_record, from_record, q_symbol
from .p_parts import QPartSplit, q_valuation, split_q_part, cofactor_is_p_unit, evaluate_at_prime_power, \
    integer_p_part
