from dataclasses import replace
import logging

from tqdm import tqdm

from lie_defect.characters import defect_polynomial
from lie_defect.errors import ConfigurationError, InvariantViolation
from lie_defect.nilpotent import grading_dims
from lie_defect.qpoly import QPolynomial, cofactor_is_p_unit, split_q_part
from lie_defect.rootsys import bad_primes, build_root_system, is_good_prime
from .numeric import numeric_check
from .report import Status, VerificationReport

logger = logging.getLogger(__name__)


def psi_degree(unipotent_class):
    """ Degree q^{(dim U_1 - dim U_2) / 2} of the U_1^F character built from the class diagram """
    dims = grading_dims(unipotent_class)
    difference = dims.dim_u1 - dims.dim_u2
    if difference < 0 or difference % 2:
        raise InvariantViolation("dim U_1 - dim U_2 = " + str(difference) + " for " + unipotent_class.name)
    return QPolynomial.monomial(difference // 2)


def verify_character(group, character, p=None):
    """
    Compare the q-part of |G^F| / chi(1) with |U_1^F| / psi(1) for the support class of chi.

    The verdict is pass only when the exponents agree and the q-cofactor of the defect polynomial
    is a unit away from the bad primes; a non-unit cofactor gives indeterminate. With p given the
    report is stamped with whether p is good for the group.
    """
    if character.group != group:
        raise ConfigurationError("Character " + character.name + " belongs to " + str(character.group)
                                 + ", not " + str(group))
    support = character.support_class
    dims = grading_dims(support)
    root_system = build_root_system(group)

    psi_exponent = psi_degree(support).degree
    rhs_exponent = dims.dim_u1 - psi_exponent
    if rhs_exponent != root_system.N - dims.dim_bu:
        raise InvariantViolation("(dim U_1 + dim U_2) / 2 = " + str(rhs_exponent) + " but N - dim B_u = "
                                 + str(root_system.N - dims.dim_bu) + " for " + support.name)

    split = split_q_part(defect_polynomial(group, character))
    cofactor_unit = cofactor_is_p_unit(split.cofactor, bad_primes(group))
    if not cofactor_unit:
        status = Status.INDETERMINATE
    elif split.valuation == rhs_exponent:
        status = Status.PASS
    else:
        status = Status.FAIL

    report = VerificationReport(group=str(group), character=character.name, support_class=support.name,
                                diagram=support.diagram.labels, dims=dims, u1_order_exponent=dims.dim_u1,
                                psi_degree_exponent=psi_exponent, lhs_exponent=split.valuation,
                                rhs_exponent=rhs_exponent, cofactor_unit=cofactor_unit, status=status,
                                good_prime=None if p is None else is_good_prime(group, p), p=p)
    logger.debug("%s %s: lhs q^%d, rhs q^%d, %s", group, character.name, split.valuation, rhs_exponent,
                 status.value)
    return report


def verify_all(characters, p=None, k=None, progress=False):
    """Verify each character against its own group, in input order; with p and k also run the numeric check."""
    reports = []
    for character in tqdm(characters, desc="Verifying", disable=not progress):
        report = verify_character(character.group, character, p)
        if p is not None and k is not None:
            report = replace(report, k=k, numeric=numeric_check(character.group, character, p, k))
        reports.append(report)
    return reports
