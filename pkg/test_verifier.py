from fractions import Fraction
import io

import pytest
from hypothesis import given, settings, strategies as st

from lie_defect.characters import CharacterRecord, gl_unipotent_characters, sp4_unipotent_characters
from lie_defect.errors import ConfigurationError, DomainError
from lie_defect.nilpotent import find_class, classical_class
from lie_defect.qpoly import QPolynomial
from lie_defect.rootsys import GroupSpec, build_root_system, is_good_prime
from lie_defect.verifier import CSV_COLUMNS, NumericCheck, Status, check_dimension_identities, numeric_check, \
    psi_degree, verify_all, verify_character, write_csv

GL3 = GroupSpec("GL", 3)
SP4 = GroupSpec("C", 2)


def gl_character(n, partition):
    return [c for c in gl_unipotent_characters(n) if c.label == tuple(partition)][0]


def sp4_character(label):
    return [c for c in sp4_unipotent_characters() if c.name == label][0]


def test_psi_degree():
    assert psi_degree(classical_class(GL3, (2, 1))) == QPolynomial.q()
    assert psi_degree(find_class(SP4, "(2,2)")) == QPolynomial.constant(1)
    assert psi_degree(classical_class(GL3, (1, 1, 1))) == QPolynomial.constant(1)


def test_gl3_subregular_character():
    report = verify_character(GL3, gl_character(3, (2, 1)))
    assert report.status is Status.PASS
    assert report.diagram == (1, 1)
    assert (report.dims.dim_u1, report.dims.dim_u2) == (3, 1)
    assert report.psi_degree_exponent == 1
    assert report.u1_order_exponent - report.psi_degree_exponent == 2
    assert report.lhs_exponent == report.rhs_exponent == 2
    assert report.cofactor_unit
    assert report.good_prime is None


def test_sp4_character_at_good_prime():
    character = sp4_character("theta_11")
    report = verify_character(SP4, character, p=3)
    assert report.status is Status.PASS
    assert report.support_class == "(2,2)"
    assert (report.dims.dim_u1, report.dims.dim_u2, report.dims.dim_bu) == (3, 3, 1)
    assert report.lhs_exponent == report.rhs_exponent == 3
    assert report.good_prime
    assert numeric_check(SP4, character, 3, 1) == NumericCheck(27, 27, True)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_sp4_character_at_bad_prime(k):
    character = sp4_character("theta_11")
    measured, predicted, agrees = numeric_check(SP4, character, 2, k)
    assert measured == 2 * (2 ** k) ** 3
    assert predicted == (2 ** k) ** 3
    assert not agrees
    # the polynomial verdict stands, the report carries the prime
    report = verify_character(SP4, character, p=2)
    assert report.status is Status.PASS
    assert report.good_prime is False


def test_sp4_example_numbers():
    assert numeric_check(SP4, sp4_character("theta_11"), 2, 1) == NumericCheck(16, 8, False)


def test_steinberg_characters():
    for n in range(1, 7):
        steinberg = gl_character(n, (1,) * n)
        report = verify_character(GroupSpec("GL", n), steinberg)
        assert report.lhs_exponent == report.rhs_exponent == 0
        assert report.status is Status.PASS


@pytest.mark.parametrize("n", range(1, 11))
def test_all_gl_unipotent_characters_pass(n):
    group = GroupSpec("GL", n)
    root_system = build_root_system(group)
    for report in verify_all(gl_unipotent_characters(n)):
        assert report.status is Status.PASS, report
        assert report.rhs_exponent == root_system.N - report.dims.dim_bu


def test_embedded_sp4_table_passes():
    reports = verify_all(sp4_unipotent_characters())
    assert [report.status for report in reports] == [Status.PASS] * 6
    assert [report.lhs_exponent for report in reports] == [4, 3, 3, 3, 3, 0]


def test_indeterminate_and_fail():
    subregular = find_class(SP4, "(2,2)")
    third = CharacterRecord(SP4, "third", QPolynomial([0, Fraction(1, 3), 0, Fraction(1, 3)]), subregular)
    assert verify_character(SP4, third).status is Status.INDETERMINATE
    shifted = CharacterRecord(SP4, "shifted", QPolynomial([0, 0, Fraction(1, 2), 0, Fraction(1, 2)]), subregular)
    report = verify_character(SP4, shifted)
    assert report.status is Status.FAIL
    assert (report.lhs_exponent, report.rhs_exponent) == (2, 3)


def test_group_mismatch():
    with pytest.raises(ConfigurationError):
        verify_character(GroupSpec("GL", 4), gl_character(3, (2, 1)))


def test_numeric_check_gl3():
    assert numeric_check(GL3, gl_character(3, (2, 1)), 2, 1) == NumericCheck(4, 4, True)


def test_numeric_check_needs_integral_degree():
    half = CharacterRecord(SP4, "half", QPolynomial([0, Fraction(1, 2)]), find_class(SP4, "(2,2)"))
    with pytest.raises(DomainError):
        numeric_check(SP4, half, 3, 1)
    with pytest.raises(DomainError):
        numeric_check(GL3, gl_character(3, (2, 1)), 6, 1)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_sp4_numeric_coherence_at_good_primes(p):
    for report in verify_all(sp4_unipotent_characters(), p=p, k=2):
        assert report.numeric.agrees
        assert (report.p, report.k) == (p, 2)
        assert report.ok


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.sampled_from([2, 3, 5, 7]), st.integers(1, 3), st.data())
def test_gl_numeric_coherence(n, p, k, data):
    character = data.draw(st.sampled_from(gl_unipotent_characters(n)))
    report = verify_character(character.group, character, p)
    assert report.status is Status.PASS and is_good_prime(character.group, p)
    measured, predicted, agrees = numeric_check(character.group, character, p, k)
    assert agrees and measured == predicted == (p ** k) ** report.rhs_exponent


@pytest.mark.parametrize("text,classes,records", [
    ("A1", 2, 2), ("A4", 7, 7), ("C2", 4, 4), ("G2", 5, 5), ("F4", 16, 16), ("D4", 12, 10),
])
def test_identity_summaries(text, classes, records):
    summary = check_dimension_identities(GroupSpec.parse(text))
    assert (summary.classes, summary.records) == (classes, records)
    assert summary.violations == []
    assert summary.ok


def test_identity_sweep():
    groups = [GroupSpec("A", n) for n in range(1, 9)] + [GroupSpec(family, n) for family in "BC"
                                                         for n in range(2, 7)] + \
        [GroupSpec("D", n) for n in range(4, 7)] + [GroupSpec("G", 2), GroupSpec("F", 4)]
    for group in groups:
        assert check_dimension_identities(group).violations == [], group


def test_report_serialisation():
    report = verify_character(GL3, gl_character(3, (2, 1)))
    assert report.csv_row() == ["GL3", "(2,1)", "(2,1)", "(1,1)", "3", "1", "1", "2", "2", "pass"]
    record = report.to_record()
    assert record["status"] == "pass"
    assert record["diagram"] == [1, 1]
    assert record["dims"]["dim_bu"] == 1
    assert "numeric" not in record

    stream = io.StringIO()
    write_csv([report], stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "GL3,\"(2,1)\",\"(2,1)\",\"(1,1)\",3,1,1,2,2,pass"


def test_numeric_report_serialisation():
    report = verify_all([sp4_character("theta_11")], p=2, k=1)[0]
    assert report.csv_row(with_numeric=True)[-5:] == ["2", "1", "16", "8", "false"]
    assert report.to_record()["numeric"] == {"p": 2, "k": 1, "measured": 16, "predicted": 8, "agrees": False}
    assert not report.ok
