from fractions import Fraction
import functools
import json

import pytest

from lie_defect.characters import CharacterRecord, defect_polynomial, gl_support_class, gl_unipotent_characters, \
    gl_unipotent_degree, load_character_file, load_character_table, resolve_table_path, sp4_unipotent_characters
from lie_defect.errors import DataMissingError, DomainError, InvalidRecordError
from lie_defect.nilpotent import all_partitions, grading_dims
from lie_defect.qpoly import QPolynomial, q_valuation, split_q_part
from lie_defect.rootsys import GroupSpec, order_polynomial

q = QPolynomial.q()


@functools.lru_cache(maxsize=None)
def count_standard_tableaux(shape):
    """Place the largest entry in each removable corner and recurse."""
    if sum(shape) <= 1:
        return 1
    total = 0
    for i, row in enumerate(shape):
        if row and (i + 1 == len(shape) or shape[i + 1] < row):
            smaller = list(shape)
            smaller[i] -= 1
            total += count_standard_tableaux(tuple(part for part in smaller if part))
    return total


def test_tableau_counter():
    assert count_standard_tableaux((2, 1)) == 2
    assert count_standard_tableaux((3, 2)) == 5
    assert sum(count_standard_tableaux(shape) ** 2 for shape in all_partitions(6)) == 720


def test_gl3_degrees():
    assert gl_unipotent_degree(3, (3,)) == QPolynomial.constant(1)
    assert gl_unipotent_degree(3, (2, 1)) == q * (q + 1)
    assert gl_unipotent_degree(3, (1, 1, 1)) == q ** 3


def test_gl4_two_two():
    # q^2 (q^2 + 1)
    assert gl_unipotent_degree(4, (2, 2)) == q ** 2 * (q ** 2 + 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_degree_at_one_counts_tableaux(n):
    for partition in all_partitions(n):
        assert gl_unipotent_degree(n, partition).evaluate(1) == count_standard_tableaux(partition)


@pytest.mark.parametrize("n", range(1, 11))
def test_degree_valuation_is_support_springer_dimension(n):
    for character in gl_unipotent_characters(n):
        assert q_valuation(character.degree) == grading_dims(character.support_class).dim_bu


def test_characters_in_partition_order():
    characters = gl_unipotent_characters(4)
    assert [c.label for c in characters] == all_partitions(4)
    assert characters[1].name == "(3,1)"
    assert gl_support_class((3, 1)).label == (3, 1)


def test_invalid_gl_partition():
    with pytest.raises(DomainError):
        gl_unipotent_degree(3, (2, 2))


def test_defect_polynomial():
    group = GroupSpec("GL", 3)
    character = [c for c in gl_unipotent_characters(3) if c.label == (2, 1)][0]
    defect = defect_polynomial(group, character)
    assert defect * character.degree == order_polynomial(group)
    assert split_q_part(defect).valuation == 2


def test_defect_polynomial_rejects_bad_degree():
    group = GroupSpec("GL", 2)
    support = gl_support_class((2,))
    with pytest.raises(InvalidRecordError):
        defect_polynomial(group, CharacterRecord(group, "zero", QPolynomial(), support))
    with pytest.raises(InvalidRecordError):
        defect_polynomial(group, CharacterRecord(group, "big", q ** 5, support))


def test_sp4_table():
    characters = sp4_unipotent_characters()
    assert [c.name for c in characters] == ["1", "theta_9", "theta_10", "theta_11", "theta_12", "St"]
    assert [c.support_class.name for c in characters] == ["(4)", "(2,2)", "(2,2)", "(2,2)", "(2,2)", "(1,1,1,1)"]
    theta_11 = characters[3]
    assert theta_11.degree == QPolynomial([0, Fraction(1, 2), 0, Fraction(1, 2)])
    assert [c.degree.evaluate(3) for c in characters] == [1, 24, 6, 15, 15, 81]
    assert [c.degree.evaluate(2) for c in characters] == [1, 9, 1, 5, 5, 16]


def _record(**overrides):
    record = {"group": "C2", "label": "x", "degree": {"numerator": [0, 1, 0, 1], "denominator": 2},
              "support": "(2,2)"}
    record.update(overrides)
    return record


def test_table_from_records():
    characters = load_character_table([_record(), _record(label="y", degree={"numerator": [1]}, support="(4)")])
    assert [c.name for c in characters] == ["x", "y"]
    assert characters[1].degree == QPolynomial.constant(1)


@pytest.mark.parametrize("records,index", [
    ([_record(group="C9x")], 0),
    ([_record(), _record(support="(3,1)")], 1),
    ([_record(degree={"numerator": []})], 0),
    ([_record(degree={"numerator": [0, 0, 0, 0, 0, 1]})], 0),
    ([_record(), _record(), _record(degree={"numerator": [1, 0, 1], "denominator": 3})], 2),
    ([_record(support="(2,2)", degree={"numerator": [0, 1, 0, 1], "denominator": 0})], 0),
    ([{"group": "C2"}], 0),
])
def test_bad_table_records(records, index):
    with pytest.raises(InvalidRecordError) as info:
        load_character_table(records)
    assert info.value.index == index


def test_table_must_be_a_list():
    with pytest.raises(InvalidRecordError):
        load_character_table({"group": "C2"})


def test_table_files(tmp_path):
    path = tmp_path / "gl2.tbl"
    path.write_text(json.dumps([{"group": "GL2", "label": "St", "degree": {"numerator": [0, 1]},
                                 "support": "(1,1)"}]))
    characters = load_character_file(str(path))
    assert characters[0].group == GroupSpec("GL", 2)
    broken = tmp_path / "broken.tbl"
    broken.write_text("[{")
    with pytest.raises(InvalidRecordError):
        load_character_file(str(broken))


def test_embedded_table_resolution(tmp_path):
    assert resolve_table_path("sp4.tbl").endswith("sp4.tbl")
    assert len(load_character_file("sp4.tbl")) == 6
    with pytest.raises(DataMissingError):
        resolve_table_path(str(tmp_path / "e8.tbl"))
