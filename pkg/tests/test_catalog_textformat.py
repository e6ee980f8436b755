from fractions import Fraction

import pytest

from nilext import catalog
from nilext.errors import JacobiError, NotFoundError, ParseError
from nilext.liecore import StructureTable
from nilext.series import is_nilpotent
from nilext.textformat import parse_algebra_text, read_algebra_file, serialize_algebra

from conftest import all_algebras

IDS = [n for n, _ in all_algebras()]


def brackets(name):
    return catalog.catalog_lookup(name).table.brackets


def test_printed_a618_verbatim():
    assert catalog.A_6_18_AS_PRINTED.brackets == {
        (1, 2): {3: 1}, (1, 3): {4: 1}, (1, 4): {6: 1}, (2, 3): {5: 1}, (2, 4): {6: 1}
    }
    entry = catalog.catalog_lookup("A_6_18")
    assert entry.provenance == catalog.CORRECTED
    assert entry.table.brackets[(2, 5)] == {6: 1}
    assert (2, 4) not in entry.table.brackets


def test_verbatim_tables():
    assert brackets("A_5_3") == {(3, 4): {2: 1}, (3, 5): {1: 1}, (4, 5): {3: 1}}
    assert brackets("A_6_8") == brackets("A_5_3") | {(4, 6): {2: -1}}
    assert brackets("A_6_9") == brackets("A_5_3") | {(4, 6): {1: -1}}
    assert brackets("A_6_15")[(1, 2)] == {3: 1, 5: 1}
    assert brackets("A_6_14(-1)")[(2, 5)] == {6: -1}
    assert brackets("A_6_14(+1)")[(2, 5)] == {6: 1}


def test_lookup_spellings_and_families():
    assert catalog.catalog_lookup("A_{5,3}").id == "A_5_3"
    t = catalog.catalog_lookup("abelian(3)").table
    assert t.dim == 3 and t.is_abelian
    assert catalog.catalog_lookup("t(3)").table == catalog.heisenberg(1)
    assert catalog.heisenberg(2).dim == 5
    assert catalog.filiform(6).dim == 6


def test_lookup_errors():
    with pytest.raises(NotFoundError, match="Available"):
        catalog.catalog_lookup("A_9_9")
    with pytest.raises(NotFoundError, match="reserved"):
        catalog.catalog_lookup("A_6_1")
    with pytest.raises(NotFoundError):
        catalog.catalog_lookup("filiform(2)")


@pytest.mark.parametrize("name,table", all_algebras(), ids=IDS)
def test_entries_nilpotent_and_round_trip(name, table):
    assert is_nilpotent(table)
    text = serialize_algebra(table, header=name)
    assert parse_algebra_text(text) == table
    assert serialize_algebra(parse_algebra_text(text), header=name) == text


def test_parse_examples():
    assert parse_algebra_text("dim 3\nbracket 2 3 : 1 1") == catalog.catalog_lookup("A_3_1").table
    assert parse_algebra_text("dim 2\n") == StructureTable.abelian(2)
    text = "dim 6\nbracket 1 2 : 3 1, 5 1\nbracket 1 3 : 4 1\nbracket 1 4 : 6 1\nbracket 2 5 : 6 1\n"
    assert parse_algebra_text(text) == catalog.catalog_lookup("A_6_15").table


def test_parse_fractions_and_comments():
    t = parse_algebra_text("# a comment\ndim 3  # trailing\n\nbracket 2 3 : 1 -3/6\n")
    assert t.brackets == {(2, 3): {1: Fraction(-1, 2)}}


@pytest.mark.parametrize(
    "text,line",
    [
        ("bracket 1 2 : 3 1", 1),
        ("dim 3\ndim 3", 2),
        ("dim 3\nbracket 1 2 3 1", 2),
        ("dim 3\nbracket 1 4 : 3 1", 2),
        ("dim 3\nbracket 2 1 : 3 1", 2),
        ("dim 3\nbracket 1 2 : 3 1\nbracket 1 2 : 3 1", 3),
        ("dim 3\nbracket 1 2 : 3 1, 3 2", 2),
        ("dim 3\nbracket 1 2 : 3 0", 2),
        ("dim 3\nbracket 1 2 : 3 1/0", 2),
        ("dim 3\nbracket 1 2 : 9 1", 2),
        ("dim 0", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_algebra_text(text)
    assert info.value.line == line


def test_parse_empty():
    with pytest.raises(ParseError):
        parse_algebra_text("# nothing\n")


def test_parse_validates_jacobi(tmp_path):
    text = serialize_algebra(catalog.A_6_18_AS_PRINTED)
    with pytest.raises(JacobiError):
        parse_algebra_text(text)
    assert parse_algebra_text(text, validate=False) == catalog.A_6_18_AS_PRINTED
    p = tmp_path / "x.txt"
    p.write_bytes(b"\xff\xfe")
    with pytest.raises(ParseError):
        read_algebra_file(p)
