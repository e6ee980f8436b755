from fractions import Fraction

import pytest

from nilext import catalog
from nilext.errors import ContainmentError, DimensionError, JacobiError, MalformedTableError
from nilext.liecore import (
    StructureTable,
    Subspace,
    bracket_subspaces,
    check_lie_algebra,
    subspace_ops,
    validate_lie_algebra,
)

import oracles
from conftest import all_algebras


def T(name):
    return catalog.catalog_lookup(name).table


def test_heisenberg_valid():
    assert validate_lie_algebra(T("A_3_1")) == []


def test_abelian_valid():
    assert validate_lie_algebra(StructureTable.abelian(4)) == []


@pytest.mark.parametrize("name,table", all_algebras(), ids=[n for n, _ in all_algebras()])
def test_catalog_valid(name, table):
    assert validate_lie_algebra(table) == []
    assert oracles.jacobi_defects(table) == {}


def test_mutated_a618_violation_matches_oracle():
    mutated = StructureTable.from_brackets(6, oracles.mutate(catalog.A_6_18_AS_PRINTED, 1, 2, 3, -1) | {(1, 2): {4: 1}})
    expected = oracles.jacobi_defects(mutated)
    assert (1, 2, 3) in expected
    got = {v.triple: tuple(v.defect) for v in validate_lie_algebra(mutated)}
    assert got == expected


def test_printed_a618_fails_at_123():
    got = {v.triple: tuple(v.defect) for v in validate_lie_algebra(catalog.A_6_18_AS_PRINTED)}
    assert got == {(1, 2, 3): (0, 0, 0, 0, 0, -1)}
    with pytest.raises(JacobiError):
        check_lie_algebra(catalog.A_6_18_AS_PRINTED)


def test_malformed_tables():
    with pytest.raises(MalformedTableError):
        StructureTable.from_brackets(3, {(1, 2): {4: 1}})
    with pytest.raises(MalformedTableError):
        StructureTable.from_brackets(3, {(0, 2): {1: 1}})


def test_antisymmetry_and_lowest_terms():
    t = StructureTable.from_brackets(3, {(3, 2): {1: Fraction(2, 4)}})
    assert list(t.basis_bracket(2, 3)) == [Fraction(-1, 2), 0, 0]
    assert list(t.basis_bracket(3, 2)) == [Fraction(1, 2), 0, 0]
    assert not any(t.basis_bracket(2, 2))
    assert t.brackets == {(2, 3): {1: Fraction(-1, 2)}}


def test_zero_terms_dropped():
    t = StructureTable.from_brackets(3, {(1, 2): {3: 0}})
    assert t.is_abelian


def test_bracket_full_a41():
    t = T("A_4_1")
    full = Subspace.full(4)
    assert bracket_subspaces(t, full, full) == Subspace.coordinate(4, [1, 2])


def test_bracket_zero():
    t = T("A_4_1")
    assert bracket_subspaces(t, Subspace.zero(4), Subspace.full(4)).dim == 0


def test_bracket_heisenberg_pair():
    t = T("A_3_1")
    assert bracket_subspaces(t, Subspace.coordinate(3, [2]), Subspace.coordinate(3, [3])) == Subspace.coordinate(3, [1])


def test_bracket_dimension_mismatch():
    with pytest.raises(DimensionError):
        bracket_subspaces(T("A_3_1"), Subspace.full(3), Subspace.full(4))


def test_subspace_ops_examples():
    a, b = Subspace.coordinate(3, [1]), Subspace.coordinate(3, [2])
    assert subspace_ops("sum", a, b) == Subspace.coordinate(3, [1, 2])
    assert subspace_ops("intersect", a, a) == a
    assert subspace_ops("contains", a + b, a) is True
    n2 = Subspace.coordinate(4, [1, 2])
    assert subspace_ops("complement", Subspace.full(4), n2) == Subspace.coordinate(4, [3, 4])
    with pytest.raises(ContainmentError):
        subspace_ops("complement", a, b)
    with pytest.raises(ValueError):
        subspace_ops("xor", a, b)


def test_canonical_equality():
    s1 = Subspace.span([[1, 1, 0], [0, 2, 2]], 3)
    s2 = Subspace.span([[1, 0, -1], [0, 1, 1], [1, 1, 0]], 3)
    assert s1 == s2 and hash(s1) == hash(s2)
    assert s1.pivots == (0, 1)
