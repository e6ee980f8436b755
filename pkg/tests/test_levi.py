from collections import Counter

import pytest

from nilext import catalog
from nilext.derivations import derivation_space, maps_into
from nilext.errors import DimensionError, NotNilpotentError, UnsupportedFactorError
from nilext.levi import (
    EXCLUDED,
    NOT_EXCLUDED,
    IrrepAssignment,
    build_characteristic_flag,
    derivation_levi_check,
    enumerate_irrep_assignments,
    flag_excludes,
    levi_screen,
    sl2_tensor_decomp,
    sl2_weights,
    so3_admissible,
    weight_basis_certificate,
    weight_screen,
)
from nilext.liecore import StructureTable
from nilext.series import associated_graded, lower_term

from conftest import all_algebras

IDS = [n for n, _ in all_algebras()]


def T(name):
    return catalog.catalog_lookup(name).table


def G(name):
    return associated_graded(T(name))


def brute_tensor(a, b):
    """Clebsch-Gordan by weight counting: peel off the highest weight repeatedly."""
    weights = Counter(x + y for x in range(-(a - 1), a, 2) for y in range(-(b - 1), b, 2))
    out = []
    while weights:
        top = max(weights)
        out.append(top + 1)
        for w in range(-top, top + 1, 2):
            weights[w] -= 1
            if not weights[w]:
                del weights[w]
    return tuple(out)


def brute_antisym(a):
    ws = list(range(-(a - 1), a, 2))
    weights = Counter(ws[i] + ws[j] for i in range(a) for j in range(i + 1, a))
    out = []
    while weights:
        top = max(weights)
        out.append(top + 1)
        for w in range(-top, top + 1, 2):
            weights[w] -= 1
            if not weights[w]:
                del weights[w]
    return tuple(out)


def test_tensor_examples():
    assert sl2_tensor_decomp(3, 3, "full") == (5, 3, 1)
    assert sl2_tensor_decomp(3, 3, "antisymmetric") == (3,)
    for b in range(1, 6):
        assert sl2_tensor_decomp(1, b, "full") == (b,)
    with pytest.raises(ValueError):
        sl2_tensor_decomp(2, 3, "antisymmetric")
    with pytest.raises(ValueError):
        sl2_tensor_decomp(0, 3)


@pytest.mark.parametrize("a", range(1, 7))
def test_tensor_against_weight_count(a):
    for b in range(1, 7):
        got = sl2_tensor_decomp(a, b, "full")
        assert got == brute_tensor(a, b)
        assert sum(got) == a * b
    anti = sl2_tensor_decomp(a, a, "antisymmetric")
    assert anti == brute_antisym(a)
    assert sum(anti) == a * (a - 1) // 2


def test_weights_and_so3_rule():
    assert sl2_weights(3) == (2, 0, -2)
    assert so3_admissible([3, 1])
    assert so3_admissible([2, 2])
    assert not so3_admissible([2, 1])


def test_flag_examples():
    f = build_characteristic_flag(T("A_4_1"))
    assert f.dims == (0, 1, 2, 3, 4)
    assert f.recipes == ("0", "n³", "n²", "cent(n²)", "n")
    f = build_characteristic_flag(T("A_5_5"))
    assert f.recipes == ("0", "n³", "n²", "z₂", "cent(n²)", "n")
    f = build_characteristic_flag(T("A_5_2"))
    assert f.recipes == ("0", "n⁴", "n³", "n²", "cent(n³)", "n")
    assert flag_excludes(f)
    assert not flag_excludes(build_characteristic_flag(T("A_3_1")))
    for n in (2, 3, 5):
        f = build_characteristic_flag(StructureTable.abelian(n))
        assert f.dims == (0, n) and not flag_excludes(f)


def test_flag_a615_has_five_dimensional_term():
    f = build_characteristic_flag(T("A_6_15"))
    assert f.dims == (0, 1, 2, 3, 4, 5, 6)
    assert f.recipes[5] == "cent(n³)"
    t = T("A_6_15")
    five = f.subspaces[5]
    for d in derivation_space(t).basis:
        assert maps_into(d, five, five)


@pytest.mark.parametrize("name,table", all_algebras(), ids=IDS)
def test_flag_invariants(name, table):
    f = build_characteristic_flag(table)
    assert f.subspaces[0].dim == 0 and f.subspaces[-1].dim == table.dim
    assert all(a < b for a, b in zip(f.subspaces, f.subspaces[1:]))
    assert f.is_complete == all(b.dim - a.dim == 1 for a, b in zip(f.subspaces, f.subspaces[1:]))
    ders = derivation_space(table).basis
    for s in list(f.subspaces) + list(f.closure):
        for d in ders:
            assert maps_into(d, s, s)
    report = levi_screen(table)
    if flag_excludes(f):
        assert report.overall == EXCLUDED
        assert report.fired_first.rule == "flag"


def test_enumerate_examples():
    assert enumerate_irrep_assignments(G("A_5_1"), "so3") == []
    assert enumerate_irrep_assignments(associated_graded(catalog.filiform(5)), "sl2") == []
    got = enumerate_irrep_assignments(G("A_5_3"), "sl2")
    assert IrrepAssignment("sl2", ((2,), (1,), (2,))) in got


def test_enumerated_assignments_shape():
    for name, table in all_algebras():
        if table.is_abelian:
            continue
        g = associated_graded(table)
        for factor in ("sl2", "so3"):
            for a in enumerate_irrep_assignments(g, factor):
                assert tuple(sum(layer) for layer in a.per_layer) == g.layer_dims
                assert any(x >= 2 for x in a.per_layer[0])
                for layer, dim in zip(a.per_layer, g.layer_dims):
                    if dim == 1:
                        assert layer == (1,)
                    if factor == "so3":
                        assert so3_admissible(layer)


def test_weight_screen_examples():
    r = weight_screen(G("A_6_14_p"), IrrepAssignment("sl2", ((2, 1), (2,), (1,))))
    assert r.status == "contradiction"
    assert "w(e6)=w(e1)+w(e4)=-2" in r.witness and "=2 but already" in r.witness
    r = weight_screen(G("A_6_8"), IrrepAssignment("sl2", ((2, 1), (1,), (2,))))
    assert r.status == "contradiction" and r.certified
    assert "Schur rank" in r.witness
    r = weight_screen(G("A_5_3"), IrrepAssignment("sl2", ((2,), (1,), (2,))))
    assert r.status == "consistent"
    # hand propagation: w(e4), w(e5) = -1, 1 gives w(e3) = 0, w(e2) = -1, w(e1) = 1
    assert "w(e3)=w(e4)+w(e5)=0" in r.witness
    with pytest.raises(DimensionError):
        weight_screen(G("A_5_3"), IrrepAssignment("sl2", ((2,), (1,))))


def test_a613_all_distributions_contradict():
    a = enumerate_irrep_assignments(G("A_6_13"), "sl2")
    assert a
    for assignment in a:
        r = weight_screen(G("A_6_13"), assignment)
        assert r.status == "contradiction" and r.certified
    assert any(weight_screen(G("A_6_13"), x).distributions == 6 for x in a)


def test_certificates():
    for name in ("A_5_3", "A_6_13", "A_6_8"):
        assert weight_basis_certificate(G(name))[0]
    for name in ("A_6_14_p", "A_6_14_m", "A_6_18"):
        assert not weight_basis_certificate(G(name))[0]


def test_derivation_levi():
    assert derivation_levi_check(T("A_3_1")) is None
    assert derivation_levi_check(T("A_6_14_p"))
    assert derivation_levi_check(T("A_6_18"))


@pytest.mark.parametrize(
    "name,expected",
    [
        ("A_3_1", {"sl2": NOT_EXCLUDED, "so3": EXCLUDED}),
        ("A_5_1", {"sl2": NOT_EXCLUDED, "so3": EXCLUDED}),
        ("A_5_3", {"sl2": NOT_EXCLUDED, "so3": EXCLUDED}),
        ("A_6_8", {"sl2": EXCLUDED, "so3": EXCLUDED}),
        ("A_6_13", {"sl2": EXCLUDED, "so3": EXCLUDED}),
        ("A_6_15", {"sl2": EXCLUDED, "so3": EXCLUDED}),
    ],
)
def test_screen_verdicts(name, expected):
    r = levi_screen(T(name), "all", name)
    assert r.factor_verdicts == expected
    assert r.overall == (EXCLUDED if set(expected.values()) == {EXCLUDED} else NOT_EXCLUDED)
    for rec in r.records:
        if rec.verdict == EXCLUDED:
            assert rec.witness


def test_a615_weights_exclude_without_flag():
    r = levi_screen(T("A_6_15"), "sl2")
    weights = next(rec for rec in r.records if rec.rule == "weights")
    assert weights.verdict == EXCLUDED
    assert "all 6 distributions fail" in weights.witness


def test_a613_decided_by_weights():
    r = levi_screen(T("A_6_13"), "sl2")
    assert r.deciding["sl2"].rule == "weights"


def test_survivor_annotations():
    r = levi_screen(T("A_3_1"), "sl2")
    assert any("does not assert" in a for a in r.annotations)
    assert any("dim r − dim n ≤ 1" in a for a in r.annotations)


def test_screen_errors():
    with pytest.raises(UnsupportedFactorError):
        levi_screen(T("A_3_1"), "su2")
    with pytest.raises(NotNilpotentError):
        levi_screen(StructureTable.from_brackets(2, {(1, 2): {2: 1}}))


def test_filtered_schur_is_needed_for_a68():
    # at the graded level A_6_8 is only decided by the filtered table
    g = G("A_6_8")
    a = IrrepAssignment("sl2", ((2, 1), (1,), (2,)))
    assert weight_screen(g, a, table=g.table).status == "consistent"
    assert weight_screen(g, a).status == "contradiction"
    assert lower_term(T("A_6_8"), 2).dim == 3
