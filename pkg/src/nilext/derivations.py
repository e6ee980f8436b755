"""Derivation algebras: the Leibniz system, inner derivations, nilpotency tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .errors import DimensionError, NotADerivationError, NotNilpotentError
from .liecore import StructureTable, Subspace
from .linalg import ZERO, Matrix
from .series import is_nilpotent, lower_term

DerivationMatrix = tuple[tuple[Fraction, ...], ...]


def _freeze(m) -> DerivationMatrix:
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def leibniz_equations(table: StructureTable, allowed=None) -> list[dict[int, Fraction]]:
    """Sparse equations for ``D([e_j,e_k]) = [D e_j, e_k] + [e_j, D e_k]``.

    Unknown ``D[i][j]`` (row i, column j, 0-based) has index ``j*n + i``.
    ``allowed`` optionally restricts the support to a set of ``(i, j)`` entries;
    other entries are fixed at zero.
    """
    n = table.dim
    bb = table._basis_brackets
    eqs = []
    for j in range(n):
        for k in range(j + 1, n):
            bjk = bb[j][k]
            for l in range(n):
                eq: dict[int, Fraction] = {}

                def add(i_row, j_col, c):
                    if c and (allowed is None or (i_row, j_col) in allowed):
                        key = j_col * n + i_row
                        v = eq.get(key, ZERO) + c
                        if v:
                            eq[key] = v
                        else:
                            eq.pop(key, None)

                for m in range(n):
                    add(l, m, bjk[m])
                for i in range(n):
                    add(i, j, -bb[i][k][l])
                    add(i, k, -bb[j][i][l])
                if eq:
                    eqs.append(eq)
    return eqs


def solve_derivations(table: StructureTable, allowed=None) -> list[DerivationMatrix]:
    n = table.dim
    vectors = linalg.sparse_nullspace(leibniz_equations(table, allowed), n * n)
    if allowed is not None:
        # variables outside the support are unconstrained by the equations
        keep = {j * n + i for i, j in allowed}
        vectors = [v for v in vectors if all(not v[x] for x in range(n * n) if x not in keep)]
    return [_freeze([[v[j * n + i] for j in range(n)] for i in range(n)]) for v in vectors]


def is_derivation(table: StructureTable, d: Sequence[Sequence[Fraction]]) -> bool:
    n = table.dim
    if len(d) != n or any(len(r) != n for r in d):
        return False
    cols = [tuple(d[i][j] for i in range(n)) for j in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            lhs = linalg.matvec(d, table.basis_bracket(j + 1, k + 1))
            rhs1 = table.bracket(cols[j], linalg.unit(n, k))
            rhs2 = table.bracket(linalg.unit(n, j), cols[k])
            if any(a - b - c for a, b, c in zip(lhs, rhs1, rhs2)):
                return False
    return True


def _require_derivation(table: StructureTable, d) -> None:
    if len(d) != table.dim:
        raise DimensionError(f"{len(d)}x? matrix for a {table.dim}-dimensional algebra")
    if not is_derivation(table, d):
        raise NotADerivationError("matrix violates the Leibniz rule")


@dataclass(frozen=True)
class DerivationSpace:
    basis: tuple[DerivationMatrix, ...]
    inner_basis: tuple[DerivationMatrix, ...]

    @property
    def dims(self) -> tuple[int, int, int]:
        total, inner = len(self.basis), len(self.inner_basis)
        return total, inner, total - inner


def inner_derivations(table: StructureTable) -> tuple[DerivationMatrix, ...]:
    """Independent ``ad(e_i)``, kept greedily in index order."""
    chosen: list[DerivationMatrix] = []
    span: list = []
    for m in table.ad_basis:
        flat = list(linalg.flatten(m))
        if linalg.rank(span + [flat]) > len(span):
            span.append(flat)
            chosen.append(_freeze(m))
    return tuple(chosen)


def derivation_space(table: StructureTable) -> DerivationSpace:
    return _derivation_space_cached(table)


@lru_cache(maxsize=256)
def _derivation_space_cached(table: StructureTable) -> DerivationSpace:
    return DerivationSpace(tuple(solve_derivations(table)), inner_derivations(table))


def quotient_block(table: StructureTable, d: Sequence[Sequence[Fraction]]) -> Matrix:
    """Matrix of the map induced by ``d`` on ``n/n^2``.

    The basis of ``n/n^2`` is the classes of ``e_p`` for the columns ``p``
    that are not pivots of ``n^2`` (the deterministic complement).
    """
    n2 = lower_term(table, 2)
    free = [p for p in range(table.dim) if p not in set(n2.pivots)]
    cols = []
    for p in free:
        image = n2.reduce(linalg.matvec(d, linalg.unit(table.dim, p)))
        cols.append([image[q] for q in free])
    return linalg.transpose(cols) if cols else []


def is_nilpotent_derivation(table: StructureTable, d: Sequence[Sequence[Fraction]]) -> bool:
    _require_derivation(table, d)
    return linalg.is_nilpotent_matrix(d)


def is_nilindependent(table: StructureTable, ds: Sequence[Sequence[Sequence[Fraction]]]) -> bool | None:
    """Whether no nontrivial rational combination of ``ds`` is nilpotent.

    Works on the induced maps on ``n/n^2``, which are nilpotent exactly when
    the derivations are.  Spans of dimension up to three are decided through
    the trace conditions ``tr(M) = ... = tr(M^m) = 0``; larger independent
    spans return ``None`` (undecided).
    """
    if any(len(d) != table.dim for d in ds):
        raise DimensionError("derivations of different dimensions")
    for d in ds:
        _require_derivation(table, d)
    if not ds:
        return True
    if not is_nilpotent(table):
        raise NotNilpotentError("nilindependence is decided through n/n^2 of a nilpotent algebra")
    blocks = [quotient_block(table, d) for d in ds]
    if linalg.rank([list(linalg.flatten(b)) for b in blocks]) < len(blocks):
        return False
    if len(blocks) == 1:
        return not linalg.is_nilpotent_matrix(blocks[0])
    if len(blocks) > 3:
        return None
    return _no_nilpotent_in_span(blocks)


def _no_nilpotent_in_span(blocks) -> bool | None:
    import sympy

    m = len(blocks[0])
    cs = sympy.symbols(f"c0:{len(blocks)}")
    mats = [sympy.Matrix(b) for b in blocks]
    comb = sum((c * b for c, b in zip(cs, mats)), sympy.zeros(m, m))
    polys = []
    power = sympy.eye(m)
    for _ in range(m):
        power = (power * comb).applyfunc(sympy.expand)
        polys.append(sympy.expand(power.trace()))
    polys = [p for p in polys if p != 0]
    if not polys:
        return False
    basis = sympy.groebner(polys, *cs, order="grevlex")
    if basis.is_zero_dimensional:
        # homogeneous ideal with finitely many zeros vanishes only at the origin
        return True
    # look for a nonzero rational zero: normalize the first nonzero coordinate
    for lead in range(len(cs)):
        subs = {cs[i]: 0 for i in range(lead)}
        subs[cs[lead]] = 1
        system = [sympy.expand(p.subs(subs)) for p in polys]
        system = [p for p in system if p != 0]
        rest = cs[lead + 1 :]
        if any(p.is_number for p in system):
            continue
        if not system:
            return False
        for sol in sympy.solve(system, rest, dict=True):
            values = [sol.get(c, sympy.Integer(0)).subs({c: 0 for c in rest}) for c in rest]
            if all(v.is_rational for v in values):
                return False
    # only irrational or complex nilpotent combinations
    return None


def is_characteristically_nilpotent(table: StructureTable) -> bool:
    """True iff every derivation is nilpotent."""
    if not is_nilpotent(table):
        raise NotNilpotentError("characteristic nilpotency is defined for nilpotent algebras")
    basis = derivation_space(table).basis
    return linalg.generates_nilpotent_algebra(basis, table.dim)


def maps_into(d: Sequence[Sequence[Fraction]], source: Subspace, target: Subspace) -> bool:
    return all(target.contains_vector(linalg.matvec(d, v)) for v in source.rows)
