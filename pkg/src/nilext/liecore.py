"""Lie algebras given by rational structure constants, and subspace arithmetic.

Basis indices are 1-based (``e1 .. en``) wherever they are exposed; vectors
are plain tuples of :class:`~fractions.Fraction` whose position ``i`` holds the
coefficient of ``e_{i+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import linalg
from .errors import ContainmentError, DimensionError, JacobiError, MalformedTableError, format_vector
from .linalg import ZERO, Matrix, Vector

# Scalars are exact rationals.
Scalar = Fraction


def _coerce_terms(terms) -> dict[int, Fraction]:
    items = terms.items() if isinstance(terms, Mapping) else terms
    out: dict[int, Fraction] = {}
    for l, c in items:
        c = Fraction(c)
        out[int(l)] = out.get(int(l), ZERO) + c
    return {l: c for l, c in sorted(out.items()) if c}


@dataclass(frozen=True)
class StructureTable:
    """Sparse antisymmetric table ``[e_j, e_k] = sum_l N_jk^l e_l`` (j < k stored)."""

    dim: int
    entries: tuple[tuple[tuple[int, int], tuple[tuple[int, Fraction], ...]], ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise MalformedTableError(f"dimension must be positive, got {self.dim}")
        for (j, k), terms in self.entries:
            if not (1 <= j < k <= self.dim):
                raise MalformedTableError(f"bracket index pair ({j},{k}) out of range for dim {self.dim}")
            if not terms:
                raise MalformedTableError(f"zero bracket ({j},{k}) must be omitted")
            for l, c in terms:
                if not 1 <= l <= self.dim:
                    raise MalformedTableError(
                        f"coefficient index {l} in bracket ({j},{k}) out of range [1, {self.dim}]"
                    )
                if not c:
                    raise MalformedTableError(f"zero coefficient stored in bracket ({j},{k})")

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping | Iterable = ()) -> "StructureTable":
        """Build a table from ``{(j, k): {l: c}}`` (or an iterable of such pairs).

        Pairs with ``j > k`` are stored as the negated ``(k, j)`` bracket.
        """
        items = brackets.items() if isinstance(brackets, Mapping) else brackets
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (j, k), terms in items:
            j, k = int(j), int(k)
            sign = 1
            if j == k:
                if _coerce_terms(terms):
                    raise MalformedTableError(f"[e{j},e{j}] must vanish")
                continue
            if j > k:
                j, k, sign = k, j, -1
            if (j, k) in table:
                raise MalformedTableError(f"bracket ({j},{k}) given twice")
            coerced = {l: sign * c for l, c in _coerce_terms(terms).items()}
            table[(j, k)] = coerced
        entries = tuple(
            (pair, tuple(sorted(terms.items()))) for pair, terms in sorted(table.items()) if terms
        )
        return cls(dim, entries)

    @classmethod
    def abelian(cls, dim: int) -> "StructureTable":
        return cls(dim, ())

    @cached_property
    def brackets(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {pair: dict(terms) for pair, terms in self.entries}

    def structure_constant(self, j: int, k: int, l: int) -> Fraction:
        if j == k:
            return ZERO
        if j < k:
            return self.brackets.get((j, k), {}).get(l, ZERO)
        return -self.brackets.get((k, j), {}).get(l, ZERO)

    def basis_bracket(self, j: int, k: int) -> Vector:
        """``[e_j, e_k]`` as a dense vector (1-based indices)."""
        return self._basis_brackets[j - 1][k - 1]

    @cached_property
    def _basis_brackets(self) -> list[list[Vector]]:
        n = self.dim
        zero = (ZERO,) * n
        out = [[zero] * n for _ in range(n)]
        for (j, k), terms in self.entries:
            v = [ZERO] * n
            for l, c in terms:
                v[l - 1] = c
            out[j - 1][k - 1] = tuple(v)
            out[k - 1][j - 1] = tuple(-x for x in v)
        return out

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        n = self.dim
        out = [ZERO] * n
        for (j, k), terms in self.entries:
            c = x[j - 1] * y[k - 1] - x[k - 1] * y[j - 1]
            if c:
                for l, a in terms:
                    out[l - 1] += c * a
        return tuple(out)

    def ad(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of ``ad(x)``; column ``i`` holds ``[x, e_{i+1}]``."""
        cols = [self.bracket(x, linalg.unit(self.dim, i)) for i in range(self.dim)]
        return linalg.transpose(cols)

    @cached_property
    def ad_basis(self) -> list[Matrix]:
        return [self.ad(linalg.unit(self.dim, i)) for i in range(self.dim)]

    @property
    def is_abelian(self) -> bool:
        return not self.entries

    def __str__(self) -> str:
        parts = []
        for (j, k), terms in self.entries:
            v = [ZERO] * self.dim
            for l, c in terms:
                v[l - 1] = c
            parts.append(f"[e{j},e{k}]={format_vector(v)}")
        return f"dim {self.dim}: " + (", ".join(parts) if parts else "abelian")


class Violation(NamedTuple):
    triple: tuple[int, int, int]
    defect: Vector


def validate_lie_algebra(table: StructureTable) -> list[Violation]:
    """Every basis triple ``j < k < l`` on which the Jacobi identity fails.

    An empty list means the table defines a Lie algebra.
    """
    n = table.dim
    br = table.bracket
    violations = []
    basis = [linalg.unit(n, i) for i in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            for l in range(k + 1, n):
                x, y, z = basis[j], basis[k], basis[l]
                a = br(x, table.basis_bracket(k + 1, l + 1))
                b = br(y, table.basis_bracket(l + 1, j + 1))
                c = br(z, table.basis_bracket(j + 1, k + 1))
                defect = tuple(p + q + r for p, q, r in zip(a, b, c))
                if any(defect):
                    violations.append(Violation((j + 1, k + 1, l + 1), defect))
    return violations


def check_lie_algebra(table: StructureTable) -> StructureTable:
    violations = validate_lie_algebra(table)
    if violations:
        raise JacobiError(violations)
    return table


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^n`` stored by its reduced row echelon basis.

    Rows are canonicalized on construction, so ``==`` is subspace equality.
    """

    ambient_dim: int
    rows: tuple[Vector, ...] = field(default=())

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ambient_dim:
                raise DimensionError(f"row of length {len(r)} in ambient dimension {self.ambient_dim}")
        reduced, _ = linalg.rref(self.rows, self.ambient_dim) if self.rows else ([], [])
        object.__setattr__(self, "rows", tuple(tuple(r) for r in reduced))

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(tuple(Fraction(x) for x in v) for v in vectors))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(linalg.unit(n, i) for i in range(n)))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        """``span{e_i : i in indices}`` with 1-based indices."""
        return cls(n, tuple(linalg.unit(n, i - 1) for i in indices))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> tuple[Vector, ...]:
        return self.rows

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        """0-based pivot columns."""
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.rows)

    def contains_vector(self, v: Sequence[Fraction]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        w = list(v)
        for r, p in zip(self.rows, self.pivots):
            if w[p]:
                f = w[p]
                w = [a - f * b for a, b in zip(w, r)]
        return not any(w)

    __contains__ = contains_vector

    def contains(self, other: "Subspace") -> bool:
        _check_same(self, other)
        return other.dim <= self.dim and all(self.contains_vector(r) for r in other.rows)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and other.contains(self)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_same(self, other)
        return Subspace(self.ambient_dim, self.rows + other.rows)

    def annihilator(self) -> "Subspace":
        """Linear functionals (as row vectors) vanishing on this subspace."""
        return Subspace(self.ambient_dim, tuple(linalg.nullspace(self.rows, self.ambient_dim)))

    def __and__(self, other: "Subspace") -> "Subspace":
        _check_same(self, other)
        if self.contains(other):
            return other
        if other.contains(self):
            return self
        return (self.annihilator() + other.annihilator()).annihilator()

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Canonical representative of ``v`` modulo this subspace."""
        w = list(v)
        for r, p in zip(self.rows, self.pivots):
            if w[p]:
                f = w[p]
                w = [a - f * b for a, b in zip(w, r)]
        return tuple(w)

    def complement_in(self, outer: "Subspace") -> "Subspace":
        """Deterministic complement of ``self`` inside ``outer``.

        Takes the echelon rows of ``outer`` whose pivot columns are not pivots
        of ``self``; since pivots of a subspace are pivots of any superspace,
        these rows together with ``self`` span ``outer``.
        """
        _check_same(self, outer)
        if not outer.contains(self):
            raise ContainmentError("complement requested for a subspace that is not contained")
        own = set(self.pivots)
        return Subspace(outer.ambient_dim, tuple(r for r, p in zip(outer.rows, outer.pivots) if p not in own))

    def __repr__(self) -> str:
        inner = ", ".join(format_vector(r) for r in self.rows)
        return f"Subspace({self.ambient_dim}; {{{inner}}})"


def _check_same(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def bracket_subspaces(table: StructureTable, a: Subspace, b: Subspace) -> Subspace:
    """``span{[x, y] : x in a, y in b}``."""
    if a.ambient_dim != table.dim or b.ambient_dim != table.dim:
        raise DimensionError("subspace does not live in the algebra")
    return Subspace.span((table.bracket(x, y) for x in a.rows for y in b.rows), table.dim)


def subspace_ops(mode: str, a: Subspace, b: Subspace):
    """Lattice operations: ``sum``, ``intersect``, ``complement`` (of b in a), ``contains`` (b in a)."""
    if mode == "sum":
        return a + b
    if mode == "intersect":
        return a & b
    if mode == "complement":
        return b.complement_in(a)
    if mode == "contains":
        return a.contains(b)
    raise ValueError(f"unknown subspace operation {mode!r}")
