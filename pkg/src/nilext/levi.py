"""Obstructions to Levi extensions by rank-one factors (sl(2), so(3)).

The screens are one-directional: "excluded" is a proof that no semisimple
factor of the requested type can act nontrivially on the algebra; anything
else is only the absence of such a proof.

Rules, in the order they run:

``flag``
    A complete chain of characteristic ideals forces every Levi action to
    be trivial (each quotient is a one-dimensional module).
``irreps``
    Enumerate the irreducible decompositions of the layers ``n^k/n^{k+1}``
    that are compatible with ``n^k = [n^{k-1}, n]``.
``weights``
    Propagate Cartan weights through the graded brackets and apply Schur's
    lemma to invariant elements of the first layer.
``submodules``
    Characteristic ideals cut submodules out of every layer, whose
    dimensions must be sums of the assigned irreps.
``derivation_levi``
    A semisimple factor embeds in the Lie algebra of maps that derivations
    induce on ``n/n^2``; if that algebra is solvable nothing can act.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Sequence

from sympy.utilities.iterables import multiset_permutations

from . import linalg
from .derivations import derivation_space, quotient_block, solve_derivations
from .errors import DimensionError, NotNilpotentError, UnsupportedFactorError, format_vector
from .liecore import StructureTable, Subspace
from .series import (
    GradedAlgebra,
    associated_graded,
    characteristic_series,
    lower_central_series,
    lower_term,
    relative_ideal,
)

FACTORS = ("sl2", "so3")
DEFAULT_MAX_DISTRIBUTIONS = 100_000

EXCLUDED = "excluded"
NOT_EXCLUDED = "not-excluded"
UNDECIDED = "undecided"

_SUP = str.maketrans("0123456789()", "⁰¹²³⁴⁵⁶⁷⁸⁹⁽⁾")
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _check_factor(factor: str) -> None:
    if factor not in FACTORS:
        raise UnsupportedFactorError(
            f"unsupported Levi factor {factor!r}; only rank-one factors {', '.join(FACTORS)} are screened"
        )


def _require_nilpotent(table: StructureTable) -> None:
    if lower_central_series(table).last.dim:
        raise NotNilpotentError("Levi screens need a nilpotent radical")


def _multiset(ms: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(ms, reverse=True)) + "}"


# ---------------------------------------------------------------- flags


@dataclass(frozen=True)
class CharacteristicFlag:
    """Longest chain of characteristic ideals found, with construction recipes.

    ``closure`` holds every characteristic subspace generated on the way,
    mapped to its recipe label.
    """

    subspaces: tuple[Subspace, ...]
    recipes: tuple[str, ...]
    is_complete: bool
    closure: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.subspaces)

    def __str__(self) -> str:
        return " ⊂ ".join(self.recipes)


def _recipe_key(recipe, best_of):
    kind = recipe[0]
    if kind == "trivial":
        return (0, 0)
    if kind == "lower":
        return (1, recipe[1])
    if kind == "cent":
        inner = best_of(recipe[1])
        if inner[0] == "lower":
            return (2, -inner[1])
        return (5, 0)
    if kind == "upper":
        return (3, recipe[1])
    if kind == "derived":
        return (4, recipe[1])
    return (6, 0)


def build_characteristic_flag(table: StructureTable) -> CharacteristicFlag:
    return _flag_cached(table)


@lru_cache(maxsize=256)
def _flag_cached(table: StructureTable) -> CharacteristicFlag:
    _require_nilpotent(table)
    n = table.dim
    order: list[Subspace] = []
    recipes: dict[Subspace, list] = {}

    def add(s: Subspace, recipe) -> bool:
        new = s not in recipes
        if new:
            order.append(s)
            recipes[s] = []
        recipes[s].append(recipe)
        return new

    add(Subspace.zero(n), ("trivial", "0"))
    add(Subspace.full(n), ("trivial", "n"))
    for k, s in enumerate(characteristic_series(table, "lower_central"), start=1):
        add(s, ("lower", k))
    for k, s in enumerate(characteristic_series(table, "upper_central"), start=1):
        add(s, ("upper", k))
    for k, s in enumerate(characteristic_series(table, "derived")):
        add(s, ("derived", k))

    zero = Subspace.zero(n)
    done: set[tuple[Subspace, Subspace]] = set()
    for _ in range(2**n):
        grew = False
        current = list(order)
        for x in current:
            for y in [zero] + current:
                if (x, y) in done:
                    continue
                done.add((x, y))
                s = relative_ideal(table, x, y)
                recipe = ("cent", x) if y == zero else ("rel", x, y)
                grew |= add(s, recipe)
        if not grew:
            break

    index = {s: i for i, s in enumerate(order)}
    best: dict[Subspace, tuple] = {}

    def best_of(s: Subspace):
        return best[s]

    for s in order:
        usable = [
            r for r in recipes[s]
            if all(index[x] < index[s] for x in r[1:] if isinstance(x, Subspace))
        ]
        best[s] = min(usable, key=lambda r: _recipe_key(r, best_of))

    labels: dict[Subspace, str] = {}

    def label(s: Subspace) -> str:
        if s in labels:
            return labels[s]
        r = best[s]
        if r[0] == "trivial":
            text = r[1]
        elif r[0] == "lower":
            text = "n" + str(r[1]).translate(_SUP) if r[1] > 1 else "n"
        elif r[0] == "upper":
            text = "z" + str(r[1]).translate(_SUB)
        elif r[0] == "derived":
            text = "n" + f"({r[1]})".translate(_SUP) if r[1] else "n"
        elif r[0] == "cent":
            text = f"cent({label(r[1])})"
        else:
            text = f"rel({label(r[1])}, {label(r[2])})"
        labels[s] = text
        return text

    prio = {s: _recipe_key(best[s], best_of)[0] for s in order}
    by_dim = sorted(order, key=lambda s: (s.dim, index[s]))
    # longest chain ending at each subspace; ties go to the smaller label priority sum
    chain_to: dict[Subspace, tuple] = {}
    for s in by_dim:
        options = [((1, -prio[s]), (s,))]
        for t in by_dim:
            if t.dim >= s.dim:
                break
            if t in chain_to and s.contains(t):
                (length, score), path = chain_to[t]
                options.append(((length + 1, score - prio[s]), path + (s,)))
        chain_to[s] = max(options, key=lambda o: o[0])
    full = Subspace.full(n)
    path = chain_to[full][1]
    if path[0].dim != 0:
        path = (zero,) + path
    complete = [s.dim for s in path] == list(range(n + 1))
    closure = {s: label(s) for s in order}
    return CharacteristicFlag(tuple(path), tuple(label(s) for s in path), complete, closure)


def flag_excludes(flag: CharacteristicFlag) -> bool:
    return flag.is_complete


# ------------------------------------------------------- representations


def sl2_tensor_decomp(a: int, b: int, part: str = "full") -> tuple[int, ...]:
    """Irreducible dimensions in ``a ⊗ b`` (or in ``Λ²a``), largest first."""
    if a < 1 or b < 1:
        raise ValueError("irrep dimensions are positive")
    if part == "full":
        return tuple(range(a + b - 1, abs(a - b), -2))
    if part in ("antisymmetric", "antisym"):
        if a != b:
            raise ValueError("the antisymmetric part is only defined for a ⊗ a")
        return tuple(range(2 * a - 3, 0, -4))
    raise ValueError(f"unknown tensor part {part!r}")


def sl2_weights(d: int) -> tuple[int, ...]:
    return tuple(range(d - 1, -d, -2))


def so3_admissible(dims: Iterable[int]) -> bool:
    """Complexified real so(3) modules: even-dimensional irreps come in pairs."""
    counts = Counter(dims)
    return all(c % 2 == 0 for d, c in counts.items() if d % 2 == 0)


@dataclass(frozen=True)
class IrrepAssignment:
    factor: str
    per_layer: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "per_layer", tuple(tuple(sorted(layer, reverse=True)) for layer in self.per_layer)
        )

    def __str__(self) -> str:
        return " ".join(f"m{k}={_multiset(layer)}" for k, layer in enumerate(self.per_layer, start=1))


def _partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return out


def _sub_multisets(pool: Counter, target: int) -> list[tuple[int, ...]]:
    """Sub-multisets of ``pool`` with total ``target``, largest parts first."""
    values = sorted(pool, reverse=True)
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, acc: tuple[int, ...]):
        if remaining == 0:
            out.append(acc)
            return
        if i == len(values):
            return
        v = values[i]
        for c in range(min(pool[v], remaining // v), -1, -1):
            rec(i + 1, remaining - c * v, acc + (v,) * c)

    rec(0, target, ())
    return out


def _layer2_pool(layer1: Sequence[int]) -> Counter:
    pool: Counter = Counter()
    for a in layer1:
        pool.update(sl2_tensor_decomp(a, a, "antisymmetric"))
    for i, j in combinations(range(len(layer1)), 2):
        pool.update(sl2_tensor_decomp(layer1[i], layer1[j], "full"))
    return pool


def _product_pool(previous: Sequence[int], layer1: Sequence[int]) -> Counter:
    pool: Counter = Counter()
    for b in previous:
        for a in layer1:
            pool.update(sl2_tensor_decomp(b, a, "full"))
    return pool


def _layer_dims(graded_or_dims) -> tuple[int, ...]:
    if isinstance(graded_or_dims, GradedAlgebra):
        return graded_or_dims.layer_dims
    return tuple(graded_or_dims)


def enumerate_irrep_assignments(graded, factor: str) -> list[IrrepAssignment]:
    return _enumerate(_layer_dims(graded), factor)[0]


def explain_irrep_assignments(graded, factor: str) -> tuple[list[IrrepAssignment], list[str]]:
    """Assignments together with the reason every pruned branch died."""
    return _enumerate(_layer_dims(graded), factor)


@lru_cache(maxsize=256)
def _enumerate(dims: tuple[int, ...], factor: str):
    _check_factor(factor)
    found: list[IrrepAssignment] = []
    pruned: list[str] = []
    if not dims:
        return found, ["no layers"]

    def admissible(layer) -> bool:
        return factor != "so3" or so3_admissible(layer)

    def rec(layers: list[tuple[int, ...]]):
        k = len(layers) + 1
        if k > len(dims):
            found.append(IrrepAssignment(factor, tuple(layers)))
            return
        m = dims[k - 1]
        if k == 2:
            pool = _layer2_pool(layers[0])
            origin = "Λ²(m1)"
        else:
            pool = _product_pool(layers[-1], layers[0])
            origin = f"m{k - 1}⊗m1"
        options = [o for o in _sub_multisets(pool, m) if admissible(o)]
        if not options:
            prefix = " ".join(f"m{i}={_multiset(l)}" for i, l in enumerate(layers, start=1))
            reason = f"{prefix}: no {factor} module of dim {m} in {origin}={_multiset(pool.elements())}"
            if factor == "so3":
                reason += " (even dims need even multiplicity)"
            pruned.append(reason)
            return
        for o in options:
            rec(layers + [o])

    for first in _partitions(dims[0]):
        if max(first) < 2:
            pruned.append(f"m1={_multiset(first)}: trivial action")
            continue
        if not admissible(first):
            pruned.append(f"m1={_multiset(first)}: not an so3 module (even dims need even multiplicity)")
            continue
        rec([first])
    return found, pruned


# ------------------------------------------------------------ weights


@dataclass(frozen=True)
class WeightScreenResult:
    """``status`` is ``consistent``, ``contradiction`` or ``undecided``.

    A contradiction is ``certified`` when it is a valid obstruction; weight
    contradictions are certified only when the graded basis is known to
    diagonalize every torus of degree-zero derivations up to conjugacy.
    """

    status: str
    witness: str
    certified: bool = True
    distributions: int = 0


def _common_subsums(a: Sequence[int], b: Sequence[int]) -> set[int]:
    common = Counter(a) & Counter(b)
    sums = {0}
    for v in common.elements():
        sums |= {s + v for s in sums}
    return sums


def _schur_subspace_check(table: StructureTable, assignment: IrrepAssignment, closure) -> str | None:
    """Schur's lemma for invariant lifts of one-dimensional submodules of ``n/n^2``."""
    layers = assignment.per_layer
    depth = len(layers)
    n2 = lower_term(table, 2)
    graded = associated_graded(table)
    for s, label in closure.items():
        outside = [r for r in s.rows if not n2.contains_vector(r)]
        if (s + n2).dim - n2.dim != 1:
            continue
        x = outside[0]
        shift = None
        for t in range(1, depth + 1):
            if all(
                lower_term(table, k + t).contains(_bracket_with(table, x, lower_term(table, k)))
                for k in range(1, depth + 1)
            ):
                shift = t
            else:
                break
        if shift is None or shift >= depth:
            continue
        if any(set(layers[i]) != {1} for i in range(1, shift)):
            continue
        for k in range(1, depth - shift + 1):
            source = [graded.basis[i - 1] for i in graded.layer_indices(k)]
            below = lower_term(table, k + shift + 1)
            images = [below.reduce(table.bracket(x, v)) for v in source]
            r = linalg.rank(images) if images else 0
            allowed = _common_subsums(layers[k - 1], layers[k + shift - 1])
            if r not in allowed:
                return (
                    f"{label} spans an invariant line of n/n² (x = {format_vector(x)}); "
                    f"ad(x) maps layer {k} to layer {k + shift} with rank {r}, but "
                    f"{_multiset(layers[k - 1])} and {_multiset(layers[k + shift - 1])} share no "
                    f"components of total dimension {r}"
                )
    return None


def _bracket_with(table: StructureTable, x, s: Subspace) -> Subspace:
    return Subspace.span((table.bracket(x, r) for r in s.rows), table.dim)


def submodule_check(table: StructureTable, assignment: IrrepAssignment, closure=None) -> str | None:
    """Characteristic ideals meet each layer in a submodule; its dimension must be a sum of parts."""
    closure = build_characteristic_flag(table).closure if closure is None else closure
    layers = assignment.per_layer
    for s, label in closure.items():
        for k, layer in enumerate(layers, start=1):
            nk, nk1 = lower_term(table, k), lower_term(table, k + 1)
            d = ((s & nk) + nk1).dim - nk1.dim
            sums = {0}
            for v in layer:
                sums |= {t + v for t in sums}
            if d not in sums:
                return (
                    f"{label} meets layer {k} in a submodule of dimension {d}, "
                    f"not a sum of parts of {_multiset(layer)}"
                )
    return None


def schur_rank_check(table: StructureTable, assignment: IrrepAssignment, closure=None) -> str | None:
    closure = build_characteristic_flag(table).closure if closure is None else closure
    return _schur_subspace_check(table, assignment, closure)


@lru_cache(maxsize=256)
def weight_basis_certificate(graded: GradedAlgebra) -> tuple[bool, str]:
    """Is the diagonal torus of degree-zero derivations of gr(n) maximal?

    If so every semisimple degree-zero derivation, in particular the Cartan
    element of a Levi factor, is conjugate by a graded automorphism to a
    diagonal one, so weights may be placed on the graded basis vectors.
    """
    table = graded.table
    n = table.dim
    layer = graded.layer_of_index
    same_layer = {(i, j) for i in range(n) for j in range(n) if layer[i + 1] == layer[j + 1]}
    torus = solve_derivations(table, {(i, i) for i in range(n)})
    chars = [tuple(t[i][i] for t in torus) for i in range(n)]
    classes: dict[tuple, list[int]] = {}
    for i, c in enumerate(chars):
        classes.setdefault(c, []).append(i)
    centralizer = solve_derivations(
        table, {(i, j) for i, j in same_layer if chars[i] == chars[j]}
    )
    # traceless part on each weight class
    constraints = [
        [sum((c[i][i] for i in members), Fraction(0)) for c in centralizer]
        for members in classes.values()
    ]
    coeffs = linalg.nullspace(constraints, len(centralizer)) if centralizer else []
    traceless = [
        [[sum((a * c[i][j] for a, c in zip(v, centralizer) if a), Fraction(0)) for j in range(n)] for i in range(n)]
        for v in coeffs
    ]
    spanned = linalg.rank([list(linalg.flatten(m)) for m in list(torus) + traceless]) if centralizer else 0
    if spanned != len(centralizer):
        return False, "diagonal torus is not complemented by traceless weight-class blocks"
    if not linalg.generates_nilpotent_algebra(traceless, n):
        return False, (
            f"diagonal torus (dim {len(torus)}) is not maximal in degree-zero derivations of gr(n): "
            "its centralizer has semisimple elements mixing basis vectors of equal weight"
        )
    return True, f"diagonal torus (dim {len(torus)}) is maximal"


def _distribution_count(layer1: Sequence[int]) -> int:
    weights = Counter(w for d in layer1 for w in sl2_weights(d))
    return factorial(sum(weights.values())) // prod(factorial(c) for c in weights.values())


def _propagate(graded: GradedAlgebra, first_layer: Sequence[int], weights: Sequence[int]):
    """Weights of every graded basis vector, or the first conflict."""
    table = graded.table
    w: dict[int, int] = dict(zip(first_layer, weights))
    steps: list[str] = []
    pairs = sorted(
        table.brackets.items(),
        key=lambda item: (max(graded.layer_of_index[l] for l in item[1]), item[0]),
    )
    for (j, k), terms in pairs:
        if j not in w or k not in w:
            continue
        value = w[j] + w[k]
        for l in terms:
            if l in w and w[l] != value:
                if graded.layer_of_index[l] == 1:
                    how = "assigned"
                else:
                    how = "already"
                steps.append(f"w(e{l})=w(e{j})+w(e{k})={value} but {how} w(e{l})={w[l]}")
                return None, steps
            if l not in w:
                w[l] = value
                steps.append(f"w(e{l})=w(e{j})+w(e{k})={value}")
    return w, steps


def weight_screen(
    graded: GradedAlgebra,
    assignment: IrrepAssignment,
    max_distributions: int = DEFAULT_MAX_DISTRIBUTIONS,
    table: StructureTable | None = None,
) -> WeightScreenResult:
    """Look for a Cartan weight distribution compatible with the assignment.

    Also applies Schur's lemma: first through characteristic subspaces of
    the (filtered) algebra ``table`` (default: the algebra the graded one was
    built from), then per distribution through the weight-zero vector of
    layer 1 when it is the only odd irrep and is trivial.
    """
    _check_factor(assignment.factor)
    if tuple(sum(layer) for layer in assignment.per_layer) != graded.layer_dims:
        raise DimensionError(
            f"assignment layer sums {[sum(l) for l in assignment.per_layer]} do not match layers {list(graded.layer_dims)}"
        )
    table = graded.source if table is None else table

    def filtered_schur() -> str | None:
        if table is None or table.is_abelian:
            return None
        witness = schur_rank_check(table, assignment)
        return f"Schur rank: {witness}" if witness else None

    layers = assignment.per_layer
    first = graded.layer_indices(1)
    count = _distribution_count(layers[0])
    if count > max_distributions:
        witness = filtered_schur()
        if witness:
            return WeightScreenResult("contradiction", witness)
        return WeightScreenResult(
            "undecided", f"{count} weight distributions exceed the budget of {max_distributions}", True, 0
        )
    expected = [Counter(w for d in layer for w in sl2_weights(d)) for layer in layers]
    odd = [d for d in layers[0] if d % 2]
    schur_here = len(odd) == 1 and odd[0] == 1
    failures: list[str] = []
    tried = 0
    base = sorted((w for d in layers[0] for w in sl2_weights(d)), reverse=True)
    for perm in multiset_permutations(base):
        tried += 1
        label = "(" + ",".join(f"e{i}" for i in first) + ")=(" + ",".join(str(x) for x in perm) + ")"
        w, steps = _propagate(graded, first, perm)
        if w is None:
            failures.append(f"{label}: " + ", ".join(steps))
            continue
        bad_layer = None
        for k in range(2, len(layers) + 1):
            got = Counter(w.get(i) for i in graded.layer_indices(k))
            if got != expected[k - 1]:
                bad_layer = (
                    f"layer {k} gets weights {_multiset(got.elements())} but "
                    f"{_multiset(layers[k - 1])} needs {_multiset(expected[k - 1].elements())}"
                )
                break
        if bad_layer:
            failures.append(f"{label}: " + ", ".join(steps + [bad_layer]))
            continue
        if schur_here:
            x = first[perm.index(0)]
            clash = _graded_schur(graded, x, layers)
            if clash:
                failures.append(f"{label}: {clash}")
                continue
        witness = filtered_schur()
        if witness:
            return WeightScreenResult("contradiction", f"{witness} (weights alone allow {label})")
        note = "" if schur_here or not odd else "; weight-zero multiplicity > 1, Schur step skipped"
        return WeightScreenResult("consistent", f"{label} " + ", ".join(steps) + note, True, tried)
    certified, reason = weight_basis_certificate(graded)
    if not certified:
        witness = filtered_schur()
        if witness:
            return WeightScreenResult("contradiction", witness, True, tried)
    shown = failures[:8]
    more = f"; ... {len(failures) - len(shown)} more" if len(failures) > len(shown) else ""
    witness = f"all {tried} distributions fail: " + "; ".join(shown) + more
    if not certified:
        witness += f" [not certified: {reason}]"
    return WeightScreenResult("contradiction", witness, certified, tried)


def _graded_schur(graded: GradedAlgebra, x: int, layers) -> str | None:
    table = graded.table
    for k in range(1, len(layers)):
        images = [table.basis_bracket(x, i) for i in graded.layer_indices(k)]
        r = linalg.rank(images)
        if r not in _common_subsums(layers[k - 1], layers[k]):
            return (
                f"trivial e{x}: ad(e{x}) maps layer {k} to layer {k + 1} with rank {r}, "
                f"not a common part of {_multiset(layers[k - 1])} and {_multiset(layers[k])}"
            )
    return None


# --------------------------------------------------- derivation algebra


def induced_quotient_algebra(table: StructureTable) -> list:
    """Basis of the Lie algebra of maps induced on ``n/n^2`` by derivations."""
    blocks = [quotient_block(table, d) for d in derivation_space(table).basis]
    m = table.dim - lower_term(table, 2).dim
    rows, _ = linalg.rref([list(linalg.flatten(b)) for b in blocks], m * m) if blocks else ([], [])
    return [[row[i * m : (i + 1) * m] for i in range(m)] for row in rows]


def quotient_derived_dims(table: StructureTable) -> tuple[int, ...]:
    algebra = induced_quotient_algebra(table)
    m = table.dim - lower_term(table, 2).dim
    dims = [len(algebra)]
    current = algebra
    while current:
        brackets = [list(linalg.flatten(linalg.commutator(a, b))) for a, b in combinations(current, 2)]
        rows, _ = linalg.rref(brackets, m * m) if brackets else ([], [])
        if len(rows) == len(current):
            break
        current = [[row[i * m : (i + 1) * m] for i in range(m)] for row in rows]
        dims.append(len(current))
    return tuple(dims)


def derivation_levi_check(table: StructureTable) -> str | None:
    dims = quotient_derived_dims(table)
    if dims[-1] == 0:
        return (
            "maps induced on n/n² by derivations form a solvable Lie algebra "
            f"(derived series dims {', '.join(map(str, dims))}), so no semisimple factor acts"
        )
    return None


# --------------------------------------------------------------- report


@dataclass(frozen=True)
class ScreenRecord:
    factor: str
    rule: str
    verdict: str
    witness: str

    def as_dict(self) -> dict:
        return {"factor": self.factor, "rule": self.rule, "verdict": self.verdict, "witness": self.witness}


@dataclass
class ScreenReport:
    algebra_id: str
    factors: tuple[str, ...]
    records: list[ScreenRecord]
    factor_verdicts: dict
    overall: str
    fired_first: ScreenRecord | None
    flag: CharacteristicFlag
    deciding: dict = field(default_factory=dict)
    annotations: list[str] = field(default_factory=list)
    survivors: dict = field(default_factory=dict)


def _factor_list(factor: str) -> tuple[str, ...]:
    if factor == "all":
        return FACTORS
    _check_factor(factor)
    return (factor,)


def levi_screen(
    table: StructureTable,
    factor: str = "all",
    algebra_id: str = "",
    max_distributions: int = DEFAULT_MAX_DISTRIBUTIONS,
) -> ScreenReport:
    factors = _factor_list(factor)
    _require_nilpotent(table)
    flag = build_characteristic_flag(table)
    records: list[ScreenRecord] = []
    annotations: list[str] = []
    flag_witness = " ⊂ ".join(f"{r} (dim {s.dim})" for r, s in zip(flag.recipes, flag.subspaces))
    flag_verdict = EXCLUDED if flag_excludes(flag) else NOT_EXCLUDED
    if flag_verdict == EXCLUDED:
        flag_witness = "complete characteristic flag " + flag_witness
    else:
        flag_witness = f"longest characteristic chain has dims {list(flag.dims)}: " + flag_witness
    records.append(ScreenRecord("any", "flag", flag_verdict, flag_witness))

    lifted = derivation_levi_check(table)
    if lifted:
        lifted_record = ScreenRecord("any", "derivation_levi", EXCLUDED, lifted)
    else:
        lifted_record = ScreenRecord(
            "any", "derivation_levi", NOT_EXCLUDED,
            f"maps induced on n/n² by derivations are not solvable (derived series dims {list(quotient_derived_dims(table))})",
        )

    if table.is_abelian:
        graded_dims: tuple[int, ...] = (table.dim,)
        graded = None
    else:
        graded = associated_graded(table)
        graded_dims = graded.layer_dims

    factor_verdicts: dict[str, str] = {}
    survivors_by_factor: dict[str, list] = {}
    for f in factors:
        found, pruned = explain_irrep_assignments(graded_dims, f)
        if not found:
            records.append(ScreenRecord(f, "irreps", EXCLUDED, "no admissible assignment: " + "; ".join(pruned)))
            factor_verdicts[f] = EXCLUDED
            survivors_by_factor[f] = []
            continue
        records.append(
            ScreenRecord(
                f, "irreps", NOT_EXCLUDED,
                f"{len(found)} assignment(s): " + "; ".join(str(a) for a in found),
            )
        )
        survivors: list[IrrepAssignment] = []
        uncertain: list[IrrepAssignment] = []
        notes = []
        for a in found:
            if graded is None:
                survivors.append(a)
                notes.append(f"{a}: abelian, every layer-1 module is realized")
                continue
            res = weight_screen(graded, a, max_distributions)
            if res.status == "consistent":
                survivors.append(a)
                notes.append(f"{a}: consistent {res.witness}")
            elif res.status == "contradiction" and res.certified:
                notes.append(f"{a}: {res.witness}")
            else:
                uncertain.append(a)
                notes.append(f"{a}: undecided, {res.witness}")
        verdict = NOT_EXCLUDED if survivors else (UNDECIDED if uncertain else EXCLUDED)
        records.append(ScreenRecord(f, "weights", verdict, " | ".join(notes)))
        remaining = survivors + uncertain
        if remaining and table.dim > 1:
            kept, kept_uncertain, notes = [], [], []
            for a in remaining:
                witness = submodule_check(table, a, flag.closure)
                if witness:
                    notes.append(f"{a}: {witness}")
                else:
                    (kept if a in survivors else kept_uncertain).append(a)
            if notes:
                sub_verdict = NOT_EXCLUDED if kept else (UNDECIDED if kept_uncertain else EXCLUDED)
                records.append(ScreenRecord(f, "submodules", sub_verdict, " | ".join(notes)))
            survivors, uncertain = kept, kept_uncertain
        if survivors:
            factor_verdicts[f] = NOT_EXCLUDED
        elif uncertain:
            factor_verdicts[f] = UNDECIDED
        else:
            factor_verdicts[f] = EXCLUDED
        survivors_by_factor[f] = survivors + uncertain

    records.append(lifted_record)
    for f in factors:
        if flag_verdict == EXCLUDED or lifted:
            factor_verdicts[f] = EXCLUDED

    deciding = {
        f: next((r for r in records if r.factor in (f, "any") and r.verdict == EXCLUDED), None)
        for f in factors
    }
    if flag_verdict == EXCLUDED:
        fired = records[0]
    else:
        fired = next((deciding[f] for f in factors if deciding[f] is not None), None)
    if flag_verdict == EXCLUDED or all(v == EXCLUDED for v in factor_verdicts.values()):
        overall = EXCLUDED
    elif any(v == NOT_EXCLUDED for v in factor_verdicts.values()):
        overall = NOT_EXCLUDED
    else:
        overall = UNDECIDED

    if overall != EXCLUDED:
        annotations.append("a verdict other than excluded does not assert that a Levi extension exists")
        irreducible = any(
            len(a.per_layer[0]) == 1 for f in factors if factor_verdicts[f] != EXCLUDED for a in survivors_by_factor[f]
        )
        if irreducible:
            annotations.append(
                "if the Levi factor acts irreducibly on n/n² over ℂ, Schur's lemma gives dim r − dim n ≤ 1"
            )
    return ScreenReport(
        algebra_id, factors, records, factor_verdicts, overall, fired, flag, deciding, annotations,
        survivors_by_factor,
    )
