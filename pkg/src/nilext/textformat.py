"""Plain-text algebra files.

::

    # comment
    dim 3
    bracket 2 3 : 1 1

Each ``bracket j k : l1 c1, l2 c2`` line sets ``[e_j, e_k] = c1 e_l1 + c2 e_l2``
with ``j < k``; coefficients are integers or ``p/q``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .liecore import StructureTable, check_lie_algebra

_DIM = re.compile(r"^dim\s+(\d+)$")
_BRACKET = re.compile(r"^bracket\s+(\d+)\s+(\d+)\s*:\s*(.+)$")
_TERM = re.compile(r"^(\d+)\s+([+-]?\d+(?:/\d+)?)$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_algebra_text(text: str, validate: bool = True) -> StructureTable:
    dim = None
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if dim is None:
            m = _DIM.match(line)
            if not m:
                raise ParseError("expected 'dim <n>' before any bracket", lineno)
            dim = int(m.group(1))
            if dim < 1:
                raise ParseError("dimension must be positive", lineno)
            continue
        if _DIM.match(line):
            raise ParseError("'dim' given twice", lineno)
        m = _BRACKET.match(line)
        if not m:
            raise ParseError(f"cannot parse {line!r}; expected 'bracket <j> <k> : <l> <c>[, ...]'", lineno)
        j, k = int(m.group(1)), int(m.group(2))
        if not (1 <= j <= dim and 1 <= k <= dim):
            raise ParseError(f"index out of range 1..{dim} in bracket ({j},{k})", lineno)
        if j >= k:
            raise ParseError(f"bracket indices must satisfy j < k, got ({j},{k})", lineno)
        if (j, k) in brackets:
            raise ParseError(f"duplicate bracket ({j},{k})", lineno)
        terms: dict[int, Fraction] = {}
        for chunk in m.group(3).split(","):
            t = _TERM.match(chunk.strip())
            if not t:
                raise ParseError(f"cannot parse term {chunk.strip()!r}; expected '<l> <c>'", lineno)
            l = int(t.group(1))
            if not 1 <= l <= dim:
                raise ParseError(f"index {l} out of range 1..{dim}", lineno)
            if l in terms:
                raise ParseError(f"index {l} repeated in bracket ({j},{k})", lineno)
            try:
                c = Fraction(t.group(2))
            except ZeroDivisionError:
                raise ParseError(f"zero denominator in {t.group(2)!r}", lineno) from None
            if not c:
                raise ParseError(f"zero coefficient for e{l}; omit the term instead", lineno)
            terms[l] = c
        brackets[(j, k)] = terms
    if dim is None:
        raise ParseError("empty input; expected 'dim <n>'")
    table = StructureTable.from_brackets(dim, brackets)
    return check_lie_algebra(table) if validate else table


def _coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def serialize_algebra(table: StructureTable, header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines.append(f"dim {table.dim}")
    for (j, k), terms in table.entries:
        body = ", ".join(f"{l} {_coef(c)}" for l, c in terms)
        lines.append(f"bracket {j} {k} : {body}")
    return "\n".join(lines) + "\n"


def read_algebra_file(path, validate: bool = True) -> StructureTable:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 text ({exc.reason})") from None
    return parse_algebra_text(text, validate=validate)
