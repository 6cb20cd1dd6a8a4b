"""Sign-pattern enumeration and the face-count matrices built from it.

For a rank-r configuration V of n vectors the unit sphere is dissected by
the n hemisphere boundaries v_i^perp.  Each face of the dissection is
identified with its signature, the vector of signs sgn(<v_i, x>) at any
relative-interior point x.  This module enumerates:

* dissection patterns: all signatures of faces (the zero set F_0 has size
  at most d = r-1 because the configuration is in general position);
* dependency patterns: the signs of the nontrivial linear dependencies
  among the columns, computed on the Gale dual, where they appear as the
  dual's dissection patterns.

Enumeration is vertex-local expansion: every (r-1)-subset R of columns
spans a hyperplane intersection that meets the sphere in an antipodal
vertex pair +-u.  The signature of each vertex is zero exactly on R, and
because the arrangement is simple, replacing the zeros on R by any of the
3^(r-1) sign assignments yields the signature of a face incident to that
vertex.  Every face's closure contains a vertex, so expanding around all
2*C(n, r-1) vertices and deduplicating yields the complete pattern set.
All arithmetic is integer (columns are pre-scaled), so signatures are exact.

The f-matrix histograms dissection patterns by (|F_0|, |F_-|); the
f*-matrix histograms dependency patterns by (|F_+| + |F_-|, |F_-|).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExhaustedError, DimensionError, FileFormatError
from .exactnum import _int_det
from .config import VectorConfig, gale_dual, integer_columns

SignVector = tuple[int, ...]


def pattern_to_string(p: SignVector) -> str:
    return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in p)


def pattern_from_string(text: str) -> SignVector:
    table = {"+": 1, "-": -1, "0": 0}
    try:
        return tuple(table[c] for c in text)
    except KeyError as exc:
        raise FileFormatError(f"bad sign character in pattern {text!r}") from exc


def _cross_product(rows: list[tuple[int, ...]], r: int) -> tuple[int, ...]:
    """Integer normal to the span of r-1 independent length-r rows."""
    out = []
    for c in range(r):
        minor = [[row[j] for j in range(r) if j != c] for row in rows]
        out.append((-1) ** c * _int_det(minor))
    return tuple(out)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=64)
def _pattern_tuple(v: VectorConfig) -> tuple[SignVector, ...]:
    icols = integer_columns(v)
    n, r, d = v.n, v.r, v.d
    found: set[SignVector] = set()
    local = list(itertools.product((-1, 0, 1), repeat=d))
    for subset in itertools.combinations(range(n), d):
        rows = [icols[j] for j in subset]
        u = _cross_product(rows, r)
        for uu in (u, tuple(-x for x in u)):
            base = [_sign(sum(a * b for a, b in zip(icols[m], uu))) for m in range(n)]
            for assign in local:
                sig = base.copy()
                for pos, s in zip(subset, assign):
                    sig[pos] = s
                found.add(tuple(sig))
    return tuple(sorted(found))


@lru_cache(maxsize=64)
def dissection_pattern_set(v: VectorConfig) -> frozenset[SignVector]:
    return frozenset(_pattern_tuple(v))


def dissection_patterns(v: VectorConfig) -> tuple[SignVector, ...]:
    """All face signatures, sorted lexicographically with -1 < 0 < +1."""
    return _pattern_tuple(v)


def dependency_patterns(v: VectorConfig) -> tuple[SignVector, ...]:
    """Signs of nontrivial linear dependencies, via the Gale dual."""
    if v.n == v.r:
        return ()
    return dissection_patterns(gale_dual(v))


def farkas_complement_oracle(v: VectorConfig) -> tuple[SignVector, ...]:
    """Dependency patterns the slow way, for cross-checking.

    A nonzero sign vector F is a dependency pattern iff it is conformally
    contained in no dissection pattern.  Only the full-support patterns
    (cells) need checking, since every pattern extends to a cell.
    Guarded to n <= 9 because of the 3^n sweep.
    """
    if v.n > 9:
        raise BudgetExhaustedError("farkas oracle limited to n <= 9")
    cells = []
    for g in dissection_patterns(v):
        if 0 in g:
            continue
        gp = sum(1 << i for i, s in enumerate(g) if s > 0)
        cells.append((gp, ((1 << v.n) - 1) ^ gp))
    out = []
    for cand in itertools.product((-1, 0, 1), repeat=v.n):
        fp = sum(1 << i for i, s in enumerate(cand) if s > 0)
        fm = sum(1 << i for i, s in enumerate(cand) if s < 0)
        if fp == 0 and fm == 0:
            continue
        if not any(fp & gp == fp and fm & gm == fm for gp, gm in cells):
            out.append(cand)
    return tuple(out)


# ---------------------------------------------------------------------------
# Count matrices


@dataclass(frozen=True)
class FMatrix:
    """Face counts: entry (s,t) counts faces with s zeros at level t."""

    d: int
    n: int
    rows: tuple[tuple[int, ...], ...]  # (d+1) x (n+1)

    def __post_init__(self) -> None:
        if len(self.rows) != self.d + 1 or any(len(r) != self.n + 1 for r in self.rows):
            raise DimensionError("f-matrix must be (d+1) x (n+1)")

    def entry(self, s: int, t: int) -> int:
        if 0 <= s <= self.d and 0 <= t <= self.n:
            return self.rows[s][t]
        return 0

    def row_sum(self, s: int) -> int:
        return sum(self.rows[s])

    def total(self) -> int:
        return sum(self.row_sum(s) for s in range(self.d + 1))

    def to_json(self) -> dict:
        return {"d": self.d, "n": self.n, "rows": [list(r) for r in self.rows]}

    @staticmethod
    def from_json(obj: object) -> "FMatrix":
        if not isinstance(obj, dict) or not all(k in obj for k in ("d", "n", "rows")):
            raise FileFormatError("f-matrix JSON needs fields 'd', 'n', 'rows'")
        d, n, rows = obj["d"], obj["n"], obj["rows"]
        if not isinstance(d, int) or not isinstance(n, int) or not isinstance(rows, list):
            raise FileFormatError("f-matrix fields have wrong types")
        clean = []
        for si, row in enumerate(rows):
            if not isinstance(row, list) or not all(isinstance(x, int) for x in row):
                raise FileFormatError(f"f-matrix row {si} must be a list of integers")
            clean.append(tuple(row))
        return FMatrix(d, n, tuple(clean))

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.rows) + "\n"


@dataclass(frozen=True)
class FStarMatrix:
    """Dependency counts: entry (s,t) counts dependencies of support size s
    with t negative coefficients; nonzero only for r+1 <= s <= n, 0 <= t <= s."""

    r: int
    n: int
    rows: tuple[tuple[int, ...], ...]  # (n+1) x (n+1)

    def __post_init__(self) -> None:
        if len(self.rows) != self.n + 1 or any(len(r) != self.n + 1 for r in self.rows):
            raise DimensionError("f*-matrix must be (n+1) x (n+1)")

    def entry(self, s: int, t: int) -> int:
        if 0 <= s <= self.n and 0 <= t <= self.n:
            return self.rows[s][t]
        return 0

    def total(self) -> int:
        return sum(sum(r) for r in self.rows)

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "rows": [list(r) for r in self.rows]}

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.rows) + "\n"


def _histogram_f(patterns: tuple[SignVector, ...], d: int, n: int) -> FMatrix:
    grid = [[0] * (n + 1) for _ in range(d + 1)]
    for p in patterns:
        s = sum(1 for x in p if x == 0)
        t = sum(1 for x in p if x < 0)
        grid[s][t] += 1
    return FMatrix(d, n, tuple(tuple(row) for row in grid))


@lru_cache(maxsize=None)
def f_matrix(v: VectorConfig) -> FMatrix:
    return _histogram_f(dissection_patterns(v), v.d, v.n)


def fstar_from_patterns(patterns: tuple[SignVector, ...], r: int, n: int) -> FStarMatrix:
    grid = [[0] * (n + 1) for _ in range(n + 1)]
    for p in patterns:
        t = sum(1 for x in p if x < 0)
        s = t + sum(1 for x in p if x > 0)
        grid[s][t] += 1
    return FStarMatrix(r, n, tuple(tuple(row) for row in grid))


@lru_cache(maxsize=None)
def fstar_matrix(v: VectorConfig) -> FStarMatrix:
    return fstar_from_patterns(dependency_patterns(v), v.r, v.n)


def f_polynomial(fm: FMatrix):
    """f(x,y) = sum f_{s,t} x^s y^t as a BiPoly."""
    from . import poly2

    return poly2.from_matrix(fm.rows, "x", "y")


def fstar_polynomial(fsm: FStarMatrix):
    """f*(x,y) = sum f*_{s,t} x^(n-s) y^t as a BiPoly."""
    from . import poly2

    terms = {}
    for s in range(fsm.n + 1):
        for t in range(fsm.n + 1):
            c = fsm.entry(s, t)
            if c:
                terms[(fsm.n - s, t)] = poly2.rat(c)
    return poly2.BiPoly(terms)


def patterns_to_json(patterns: tuple[SignVector, ...]) -> list[str]:
    return [pattern_to_string(p) for p in patterns]
