"""Exact rational scalars, dense rational matrices, univariate polynomials.

Everything downstream computes with these three building blocks:

* ``Rat`` is an alias for :class:`fractions.Fraction` (canonical reduced
  form, exact arithmetic, positive denominator).
* ``Mat`` is a small immutable dense matrix over ``Rat`` with exact
  determinant, rank, and right-kernel computations.  Determinants go
  through fraction-free (Bareiss) elimination on an integer rescaling of
  the rows, which keeps intermediate values small at the sizes used here
  (up to roughly 10x10).
* ``UniPoly`` is a univariate polynomial over ``Rat`` with Sturm-sequence
  real-root isolation on an open interval.  Isolation returns disjoint
  rational intervals with certified root-free endpoints; downstream code
  only ever needs sample points strictly between roots, never the roots
  themselves, so bisection refinement is the workhorse primitive.

Floating point is forbidden in every code path here; all results are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BoundaryRootError, DegeneratePolynomialError, DimensionError

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(value: int | str | Fraction) -> Rat:
    """Coerce an int, canonical "p" / "p/q" string, or Fraction to Rat."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(value: Rat) -> str:
    """Serialize to the canonical decimal string "p" or "p/q" (q > 0)."""
    return str(value)


def _sign(value: Rat | int) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


# ---------------------------------------------------------------------------
# Matrices


def _int_det(rows: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class Mat:
    """Immutable dense rational matrix (row-major)."""

    nrows: int
    ncols: int
    entries: tuple[tuple[Rat, ...], ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionError("negative matrix dimensions")
        if len(self.entries) != self.nrows:
            raise DimensionError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.ncols:
                raise DimensionError("ragged matrix rows")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int | str | Fraction]]) -> Mat:
        data = tuple(tuple(rat(v) for v in row) for row in rows)
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        return Mat(nrows, ncols, data)

    @staticmethod
    def zeros(nrows: int, ncols: int) -> Mat:
        return Mat(nrows, ncols, tuple(tuple(_ZERO for _ in range(ncols)) for _ in range(nrows)))

    @staticmethod
    def identity(n: int) -> Mat:
        return Mat(n, n, tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    def row(self, i: int) -> tuple[Rat, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Rat, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> Mat:
        return Mat(self.ncols, self.nrows, tuple(self.col(j) for j in range(self.ncols)))

    def select_cols(self, cols: Iterable[int]) -> Mat:
        idx = tuple(cols)
        return Mat(self.nrows, len(idx), tuple(tuple(row[j] for j in idx) for row in self.entries))

    def mul(self, other: Mat) -> Mat:
        if self.ncols != other.nrows:
            raise DimensionError("matrix product shape mismatch")
        ot = other.transpose()
        data = tuple(
            tuple(sum((a * b for a, b in zip(row, col)), _ZERO) for col in ot.entries)
            for row in self.entries
        )
        return Mat(self.nrows, other.ncols, data)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)


def det(m: Mat) -> Rat:
    """Exact determinant via integer rescaling + Bareiss elimination."""
    if m.nrows != m.ncols:
        raise DimensionError("determinant of a non-square matrix")
    if m.nrows == 0:
        return _ONE
    scale = _ONE
    int_rows: list[list[int]] = []
    for row in m.entries:
        lcm = 1
        for v in row:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        scale *= lcm
        int_rows.append([int(v * lcm) for v in row])
    return Fraction(_int_det(int_rows), 1) / scale


def _row_echelon(m: Mat) -> tuple[list[list[Rat]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in m.entries]
    pivots: list[int] = []
    pr = 0
    for c in range(m.ncols):
        pivot_row = None
        for i in range(pr, m.nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        inv = 1 / rows[pr][c]
        rows[pr] = [v * inv for v in rows[pr]]
        for i in range(m.nrows):
            if i != pr and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
        pivots.append(c)
        pr += 1
        if pr == m.nrows:
            break
    return rows, pivots


def rank(m: Mat) -> int:
    """Exact rank over the rationals."""
    return len(_row_echelon(m)[1])


def inverse(m: Mat) -> Mat:
    """Exact inverse of a square matrix; DimensionError when singular."""
    if m.nrows != m.ncols:
        raise DimensionError("inverse of a non-square matrix")
    n = m.nrows
    aug = Mat(n, 2 * n, tuple(row + Mat.identity(n).row(i) for i, row in enumerate(m.entries)))
    rows, pivots = _row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise DimensionError("matrix is singular")
    return Mat(n, n, tuple(tuple(row[n:]) for row in rows[:n]))


def kernel_basis(m: Mat) -> Mat:
    """Basis of the right kernel of m, returned as columns of a matrix.

    The result has cols(m) - rank(m) columns and satisfies m * K = 0 exactly.
    Free variables are taken in ascending column order, so the basis is
    deterministic for a given input.
    """
    rows, pivots = _row_echelon(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis_cols: list[list[Rat]] = []
    for fc in free:
        vec = [_ZERO] * m.ncols
        vec[fc] = _ONE
        for pr, pc in enumerate(pivots):
            vec[pc] = -rows[pr][fc]
        basis_cols.append(vec)
    data = tuple(tuple(col[i] for col in basis_cols) for i in range(m.ncols))
    return Mat(m.ncols, len(basis_cols), data)


# ---------------------------------------------------------------------------
# Univariate polynomials


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial; coeffs[i] is the coefficient of t^i."""

    coeffs: tuple[Rat, ...]

    @staticmethod
    def make(coeffs: Sequence[int | str | Fraction]) -> UniPoly:
        vals = [rat(c) for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        return UniPoly(tuple(vals))

    @staticmethod
    def zero() -> UniPoly:
        return UniPoly(())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: Rat) -> Rat:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def add(self, other: UniPoly) -> UniPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        out = [_ZERO] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return UniPoly.make(out)

    def neg(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coeffs))

    def sub(self, other: UniPoly) -> UniPoly:
        return self.add(other.neg())

    def mul(self, other: UniPoly) -> UniPoly:
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly.make(out)

    def scale(self, c: Rat | int) -> UniPoly:
        c = rat(c)
        if c == 0:
            return UniPoly.zero()
        return UniPoly(tuple(v * c for v in self.coeffs))

    def derivative(self) -> UniPoly:
        return UniPoly.make([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise DegeneratePolynomialError("division by the zero polynomial")
        rem = list(self.coeffs)
        q = [_ZERO] * max(0, len(rem) - len(other.coeffs) + 1)
        dl = other.coeffs[-1]
        while len(rem) >= len(other.coeffs) and rem:
            k = len(rem) - len(other.coeffs)
            f = rem[-1] / dl
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly.make(q), UniPoly.make(rem)

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self.scale(1 / self.coeffs[-1])


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor (monic 1 when coprime)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.is_zero():
        raise DegeneratePolynomialError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    return p.divmod(g)[0].monic()


def _sturm_chain(p: UniPoly) -> list[UniPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        rem = chain[-2].divmod(chain[-1])[1]
        chain.append(rem.neg())
    chain.pop()
    return chain


def _variations(chain: list[UniPoly], x: Rat) -> int:
    signs = [s for s in (_sign(q(x)) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_distinct_roots(p: UniPoly, lo: Rat, hi: Rat) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    Requires p nonzero and p(lo) != 0 != p(hi).
    """
    if p.is_zero():
        raise DegeneratePolynomialError("root count of the zero polynomial")
    if p(lo) == 0 or p(hi) == 0:
        raise BoundaryRootError(f"root at interval endpoint of ({lo}, {hi})")
    if p.degree <= 0:
        return 0
    q = squarefree_part(p)
    chain = _sturm_chain(q)
    return _variations(chain, lo) - _variations(chain, hi)


def _isolate_squarefree(q: UniPoly, chain: list[UniPoly], lo: Rat, hi: Rat) -> list[tuple[Rat, Rat]]:
    total = _variations(chain, lo) - _variations(chain, hi)
    if total == 0:
        return []
    if total == 1:
        return [(lo, hi)]
    mid = (lo + hi) / 2
    if q(mid) == 0:
        # mid is itself a root; fence it off with a window free of the others
        w = (hi - lo) / 4
        while True:
            a, b = mid - w, mid + w
            if a > lo and b < hi and q(a) != 0 and q(b) != 0:
                inner = _variations(chain, a) - _variations(chain, b)
                if inner == 1:
                    break
            w /= 2
        return (
            _isolate_squarefree(q, chain, lo, a)
            + [(a, b)]
            + _isolate_squarefree(q, chain, b, hi)
        )
    return _isolate_squarefree(q, chain, lo, mid) + _isolate_squarefree(q, chain, mid, hi)


def isolate_roots(p: UniPoly, lo: Rat, hi: Rat) -> list[tuple[tuple[Rat, Rat], bool]]:
    """Isolate the distinct real roots of p inside the open interval (lo, hi).

    Returns sorted pairwise-disjoint rational intervals, one per root,
    each tagged True when the root is simple (multiplicity 1 in p).
    Interval endpoints are certified non-roots.
    """
    if lo >= hi:
        raise DimensionError("isolate_roots requires lo < hi")
    if p.is_zero():
        raise DegeneratePolynomialError("cannot isolate roots of the zero polynomial")
    if p(lo) == 0 or p(hi) == 0:
        raise BoundaryRootError(f"polynomial vanishes at interval endpoint ({lo} or {hi})")
    if p.degree <= 0:
        return []
    q = squarefree_part(p)
    chain = _sturm_chain(q)
    intervals = _isolate_squarefree(q, chain, lo, hi)
    mult = poly_gcd(p, p.derivative())
    out: list[tuple[tuple[Rat, Rat], bool]] = []
    for a, b in intervals:
        simple = mult.degree <= 0 or count_distinct_roots(mult, a, b) == 0
        out.append(((a, b), simple))
    return out


def bisect_root_interval(q: UniPoly, interval: tuple[Rat, Rat]) -> tuple[Rat, Rat]:
    """Halve an isolating interval of a squarefree q (exactly one root inside).

    The sign of q changes across the root, so one midpoint sign test picks
    the half containing it.  When the midpoint happens to be the root, a
    small window around it is returned instead.
    """
    a, b = interval
    mid = (a + b) / 2
    vm = q(mid)
    if vm == 0:
        w = (b - a) / 8
        return (mid - w, mid + w)
    if _sign(q(a)) * _sign(vm) < 0:
        return (a, mid)
    return (mid, b)


def refine_root_interval(q: UniPoly, interval: tuple[Rat, Rat], width: Rat) -> tuple[Rat, Rat]:
    """Shrink an isolating interval of squarefree q until its width <= width."""
    a, b = interval
    while b - a > width:
        a, b = bisect_root_interval(q, (a, b))
    return (a, b)
