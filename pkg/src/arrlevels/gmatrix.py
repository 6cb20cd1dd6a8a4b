"""The g-matrix of a configuration pair and its transforms.

For two configurations V, W with the same rank r and size n, the change
in face counts f(W) - f(V) is encoded by an integer (r+1) x (n-r+1)
matrix g via

    f_W(x,y) - f_V(x,y) = sum_{j,k} g_{j,k} (x+y)^j (1+x)^(r-j) y^k

and the change in dependency counts by the companion transform

    f*_W(x,y) - f*_V(x,y) = sum_{j,k} -g_{j,k} (x+y)^k (x+1)^(n-r-k) y^j.

g satisfies the skew-symmetries g_{j,k} = -g_{r-j,k} = -g_{j,n-r-k}, so it
is determined by its upper-left quadrant (the small g-matrix).  This module
computes g from a pair of f-matrices by inverting the first transform
column-by-column, applies both transforms (each by two independent routes
that are asserted equal), provides the closed form for a coneighborly to
neighborly pair, and checks the summation identities tying g to the g's of
contracted and deleted subpairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly2
from .config import VectorConfig, contract, delete
from .errors import DimensionError, InconsistentInputError
from .faces import FMatrix, f_matrix
from .relations import RelationReport, binom, check_antipodal, check_dehn_sommerville

IntGrid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GMatrix:
    """Full (r+1) x (n-r+1) integer matrix; entry (j,k) = g_{j,k}."""

    r: int
    n: int
    rows: IntGrid

    def __post_init__(self) -> None:
        if len(self.rows) != self.r + 1 or any(len(row) != self.n - self.r + 1 for row in self.rows):
            raise DimensionError("g-matrix must be (r+1) x (n-r+1)")

    def entry(self, j: int, k: int) -> int:
        return self.rows[j][k]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def neg(self) -> GMatrix:
        return GMatrix(self.r, self.n, tuple(tuple(-x for x in row) for row in self.rows))

    def add(self, other: GMatrix) -> GMatrix:
        if (self.r, self.n) != (other.r, other.n):
            raise DimensionError("g-matrix shapes differ")
        return GMatrix(
            self.r,
            self.n,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "g": [list(row) for row in self.rows]}


@dataclass(frozen=True)
class SmallGMatrix:
    """Rows j = 0..floor((r-1)/2), cols k = 0..floor((n-r-1)/2)."""

    r: int
    n: int
    rows: IntGrid

    def __post_init__(self) -> None:
        want_rows = (self.r - 1) // 2 + 1
        want_cols = (self.n - self.r - 1) // 2 + 1
        if len(self.rows) != want_rows or any(len(row) != want_cols for row in self.rows):
            raise DimensionError("small g-matrix has wrong shape")

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "small_g": [list(row) for row in self.rows]}


def satisfies_skew(g: GMatrix) -> bool:
    r, nr = g.r, g.n - g.r
    for j in range(r + 1):
        for k in range(nr + 1):
            if g.entry(j, k) != -g.entry(r - j, k):
                return False
            if g.entry(j, k) != -g.entry(j, nr - k):
                return False
    return True


def small_from_full(g: GMatrix) -> SmallGMatrix:
    rows = tuple(
        tuple(g.entry(j, k) for k in range((g.n - g.r - 1) // 2 + 1))
        for j in range((g.r - 1) // 2 + 1)
    )
    return SmallGMatrix(g.r, g.n, rows)


def full_from_small(sm: SmallGMatrix) -> GMatrix:
    r, nr = sm.r, sm.n - sm.r
    rows = []
    for j in range(r + 1):
        row = []
        for k in range(nr + 1):
            if 2 * j == r or 2 * k == nr:
                row.append(0)
                continue
            jj, kk = min(j, r - j), min(k, nr - k)
            sign = (-1 if jj != j else 1) * (-1 if kk != k else 1)
            row.append(sign * sm.rows[jj][kk])
        rows.append(tuple(row))
    return GMatrix(sm.r, sm.n, tuple(rows))


def small_g_is_nonnegative(g: GMatrix | SmallGMatrix) -> bool:
    """Observational: whether the small quadrant is entrywise >= 0."""
    sm = small_from_full(g) if isinstance(g, GMatrix) else g
    return all(x >= 0 for row in sm.rows for x in row)


# ---------------------------------------------------------------------------
# The two transforms


def _delta_f_poly_route(g: GMatrix) -> list[list[int]]:
    x, y = poly2.BiPoly.var_x(), poly2.BiPoly.var_y()
    xy = x.add(y)
    x1 = x.add(poly2.BiPoly.const(1))
    total = poly2.BiPoly.zero()
    for j in range(g.r + 1):
        for k in range(g.n - g.r + 1):
            c = g.entry(j, k)
            if c:
                total = total.add(xy.pow(j).mul(x1.pow(g.r - j)).mul(y.pow(k)).scale(c))
    grid = [[0] * (g.n + 1) for _ in range(g.r + 1)]
    for (dx, dy), c in total.terms.items():
        if c.denominator != 1:
            raise InconsistentInputError("non-integer coefficient in delta-f")
        if dx > g.r or dy > g.n:
            raise InconsistentInputError("delta-f monomial out of range")
        grid[dx][dy] = int(c)
    return grid


def _delta_f_coeff_route(g: GMatrix) -> list[list[int]]:
    grid = [[0] * (g.n + 1) for _ in range(g.r + 1)]
    for s in range(g.r + 1):
        for t in range(g.n + 1):
            acc = 0
            for j in range(g.r + 1):
                for k in range(g.n - g.r + 1):
                    c = g.entry(j, k)
                    if c:
                        acc += binom(j, t - k) * binom(g.r - j, s - j + t - k) * c
            grid[s][t] = acc
    return grid


def delta_f_from_g(g: GMatrix) -> IntGrid:
    """Face-count difference determined by g, shaped like an f-matrix.

    Computed by polynomial expansion and by direct binomial sums; the two
    must agree.  The row s = r of the expansion must vanish (it does for
    every skew-symmetric g); otherwise the input is rejected.
    """
    a = _delta_f_poly_route(g)
    b = _delta_f_coeff_route(g)
    if a != b:
        raise InconsistentInputError("delta-f routes disagree; implementation bug")
    if any(x != 0 for x in a[g.r]):
        raise InconsistentInputError("delta-f has entries at zero-set size r; g is not skew-symmetric")
    return tuple(tuple(row) for row in a[: g.r])


def delta_fstar_from_g(g: GMatrix) -> IntGrid:
    """Dependency-count difference determined by g, shaped like an f*-matrix.

    Entry (s,t) is the coefficient of x^(n-s) y^t in
    sum_{j,k} -g_{j,k} (x+y)^k (x+1)^(n-r-k) y^j.
    """
    x, y = poly2.BiPoly.var_x(), poly2.BiPoly.var_y()
    xy = x.add(y)
    x1 = x.add(poly2.BiPoly.const(1))
    total = poly2.BiPoly.zero()
    nr = g.n - g.r
    for j in range(g.r + 1):
        for k in range(nr + 1):
            c = g.entry(j, k)
            if c:
                total = total.add(xy.pow(k).mul(x1.pow(nr - k)).mul(y.pow(j)).scale(-c))
    grid = [[0] * (g.n + 1) for _ in range(g.n + 1)]
    for (dx, dy), c in total.terms.items():
        if c.denominator != 1:
            raise InconsistentInputError("non-integer coefficient in delta-fstar")
        s = g.n - dx
        grid[s][dy] = int(c)
    if any(x != 0 for x in grid[g.r]):
        raise InconsistentInputError("delta-fstar has entries at support size r; g is not skew-symmetric")
    return tuple(tuple(row) for row in grid)


def g_from_fmatrices(fv: FMatrix, fw: FMatrix) -> GMatrix:
    """The unique g with delta_f_from_g(g) = fw - fv.

    Solved column-by-column in k.  Collecting the y^t coefficient of the
    defining identity gives

        sum_s (fw-fv)_{s,t} x^s = sum_j sum_{k<=t} g_{j,k} C(j, t-k)
                                  x^(j+k-t) (1+x)^(r-j),

    every exponent nonnegative since C(j, t-k) = 0 unless t-k <= j.  With
    the k < t part moved to the left, the unknown column g_{.,t} is the
    coordinate vector of the remainder in the basis x^j (1+x)^(r-j),
    extracted through the substitution x -> z/(1-z):

        g_{j,t} = sum_m rho_m (-1)^(j-m) C(r-m, j-m),

    rho being the remainder's coefficients.  The result must be
    skew-symmetric and must reproduce fw - fv through the forward
    transform; anything else means the inputs were not genuine f-matrices
    of configurations.
    """
    if (fv.d, fv.n) != (fw.d, fw.n):
        raise DimensionError("f-matrices have different (d, n)")
    for fm, name in ((fv, "source"), (fw, "target")):
        if not check_antipodal(fm).holds:
            raise InconsistentInputError(f"{name} f-matrix violates antipodal symmetry")
        if not check_dehn_sommerville(fm).holds:
            raise InconsistentInputError(f"{name} f-matrix violates the reflection identity")
    r, n = fv.d + 1, fv.n
    delta = [[fw.entry(s, t) - fv.entry(s, t) for t in range(n + 1)] for s in range(fv.d + 1)]
    g_rows: list[list[int]] = [[0] * (n - r + 1) for _ in range(r + 1)]
    for t in range(n - r + 1):
        rho = [0] * (r + 1)  # coefficient of x^m in the remainder
        for s in range(fv.d + 1):
            if delta[s][t]:
                rho[s] += delta[s][t]
        for j in range(r + 1):
            for k in range(t):
                c = g_rows[j][k] * binom(j, t - k)
                if c:
                    for b in range(r - j + 1):
                        rho[j + k - t + b] -= c * binom(r - j, b)
        for j in range(r + 1):
            g_rows[j][t] = sum(
                rho[m] * (-1) ** (j - m) * binom(r - m, j - m) for m in range(j + 1)
            )
    g = GMatrix(r, n, tuple(tuple(row) for row in g_rows))
    if not satisfies_skew(g):
        raise InconsistentInputError("inverted g violates skew-symmetry; inputs inconsistent")
    back = delta_f_from_g(g)
    if [list(row) for row in back] != delta:
        raise InconsistentInputError("g does not reproduce the f-matrix difference; inputs inconsistent")
    return g


def g_of_pair(v: VectorConfig, w: VectorConfig) -> GMatrix:
    """g of a configuration pair via enumeration of both f-matrices."""
    if (v.r, v.n) != (w.r, w.n):
        raise DimensionError("pair must share rank and size")
    return g_from_fmatrices(f_matrix(v), f_matrix(w))


def g_closed_form_neighborly(n: int, r: int) -> SmallGMatrix:
    """Small g of any coneighborly -> neighborly pair with parameters (n, r).

    Entry (j,k) is C(n-k-r+j, j) C(k+r-1-j, k) - C(n-k-r+j-1, j-1) C(k+r-j, k);
    every entry is positive, and the partial row sums collapse to the
    product C(n-k-r+j, j) C(k+r-1-j, k), both of which are asserted.
    """
    if not (n > r >= 1):
        raise DimensionError(f"need n > r >= 1, got n={n}, r={r}")
    rows = []
    for j in range((r - 1) // 2 + 1):
        row = []
        for k in range((n - r - 1) // 2 + 1):
            val = binom(n - k - r + j, j) * binom(k + r - 1 - j, k) - binom(
                n - k - r + j - 1, j - 1
            ) * binom(k + r - j, k)
            if val <= 0:
                raise InconsistentInputError(f"closed-form g entry ({j},{k}) is {val}, expected > 0")
            row.append(val)
        rows.append(tuple(row))
    sm = SmallGMatrix(r, n, tuple(rows))
    for j in range((r - 1) // 2 + 1):
        for k in range((n - r - 1) // 2 + 1):
            cumulative = sum(sm.rows[jj][k] for jj in range(j + 1))
            expect = binom(n - k - r + j, j) * binom(k + r - 1 - j, k)
            if cumulative != expect:
                raise InconsistentInputError(
                    f"cumulative closed form fails at ({j},{k}): {cumulative} != {expect}"
                )
    if any(sm.rows[0][k] != binom(k + r - 1, r - 1) for k in range((n - r - 1) // 2 + 1)):
        raise InconsistentInputError("top-row closed form mismatch")
    return sm


def check_contraction_deletion(v: VectorConfig, w: VectorConfig, mode: str) -> RelationReport:
    """Summation identities between g of a pair and g of its minor pairs.

    contract mode:  sum_i g_{j,k}(V/v_i -> W/w_i) = (r-j) g_{j,k} + (j+1) g_{j+1,k}
    delete mode:    sum_i g_{j,k}(V\\v_i -> W\\w_i) = (n-r-k) g_{j,k} + (k+1) g_{j,k+1}
    """
    if (v.r, v.n) != (w.r, w.n):
        raise DimensionError("pair must share rank and size")
    r, n = v.r, v.n
    g = g_of_pair(v, w)
    if mode == "contract":
        if r < 2:
            raise DimensionError("contract mode needs r >= 2")
        minors = [g_of_pair(contract(v, i), contract(w, i)) for i in range(1, n + 1)]
        for j in range(r):
            for k in range(n - r + 1):
                left = sum(m.entry(j, k) for m in minors)
                right = (r - j) * g.entry(j, k) + (j + 1) * g.entry(j + 1, k)
                if left != right:
                    return RelationReport(
                        "contraction", False, f"(j={j},k={k}): minors sum {left} != {right}"
                    )
        return RelationReport("contraction", True)
    if mode == "delete":
        if n < r + 1:
            raise DimensionError("delete mode needs n >= r+1")
        minors = [g_of_pair(delete(v, i), delete(w, i)) for i in range(1, n + 1)]
        for j in range(r + 1):
            for k in range(n - r):
                left = sum(m.entry(j, k) for m in minors)
                right = (n - r - k) * g.entry(j, k) + (k + 1) * g.entry(j, k + 1)
                if left != right:
                    return RelationReport(
                        "deletion", False, f"(j={j},k={k}): minors sum {left} != {right}"
                    )
        return RelationReport("deletion", True)
    raise DimensionError(f"unknown mode {mode!r}")
