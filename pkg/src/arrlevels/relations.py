"""Exact identities tying together face counts, dependency counts, totals.

The checks here are linear or polynomial identities over the integers and
are verified with zero tolerance:

* antipodal symmetry  f_{s,t} = f_{s,n-s-t};
* row totals: the number of faces with s zeros is independent of the
  configuration and has two closed forms,
      2*C(n,s) * sum_{i=0}^{d-s} C(n-s-1, i)
    = sum_{i=0}^{d} (1 + (-1)^i) * C(n, d-i) * C(d-i, s),
  both computed and asserted equal;
* the Dehn-Sommerville style reflection f(x,y) = (-1)^d f(-(x+y+1), y),
  checked both by polynomial substitution and coefficient-wise through
  the equivalent binomial sums;
* the exchange between f- and f*-polynomials, realized polynomially by
  clearing denominators of the substitution (x, y) -> (-x/(x+1), (x+y)/(x+1)).

Checks accept either a configuration or a raw FMatrix, so corrupted
matrices can be fed in deliberately as negative controls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import poly2
from .config import VectorConfig
from .errors import DimensionError, InconsistentInputError
from .faces import FMatrix, f_matrix, f_polynomial


@dataclass(frozen=True)
class RelationReport:
    relation: str
    holds: bool
    witness: str | None = None

    def __post_init__(self) -> None:
        if self.holds and self.witness is not None:
            raise InconsistentInputError("holding report cannot carry a witness")

    def to_json(self) -> dict:
        return {"relation": self.relation, "holds": self.holds, "witness": self.witness}


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the combinatorial convention C(a,b)=0
    outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def total_face_count(n: int, d: int, s: int) -> int:
    """Number of faces with exactly s zeros, independent of the configuration."""
    if not 0 <= s <= d:
        raise DimensionError(f"level-count index s={s} out of range 0..{d}")
    if n < d + 1:
        raise DimensionError(f"need n >= d+1, got n={n}, d={d}")
    form_a = 2 * binom(n, s) * sum(binom(n - s - 1, i) for i in range(d - s + 1))
    form_b = sum((1 + (-1) ** i) * binom(n, d - i) * binom(d - i, s) for i in range(d + 1))
    if form_a != form_b:
        raise InconsistentInputError(f"total-count closed forms disagree at (n={n}, d={d}, s={s})")
    return form_a


def _as_fmatrix(v: VectorConfig | FMatrix) -> FMatrix:
    if isinstance(v, FMatrix):
        return v
    return f_matrix(v)


def check_antipodal(v: VectorConfig | FMatrix) -> RelationReport:
    """f_{s,t} = f_{s,n-s-t}, entries outside the stored window read as 0."""
    fm = _as_fmatrix(v)
    for s in range(fm.d + 1):
        for t in range(fm.n + 1):
            mirror = fm.n - s - t
            if fm.entry(s, t) != fm.entry(s, mirror):
                w = f"f[{s}][{t}]={fm.entry(s, t)} != f[{s}][{mirror}]={fm.entry(s, mirror)}"
                return RelationReport("antipodal", False, w)
    return RelationReport("antipodal", True)


def check_totals(v: VectorConfig | FMatrix) -> RelationReport:
    """Row sums of the f-matrix match the configuration-free closed form."""
    fm = _as_fmatrix(v)
    for s in range(fm.d + 1):
        expect = total_face_count(fm.n, fm.d, s)
        got = fm.row_sum(s)
        if got != expect:
            return RelationReport("totals", False, f"row {s} sums to {got}, expected {expect}")
    return RelationReport("totals", True)


def _ds_substitution_holds(fm: FMatrix) -> bool:
    p = f_polynomial(fm)
    x, y = poly2.BiPoly.var_x(), poly2.BiPoly.var_y()
    sx = x.add(y).add(poly2.BiPoly.const(1)).neg()
    q = poly2.substitute(p, sx, y)
    if fm.d % 2 == 1:
        q = q.neg()
    return q == p


def _ds_coefficient_witness(fm: FMatrix) -> str | None:
    d, n = fm.d, fm.n
    for s in range(d + 1):
        for t in range(n + d + 1):
            rhs = 0
            for j in range(d + 1):
                for ell in range(n + 1):
                    c = fm.entry(j, ell)
                    if c:
                        rhs += (-1) ** (d - j) * binom(j, s) * binom(j - s, t - ell) * c
            if fm.entry(s, t) != rhs:
                return f"f[{s}][{t}]={fm.entry(s, t)} != reflected sum {rhs}"
    return None


def check_dehn_sommerville(v: VectorConfig | FMatrix) -> RelationReport:
    """Reflection identity, via substitution and via binomial sums; the two
    routes are the same linear condition and must agree on any input."""
    fm = _as_fmatrix(v)
    sub_ok = _ds_substitution_holds(fm)
    witness = _ds_coefficient_witness(fm)
    coeff_ok = witness is None
    if sub_ok != coeff_ok:
        raise InconsistentInputError("reflection-check routes disagree; implementation bug")
    return RelationReport("dehn-sommerville", coeff_ok, witness)


def f_fstar_transform(p: poly2.BiPoly, n: int, r: int, direction: str) -> poly2.BiPoly:
    """Exchange f- and f*-polynomials of a rank-r size-n configuration.

    direction "f_to_fstar" maps the f-polynomial to the f*-polynomial;
    "fstar_to_f" is the inverse.  Both compute
        (x+y+1)^n - sign * x^n - sum_{a,b} p_{a,b} (-x)^a (x+y)^b (x+1)^(n-a-b)
    with sign = (-1)^r, resp. (-1)^(n-r).
    """
    if direction == "f_to_fstar":
        sign = (-1) ** r
        max_x = r - 1
    elif direction == "fstar_to_f":
        sign = (-1) ** (n - r)
        max_x = n - r - 1
    else:
        raise DimensionError(f"unknown direction {direction!r}")
    for (a, b) in p.terms:
        if a > max_x or b > n or a + b > n:
            raise DimensionError(f"monomial x^{a} y^{b} outside the window for n={n}, r={r}")
    x, y = poly2.BiPoly.var_x(), poly2.BiPoly.var_y()
    neg_x = x.neg()
    x_plus_y = x.add(y)
    x_plus_1 = x.add(poly2.BiPoly.const(1))
    core = poly2.BiPoly.zero()
    for (a, b), c in sorted(p.terms.items()):
        term = neg_x.pow(a).mul(x_plus_y.pow(b)).mul(x_plus_1.pow(n - a - b)).scale(c)
        core = core.add(term)
    full = x.add(y).add(poly2.BiPoly.const(1)).pow(n)
    return full.sub(x.pow(n).scale(sign)).sub(core)
