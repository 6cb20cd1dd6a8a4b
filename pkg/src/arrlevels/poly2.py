"""Bivariate polynomials with exact rational coefficients.

A BiPoly is a sparse term map (deg_x, deg_y) -> coefficient.  The only
nontrivial operation the rest of the library needs is full substitution
p(sx, sy) with polynomial arguments, used for the level and dependency
identities; total degrees stay small (around n <= 12) so naive expansion
is fine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionError
from .exactnum import Rat, rat

Term = tuple[int, int]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class BiPoly:
    """Sparse bivariate polynomial; no zero coefficients are stored."""

    terms: Mapping[Term, Rat] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {k: v for k, v in self.terms.items() if v != 0}
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> BiPoly:
        return BiPoly({})

    @staticmethod
    def const(c: int | str | Fraction) -> BiPoly:
        return BiPoly({(0, 0): rat(c)})

    @staticmethod
    def monomial(deg_x: int, deg_y: int, c: int | str | Fraction = 1) -> BiPoly:
        if deg_x < 0 or deg_y < 0:
            raise DimensionError("negative exponent")
        return BiPoly({(deg_x, deg_y): rat(c)})

    @staticmethod
    def var_x() -> BiPoly:
        return BiPoly.monomial(1, 0)

    @staticmethod
    def var_y() -> BiPoly:
        return BiPoly.monomial(0, 1)

    # -- ring operations ---------------------------------------------------

    def add(self, other: BiPoly) -> BiPoly:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, _ZERO) + v
        return BiPoly(out)

    def neg(self) -> BiPoly:
        return BiPoly({k: -v for k, v in self.terms.items()})

    def sub(self, other: BiPoly) -> BiPoly:
        return self.add(other.neg())

    def mul(self, other: BiPoly) -> BiPoly:
        out: dict[Term, Rat] = {}
        for (ax, ay), av in self.terms.items():
            for (bx, by), bv in other.terms.items():
                k = (ax + bx, ay + by)
                out[k] = out.get(k, _ZERO) + av * bv
        return BiPoly(out)

    def scale(self, c: int | str | Fraction) -> BiPoly:
        c = rat(c)
        return BiPoly({k: v * c for k, v in self.terms.items()})

    def pow(self, e: int) -> BiPoly:
        if e < 0:
            raise DimensionError("negative power")
        result = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result.mul(base)
            base = base.mul(base)
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, deg_x: int, deg_y: int) -> Rat:
        return self.terms.get((deg_x, deg_y), _ZERO)

    def eval(self, x: Rat, y: Rat) -> Rat:
        total = _ZERO
        for (dx, dy), c in self.terms.items():
            total += c * x**dx * y**dy
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))


def substitute(p: BiPoly, sx: BiPoly, sy: BiPoly) -> BiPoly:
    """Expand p(sx, sy) exactly.

    Powers of the substituted arguments are cached incrementally, so the
    cost is one polynomial product per distinct exponent.
    """
    px: list[BiPoly] = [BiPoly.const(1)]
    py: list[BiPoly] = [BiPoly.const(1)]

    def power(cache: list[BiPoly], base: BiPoly, e: int) -> BiPoly:
        while len(cache) <= e:
            cache.append(cache[-1].mul(base))
        return cache[e]

    total = BiPoly.zero()
    for (dx, dy), c in sorted(p.terms.items()):
        term = power(px, sx, dx).mul(power(py, sy, dy)).scale(c)
        total = total.add(term)
    return total


def from_matrix(m: Sequence[Sequence[int | Fraction]], row_var: str, col_var: str) -> BiPoly:
    """Polynomial with coefficient m[s][t] on row_var^s * col_var^t."""
    if row_var not in ("x", "y") or col_var not in ("x", "y"):
        raise DimensionError("row_var and col_var must be 'x' or 'y'")
    if row_var == col_var:
        raise DimensionError("row_var and col_var must differ")
    out: dict[Term, Rat] = {}
    for s, row in enumerate(m):
        for t, v in enumerate(row):
            v = rat(v)
            if v == 0:
                continue
            key = (s, t) if row_var == "x" else (t, s)
            out[key] = out.get(key, _ZERO) + v
    return BiPoly(out)


def format_poly(p: BiPoly) -> str:
    """Text form with terms sorted by (deg_x, deg_y) descending."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for (dx, dy), c in sorted(p.terms.items(), reverse=True):
        mono: list[str] = []
        if dx == 1:
            mono.append("x")
        elif dx > 1:
            mono.append(f"x^{dx}")
        if dy == 1:
            mono.append("y")
        elif dy > 1:
            mono.append(f"y^{dy}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = "*".join(mono)
        else:
            body = "*".join([str(mag)] + mono)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
