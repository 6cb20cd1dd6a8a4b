"""Vector configurations and their structural operations.

A configuration is an r x n rational matrix whose columns are in general
position: every r-subset of columns is linearly independent.  Columns are
indexed 1..n in the public API.  Provided here:

* validated construction and the moment-curve generators (cyclic and its
  alternating-sign cocyclic variant), plus seeded random sampling;
* Gale duality (a rank n-r configuration orthogonal to V, unique up to
  linear isomorphism, which is invisible to every count we compute);
* contraction (orthogonal projection onto a column's hyperplane) and
  deletion of a column;
* extremality and (co)neighborliness predicates, which delegate the sign
  pattern enumeration to the faces module.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ArrlevelsError,
    BudgetExhaustedError,
    DimensionError,
    FileFormatError,
    GeneralPositionError,
)
from .exactnum import Mat, Rat, inverse, kernel_basis, rat, rat_str, _int_det


@dataclass(frozen=True)
class VectorConfig:
    """Immutable rank-r configuration of n column vectors in general position."""

    r: int
    n: int
    mat: Mat  # r x n, columns are the vectors

    @property
    def d(self) -> int:
        return self.r - 1

    def column(self, i: int) -> tuple[Rat, ...]:
        """Column i, 1-based."""
        if not 1 <= i <= self.n:
            raise DimensionError(f"column index {i} out of range 1..{self.n}")
        return self.mat.col(i - 1)

    def columns(self) -> list[tuple[Rat, ...]]:
        return [self.mat.col(j) for j in range(self.n)]


def integer_columns(v: VectorConfig) -> list[tuple[int, ...]]:
    """Columns rescaled by positive integers to integer vectors.

    Positive rescaling never changes a sign pattern, so enumeration code
    can work in pure integer arithmetic.
    """
    out = []
    for j in range(v.n):
        col = v.mat.col(j)
        lcm = 1
        for x in col:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append(tuple(int(x * lcm) for x in col))
    return out


def _check_general_position(r: int, n: int, icols: list[tuple[int, ...]]) -> None:
    for subset in itertools.combinations(range(n), r):
        rows = [[icols[j][i] for j in subset] for i in range(r)]
        if _int_det(rows) == 0:
            raise GeneralPositionError(tuple(i + 1 for i in subset))


def new_config(r: int, n: int, entries: Sequence[Sequence[int | str | Fraction]]) -> VectorConfig:
    """Build and validate a configuration from n columns of length r."""
    if r < 1 or n < r:
        raise DimensionError(f"need n >= r >= 1, got r={r}, n={n}")
    if len(entries) != n:
        raise DimensionError(f"expected {n} columns, got {len(entries)}")
    cols = []
    for idx, col in enumerate(entries, start=1):
        if len(col) != r:
            raise DimensionError(f"column {idx} has length {len(col)}, expected {r}")
        cols.append(tuple(rat(x) for x in col))
    mat = Mat(r, n, tuple(tuple(c[i] for c in cols) for i in range(r)))
    v = VectorConfig(r, n, mat)
    _check_general_position(r, n, integer_columns(v))
    return v


def _moment_columns(r: int, params: Sequence[Rat]) -> list[list[Rat]]:
    return [[t**k for k in range(r)] for t in params]


def _validated_params(n: int, params: Sequence[int | str | Fraction] | None) -> list[Rat]:
    if params is None:
        return [Fraction(i) for i in range(n)]
    vals = [rat(t) for t in params]
    if len(vals) != n:
        raise DimensionError(f"expected {n} parameters, got {len(vals)}")
    if any(a >= b for a, b in zip(vals, vals[1:])):
        raise ValueError("parameters must be strictly increasing")
    return vals


def gen_cyclic(n: int, r: int, params: Sequence[int | str | Fraction] | None = None) -> VectorConfig:
    """Moment-curve configuration: v_i = (1, t_i, ..., t_i^(r-1))."""
    ts = _validated_params(n, params)
    return new_config(r, n, _moment_columns(r, ts))


def gen_cocyclic(n: int, r: int, params: Sequence[int | str | Fraction] | None = None) -> VectorConfig:
    """Alternating moment-curve configuration: column i scaled by (-1)^i."""
    ts = _validated_params(n, params)
    cols = _moment_columns(r, ts)
    signed = [[(-1) ** i * x for x in col] for i, col in enumerate(cols, start=1)]
    return new_config(r, n, signed)


def gen_random(n: int, r: int, seed: int, pointed: bool = False) -> VectorConfig:
    """Seed-deterministic random configuration with small integer entries.

    Pointed mode samples integer points in a box and lifts them with a
    leading 1, so the result is the homogenization of a point set.
    """
    if r < 1 or n < r:
        raise DimensionError(f"need n >= r >= 1, got r={r}, n={n}")
    rng = random.Random(seed)
    box = 100 * n
    for _ in range(1000):
        cols = []
        for _ in range(n):
            if pointed:
                col = [1] + [rng.randint(-box, box) for _ in range(r - 1)]
            else:
                col = [rng.randint(-box, box) for _ in range(r)]
            cols.append(col)
        try:
            return new_config(r, n, cols)
        except GeneralPositionError:
            continue
    raise BudgetExhaustedError("could not sample a general-position configuration in 1000 attempts")


def gale_dual(v: VectorConfig) -> VectorConfig:
    """A rank n-r configuration W with V W^T = 0 (columns paired by index)."""
    if v.n == v.r:
        raise DimensionError("Gale dual of a full-rank square configuration is empty")
    k = kernel_basis(v.mat)  # n x (n-r)
    dual_mat = k.transpose()  # (n-r) x n
    out = VectorConfig(v.n - v.r, v.n, dual_mat)
    _check_general_position(out.r, out.n, integer_columns(out))
    return out


def delete(v: VectorConfig, i: int) -> VectorConfig:
    """Remove column i (1-based); rank stays r."""
    if not 1 <= i <= v.n:
        raise DimensionError(f"column index {i} out of range 1..{v.n}")
    if v.n - 1 < v.r:
        raise DimensionError("deletion would drop below full rank size")
    keep = [j for j in range(v.n) if j != i - 1]
    return VectorConfig(v.r, v.n - 1, v.mat.select_cols(keep))


def contract(v: VectorConfig, i: int) -> VectorConfig:
    """Project the other columns orthogonally onto v_i's hyperplane.

    Coordinates are taken in a rational kernel basis of v_i; the face
    counts downstream are invariant under the basis choice.
    """
    if v.r < 2:
        raise DimensionError("contraction requires rank >= 2")
    if not 1 <= i <= v.n:
        raise DimensionError(f"column index {i} out of range 1..{v.n}")
    vi = v.column(i)
    basis = kernel_basis(Mat(1, v.r, (vi,)))  # r x (r-1)
    frame = Mat(v.r, v.r, tuple(basis.row(k) + (vi[k],) for k in range(v.r)))
    frame_inv = inverse(frame)
    cols = []
    for j in range(v.n):
        if j == i - 1:
            continue
        coords = frame_inv.mul(Mat(v.r, 1, tuple((x,) for x in v.mat.col(j))))
        cols.append([coords.entries[k][0] for k in range(v.r - 1)])
    out = new_config(v.r - 1, v.n - 1, cols)
    return out


def scale_column(v: VectorConfig, i: int, c: int | str | Fraction) -> VectorConfig:
    """Rescale column i by a nonzero rational (positive scaling is invisible
    to all sign-pattern counts)."""
    c = rat(c)
    if c == 0:
        raise DimensionError("column scale must be nonzero")
    cols = [list(col) for col in v.columns()]
    cols[i - 1] = [c * x for x in cols[i - 1]]
    return new_config(v.r, v.n, cols)


def transform(v: VectorConfig, a: Mat) -> VectorConfig:
    """Apply an invertible linear map A to every column."""
    if a.nrows != v.r or a.ncols != v.r:
        raise DimensionError("transform matrix must be r x r")
    inverse(a)  # raises when singular
    prod = a.mul(v.mat)
    return VectorConfig(v.r, v.n, prod)


def is_extremal(v: VectorConfig, subset: Iterable[int]) -> bool:
    """True iff zeroing the subset and keeping all others strictly positive
    is a realizable sign pattern of the arrangement."""
    from . import faces

    w = sorted(set(subset))
    if any(not 1 <= i <= v.n for i in w):
        raise DimensionError("subset indices must lie in 1..n")
    if len(w) >= v.r:
        return False
    pattern = tuple(0 if (i + 1) in set(w) else 1 for i in range(v.n))
    return pattern in faces.dissection_pattern_set(v)


def is_pointed(v: VectorConfig) -> bool:
    """All columns strictly inside some open halfspace."""
    return is_extremal(v, ())


def neighborliness_degree(v: VectorConfig) -> int:
    """Largest j with every subset of size <= j extremal; -1 when not pointed."""
    if not is_pointed(v):
        return -1
    degree = 0
    for j in range(1, v.r):
        if all(is_extremal(v, s) for s in itertools.combinations(range(1, v.n + 1), j)):
            degree = j
        else:
            break
    return degree


def coneighborliness_degree(v: VectorConfig) -> int:
    """Largest k with no face at any level t <= k; -1 when pointed."""
    from . import faces

    f = faces.f_matrix(v)
    degree = -1
    for t in range(v.n + 1):
        if any(f.entry(s, t) != 0 for s in range(v.d + 1)):
            break
        degree = t
    return degree


def is_neighborly(v: VectorConfig) -> bool:
    return neighborliness_degree(v) >= (v.r - 1) // 2


def is_coneighborly(v: VectorConfig) -> bool:
    return coneighborliness_degree(v) >= (v.n - v.r - 1) // 2


# ---------------------------------------------------------------------------
# Serialization


def config_to_json(v: VectorConfig) -> dict:
    return {
        "r": v.r,
        "n": v.n,
        "vectors": [[rat_str(x) for x in v.mat.col(j)] for j in range(v.n)],
    }


def config_from_json(obj: object) -> VectorConfig:
    if not isinstance(obj, dict):
        raise FileFormatError("configuration must be a JSON object")
    for key in ("r", "n", "vectors"):
        if key not in obj:
            raise FileFormatError(f"configuration missing field '{key}'")
    r, n, vectors = obj["r"], obj["n"], obj["vectors"]
    if not isinstance(r, int) or not isinstance(n, int):
        raise FileFormatError("fields 'r' and 'n' must be integers")
    if not isinstance(vectors, list) or len(vectors) != n:
        raise FileFormatError(f"field 'vectors' must list {n} columns")
    cols = []
    for ci, col in enumerate(vectors, start=1):
        if not isinstance(col, list) or len(col) != r:
            raise FileFormatError(f"column {ci} must list {r} rational strings")
        parsed = []
        for fi, entry in enumerate(col):
            if not isinstance(entry, str):
                raise FileFormatError(f"column {ci} entry {fi + 1} must be a string")
            try:
                parsed.append(Fraction(entry))
            except (ValueError, ZeroDivisionError) as exc:
                raise FileFormatError(f"column {ci} entry {fi + 1}: bad rational {entry!r}") from exc
        cols.append(parsed)
    try:
        return new_config(r, n, cols)
    except ArrlevelsError as exc:
        raise FileFormatError(f"invalid configuration: {exc}") from exc
