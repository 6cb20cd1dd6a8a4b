"""Exact ranks of the spaces spanned by pairwise invariants and face counts.

The flattened independent coordinates of an increment matrix (its small
quadrant) number floor((r+1)/2) * floor((n-r+1)/2); for pointed pairs the
top row vanishes as well.  Sampling pairs and computing exact ranks
therefore certifies the span dimensions from below while the coordinate
count bounds them from above.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .config import VectorConfig, gen_cocyclic, gen_cyclic, gen_random, new_config
from .errors import DimensionError, GeneralPositionError, InconsistentInputError
from .exactnum import Mat, Rat, rank, rat
from .faces import f_matrix
from .gmatrix import g_of_pair, small_from_full


@dataclass(frozen=True)
class SpanReport:
    n: int
    r: int
    mode: str
    samples_used: int
    achieved_rank: int
    theoretical_dim: int
    basis_seeds: tuple[str, ...]

    def __post_init__(self) -> None:
        assert self.achieved_rank <= self.theoretical_dim

    @property
    def full_rank(self) -> bool:
        return self.achieved_rank == self.theoretical_dim

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "mode": self.mode,
            "samples_used": self.samples_used,
            "achieved_rank": self.achieved_rank,
            "theoretical_dim": self.theoretical_dim,
            "full_rank": self.full_rank,
            "basis_seeds": list(self.basis_seeds),
        }


def theoretical_dim(n: int, r: int, mode: str) -> int:
    """Predicted span dimension for the given mode."""
    if mode == "general":
        return ((r + 1) // 2) * ((n - r + 1) // 2)
    if mode == "pointed":
        return ((r - 1) // 2) * ((n - r + 1) // 2)
    raise ValueError(f"mode must be 'general' or 'pointed', got {mode!r}")


def exact_rank(vectors: Sequence[Sequence[Rat | int | str]]) -> int:
    """Rank over the rationals of a family of equal-length vectors."""
    rows = [tuple(rat(x) for x in vec) for vec in vectors]
    if not rows:
        return 0
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise DimensionError("rank input vectors differ in length")
    if width == 0:
        return 0
    return rank(Mat.from_rows(rows))


def greedy_basis(vectors: Sequence[Sequence[Rat | int | str]]) -> list[int]:
    """Indices of a maximal independent subfamily, greedy in input order."""
    reduced: list[tuple[int, list[Rat]]] = []
    chosen: list[int] = []
    width = None
    for idx, vec in enumerate(vectors):
        row = [rat(x) for x in vec]
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DimensionError("basis input vectors differ in length")
        for piv, base in reduced:
            if row[piv] != 0:
                c = row[piv] / base[piv]
                row = [a - c * b for a, b in zip(row, base)]
        piv = next((i for i, x in enumerate(row) if x != 0), None)
        if piv is not None:
            reduced.append((piv, row))
            chosen.append(idx)
    return chosen


def _flatten_small(g, mode: str) -> tuple[Rat, ...]:
    small = small_from_full(g)
    rows = small.rows[1:] if mode == "pointed" else small.rows
    if mode == "pointed" and any(x != 0 for x in small.rows[0]):
        raise InconsistentInputError("pointed pair has a nonzero top increment row")
    return tuple(rat(x) for row in rows for x in row)


def _moment_point(d: int, t: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(t) ** i for i in range(1, d + 1))


def _mix(points, weights, d: int) -> tuple[Fraction, ...]:
    total = sum(weights)
    return tuple(
        sum(w * p[i] for w, p in zip(weights, points)) / total for i in range(d)
    )


def _nudged_lift(n: int, r: int, fixed, loose, seed: int) -> VectorConfig:
    """Homogenize fixed points plus loose ones nudged into general position."""
    rng = random.Random(seed)
    failure = None
    for _ in range(500):
        pts = list(fixed) + [
            tuple(x + Fraction(rng.randint(-9999, 9999), 10**6) for x in q)
            for q in loose
        ]
        try:
            return new_config(r, n, [(1, *p) for p in pts])
        except GeneralPositionError as exc:
            failure = exc
    raise failure


def _pointed_anchors(n: int, r: int):
    # random point sets in a box almost never have non-extreme points, so
    # deterministic families with interior points at different depths
    # contribute directions the random pool would miss
    d = r - 1
    outer = [_moment_point(d, t) for t in range(n - 1)]
    cen = _mix(outer, [1] * len(outer), d)
    anchors = [(_nudged_lift(n, r, outer, [cen], 1), "interior(deep)")]
    if len(outer) >= 2:
        shallow = _mix([outer[0], outer[1], cen], [10, 10, 1], d)
        anchors.append((_nudged_lift(n, r, outer, [shallow], 2), "interior(edge)"))
    if n - r >= 2:
        inner2 = outer[:-1]
        cen2 = _mix(inner2, [1] * len(inner2), d)
        mid2 = _mix([inner2[0], inner2[1], cen2], [10, 10, 1], d)
        anchors.append(
            (_nudged_lift(n, r, inner2, [cen2, mid2], 3), "interior(two)")
        )
    return anchors


def _pair_pool(n: int, r: int, mode: str, samples: int, seed: int):
    """The first `samples` pairs of the sampling pool, with labels."""
    rng = random.Random(seed)
    out = []
    if mode == "general":
        out.append((gen_cocyclic(n, r), gen_cyclic(n, r), f"cocyclic({n},{r}) -> cyclic({n},{r})"))
        while len(out) < samples:
            s1 = rng.randrange(2**31)
            s2 = rng.randrange(2**31)
            out.append(
                (gen_random(n, r, s1), gen_random(n, r, s2), f"random(seed={s1}) -> random(seed={s2})")
            )
    else:
        for cfg, label in _pointed_anchors(n, r):
            out.append((gen_cyclic(n, r), cfg, f"cyclic({n},{r}) -> {label}"))
        s0 = rng.randrange(2**31)
        out.append(
            (gen_cyclic(n, r), gen_random(n, r, s0, pointed=True), f"cyclic({n},{r}) -> pointed(seed={s0})")
        )
        while len(out) < samples:
            s1 = rng.randrange(2**31)
            s2 = rng.randrange(2**31)
            out.append(
                (
                    gen_random(n, r, s1, pointed=True),
                    gen_random(n, r, s2, pointed=True),
                    f"pointed(seed={s1}) -> pointed(seed={s2})",
                )
            )
    return out[:samples]


def g_span_rank(n: int, r: int, mode: str, samples: int, seed: int) -> SpanReport:
    """Exact rank of the flattened increment matrices of sampled pairs.

    The pool starts with deterministic extreme pairs (the alternating vs
    plain moment-curve pair in general mode, the moment-curve point set
    against its interior-point variants in pointed mode) and is filled with
    seeded random pairs, pointed ones in pointed mode.  Falling short of
    the predicted dimension is reported, not raised.
    """
    dim = theoretical_dim(n, r, mode)
    if r < 1 or n <= r:
        raise DimensionError(f"need n > r >= 1, got r={r}, n={n}")
    if samples < dim:
        raise DimensionError(f"need at least {dim} samples for shape ({n},{r}), got {samples}")
    vectors = []
    labels = []
    for va, vb, label in _pair_pool(n, r, mode, samples, seed):
        g = g_of_pair(va, vb)
        vectors.append(_flatten_small(g, mode))
        labels.append(label)
    achieved = exact_rank(vectors) if dim > 0 else 0
    basis = greedy_basis(vectors) if dim > 0 else []
    return SpanReport(
        n=n,
        r=r,
        mode=mode,
        samples_used=len(vectors),
        achieved_rank=achieved,
        theoretical_dim=dim,
        basis_seeds=tuple(labels[i] for i in basis),
    )


def _config_pool(n: int, r: int, mode: str, samples: int, seed: int):
    rng = random.Random(seed)
    out = []
    if mode == "general":
        out.append((gen_cocyclic(n, r), f"cocyclic({n},{r})"))
        while len(out) < samples:
            s = rng.randrange(2**31)
            out.append((gen_random(n, r, s), f"random(seed={s})"))
    else:
        out.extend(_pointed_anchors(n, r))
        while len(out) < samples:
            s = rng.randrange(2**31)
            out.append((gen_random(n, r, s, pointed=True), f"pointed(seed={s})"))
    return out[:samples]


def f_affine_span_rank(n: int, r: int, mode: str, samples: int, seed: int) -> SpanReport:
    """Exact rank of face-count differences against the cyclic base point.

    Equals g_span_rank on the same pairs, since the increment-to-face-count
    transform is injective.
    """
    dim = theoretical_dim(n, r, mode)
    if r < 1 or n <= r:
        raise DimensionError(f"need n > r >= 1, got r={r}, n={n}")
    if samples < max(dim, 1):
        raise DimensionError(f"need at least {max(dim, 1)} samples for shape ({n},{r}), got {samples}")
    base = gen_cyclic(n, r)
    fbase = f_matrix(base)
    vectors = []
    labels = []
    for cfg, label in _config_pool(n, r, mode, samples, seed):
        fm = f_matrix(cfg)
        vectors.append(
            tuple(
                rat(fm.rows[s][t] - fbase.rows[s][t])
                for s in range(r)
                for t in range(n + 1)
            )
        )
        labels.append(f"cyclic({n},{r}) -> {label}")
    achieved = exact_rank(vectors)
    basis = greedy_basis(vectors)
    return SpanReport(
        n=n,
        r=r,
        mode=mode,
        samples_used=len(vectors),
        achieved_rank=achieved,
        theoretical_dim=dim,
        basis_seeds=tuple(labels[i] for i in basis),
    )
