"""Straight-line motion between configurations and its mutation events.

Interpolating two same-shape configurations column by column moves every
vector along a segment.  Along a generic such motion only finitely many
times t make some r-subset of columns dependent, one subset at a time;
at each such event one simplicial cell of the sphere arrangement is
exchanged for a complementary one and the face counts jump by a fixed
increment determined by an event type (j, k).  This module isolates the
events with exact rational arithmetic, classifies their types, sums the
increments into the pairwise invariant matrix, and constructs seed paths
of pointed configurations realizing every nontrivial type.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .config import VectorConfig, gen_cyclic, new_config
from .errors import (
    BudgetExhaustedError,
    DimensionError,
    GeneralPositionError,
    GenericityError,
)
from .exactnum import (
    Mat,
    Rat,
    UniPoly,
    _row_echelon,
    _sign,
    bisect_root_interval,
    count_distinct_roots,
    det,
    isolate_roots,
    kernel_basis,
    poly_gcd,
    rat,
    squarefree_part,
)
from .gmatrix import GMatrix, g_of_pair


@dataclass(frozen=True)
class MutationEvent:
    """One detected degeneracy along a motion.

    subset holds the 1-based labels of the columns that become dependent,
    interval is a rational interval isolating the single simple root of
    their determinant polynomial, type_jk is the canonical representative
    of the event type, and sign_flip records the determinant sign before
    and after the root.
    """

    subset: tuple[int, ...]
    interval: tuple[Rat, Rat]
    type_jk: tuple[int, int]
    sign_flip: tuple[int, int]


@dataclass(frozen=True)
class MotionPath:
    start: VectorConfig
    end: VectorConfig
    events: tuple[MutationEvent, ...]


def _interp_poly(values: list[Rat]) -> UniPoly:
    """The polynomial of degree < len(values) through (i, values[i])."""
    npts = len(values)
    full = UniPoly.make([1])
    for i in range(npts):
        full = full.mul(UniPoly.make([-i, 1]))
    out = UniPoly.zero()
    for i, val in enumerate(values):
        if val == 0:
            continue
        basis = full.divmod(UniPoly.make([-i, 1]))[0]
        out = out.add(basis.scale(val / basis(rat(i))))
    return out


def _column_at(v: VectorConfig, w: VectorConfig, j: int, t: Rat) -> list[Rat]:
    va = v.mat.col(j)
    vb = w.mat.col(j)
    return [(1 - t) * a + t * b for a, b in zip(va, vb)]


def interpolated_config(v: VectorConfig, w: VectorConfig, t: Rat | int | str) -> VectorConfig:
    """The configuration (1-t)V + tW, validated for general position."""
    if (v.r, v.n) != (w.r, w.n):
        raise DimensionError("interpolation requires equal shapes")
    tt = rat(t)
    return new_config(v.r, v.n, [_column_at(v, w, j, tt) for j in range(v.n)])


def _det_poly(v: VectorConfig, w: VectorConfig, subset: tuple[int, ...]) -> UniPoly:
    """Determinant of the interpolated columns in subset, as a polynomial in t."""
    r = v.r
    vals = []
    for node in range(r + 1):
        t = rat(node)
        cols = [_column_at(v, w, j, t) for j in subset]
        rows = tuple(tuple(col[i] for col in cols) for i in range(r))
        vals.append(det(Mat(r, r, rows)))
    return _interp_poly(vals)


def _cross_polys(v: VectorConfig, w: VectorConfig, idxs: tuple[int, ...]) -> list[UniPoly]:
    """Coordinates of the generalized cross product of r-1 moving columns.

    The resulting vector is orthogonal to every listed column at every t,
    and each coordinate has degree at most r-1.
    """
    r = v.r
    per_node = []
    for node in range(r):
        t = rat(node)
        cols = [_column_at(v, w, j, t) for j in idxs]
        coords = []
        for c in range(r):
            rows = tuple(tuple(col[i] for col in cols) for i in range(r) if i != c)
            val = det(Mat(r - 1, r - 1, rows))
            coords.append(val if c % 2 == 0 else -val)
        per_node.append(coords)
    return [_interp_poly([per_node[node][c] for node in range(r)]) for c in range(r)]


def _sign_at_root(
    q: UniPoly, det_sf: UniPoly, interval: tuple[Rat, Rat], subset: tuple[int, ...]
) -> int:
    """Sign of q at the unique root of det_sf inside interval.

    Bisects the interval until q is root-free on it, so the sign at an
    endpoint equals the sign at the root.  Nontermination would mean q
    vanishes at the root itself, which the genericity checks exclude.
    """
    a, b = interval
    for _ in range(4000):
        if q(a) != 0 and q(b) != 0 and count_distinct_roots(q, a, b) == 0:
            return _sign(q(a))
        a, b = bisect_root_interval(det_sf, (a, b))
    raise GenericityError(
        (tuple(i + 1 for i in subset),),
        "alignment sign undecidable; vertex direction degenerates at the event",
    )


def _classify(
    v: VectorConfig,
    w: VectorConfig,
    subset: tuple[int, ...],
    interval: tuple[Rat, Rat],
    det_sf: UniPoly,
    t_plus: Rat,
    antipodal: bool,
) -> tuple[int, int]:
    """Type (j, k) of the cell appearing after the event at 0-based subset.

    Vertex directions are the cross products of the subset minus one
    column; their signs are aligned at the root (where all vertices merge)
    and remain the vertex choice throughout the following gap, so the cell
    can be sampled at t_plus.  j counts subset columns on the negative
    side of an interior point of the cell, k counts the others.
    """
    r, n = v.r, v.n
    wpolys = {i: _cross_polys(v, w, tuple(m for m in subset if m != i)) for i in subset}
    ref = wpolys[subset[0]]
    eps = {subset[0]: 1}
    for i in subset[1:]:
        q = UniPoly.zero()
        for c in range(r):
            q = q.add(wpolys[i][c].mul(ref[c]))
        eps[i] = _sign_at_root(q, det_sf, interval, subset)
    if antipodal:
        eps = {i: -e for i, e in eps.items()}
    point = [rat(0)] * r
    for i in subset:
        vert = wpolys[i]
        for c in range(r):
            point[c] += eps[i] * vert[c](t_plus)
    members = set(subset)
    j = k = 0
    for m in range(n):
        col = _column_at(v, w, m, t_plus)
        val = sum(a * b for a, b in zip(col, point))
        assert val != 0, "interior sample point lies on a hyperplane"
        if val < 0:
            if m in members:
                j += 1
            else:
                k += 1
    return (j, k)


def _canonical_type(jk: tuple[int, int], r: int, n: int) -> tuple[int, int]:
    j, k = jk
    return min((j, k), (r - j, n - r - k))


class _RootItem:
    __slots__ = ("subset", "poly", "sqfree", "interval")

    def __init__(self, subset, poly, sqfree, interval):
        self.subset = subset
        self.poly = poly
        self.sqfree = sqfree
        self.interval = interval


def _gap_sample_points(items: list[_RootItem]) -> list[Rat]:
    out = []
    for idx, item in enumerate(items):
        nxt = items[idx + 1].interval[0] if idx + 1 < len(items) else rat(1)
        out.append((item.interval[1] + nxt) / 2)
    return out


def gap_samples(path: MotionPath) -> list[Rat]:
    """One rational time strictly after each event and before the next."""
    out = []
    for idx, ev in enumerate(path.events):
        nxt = path.events[idx + 1].interval[0] if idx + 1 < len(path.events) else rat(1)
        out.append((ev.interval[1] + nxt) / 2)
    return out


def _validate_small_subsets(v: VectorConfig, w: VectorConfig) -> None:
    """For n = r, require every (r-1)-subset to stay independent on (0, 1).

    With no spare columns around, a degenerating (r-1)-subset would not be
    caught by the shared-root test, yet it breaks vertex classification.
    """
    r = v.r
    if r < 2:
        return
    for small in combinations(range(v.n), r - 1):
        polys = _cross_polys(v, w, small)
        g = UniPoly.zero()
        for q in polys:
            g = poly_gcd(g, q)
        if g.degree >= 1 and count_distinct_roots(g, rat(0), rat(1)) > 0:
            raise GenericityError(
                (tuple(i + 1 for i in small),),
                f"columns {[i + 1 for i in small]} become dependent during the motion",
            )


def detect_mutations(v: VectorConfig, w: VectorConfig) -> MotionPath:
    """Isolate, validate, and classify all events of the straight-line motion.

    Raises GenericityError naming the offending column subsets when a root
    is not simple, two subsets degenerate at a shared time, or an
    intermediate dependency would make classification ambiguous.
    """
    if (v.r, v.n) != (w.r, w.n):
        raise DimensionError("motion endpoints must have equal shapes")
    r, n = v.r, v.n
    zero, one = rat(0), rat(1)
    items: list[_RootItem] = []
    with_roots: list[tuple[tuple[int, ...], UniPoly]] = []
    for subset in combinations(range(n), r):
        poly = _det_poly(v, w, subset)
        found = isolate_roots(poly, zero, one)
        if not found:
            continue
        if any(not simple for _, simple in found):
            raise GenericityError(
                (tuple(i + 1 for i in subset),),
                f"columns {[i + 1 for i in subset]} have a multiple degeneracy time",
            )
        sqfree = squarefree_part(poly)
        with_roots.append((subset, poly))
        for interval, _ in found:
            items.append(_RootItem(subset, poly, sqfree, interval))
    for (s1, p1), (s2, p2) in combinations(with_roots, 2):
        shared = poly_gcd(p1, p2)
        if shared.degree >= 1 and count_distinct_roots(shared, zero, one) > 0:
            raise GenericityError(
                (tuple(i + 1 for i in s1), tuple(i + 1 for i in s2)),
                f"columns {[i + 1 for i in s1]} and {[i + 1 for i in s2]}"
                " degenerate at a shared time",
            )
    if n == r:
        _validate_small_subsets(v, w)
    for _ in range(512):
        items.sort(key=lambda it: it.interval[0])
        overlapping = False
        for fst, snd in zip(items, items[1:]):
            if snd.interval[0] < fst.interval[1]:
                fst.interval = bisect_root_interval(fst.sqfree, fst.interval)
                snd.interval = bisect_root_interval(snd.sqfree, snd.interval)
                overlapping = True
        if not overlapping:
            break
    else:
        raise GenericityError(
            tuple(tuple(i + 1 for i in it.subset) for it in items),
            "event intervals failed to separate",
        )
    samples = _gap_sample_points(items)
    events = []
    for item, t_plus in zip(items, samples):
        raw = _classify(v, w, item.subset, item.interval, item.sqfree, t_plus, False)
        before = _sign(item.poly(item.interval[0]))
        after = _sign(item.poly(item.interval[1]))
        assert before == -after and before != 0
        events.append(
            MutationEvent(
                subset=tuple(i + 1 for i in item.subset),
                interval=item.interval,
                type_jk=_canonical_type(raw, r, n),
                sign_flip=(before, after),
            )
        )
    return MotionPath(start=v, end=w, events=tuple(events))


def classify_event(path: MotionPath, index: int, antipodal: bool = False) -> tuple[int, int]:
    """Re-derive the raw (j, k) of one event of a detected path.

    The antipodal flag picks the complementary cell; the result is then
    (r-j, n-r-k) of the default run.  Both choices canonicalize to the
    stored event type.
    """
    if not 0 <= index < len(path.events):
        raise DimensionError(f"event index {index} out of range")
    ev = path.events[index]
    subset = tuple(i - 1 for i in ev.subset)
    poly = _det_poly(path.start, path.end, subset)
    t_plus = gap_samples(path)[index]
    return _classify(
        path.start, path.end, subset, ev.interval, squarefree_part(poly), t_plus, antipodal
    )


def _increment_rows(r: int, n: int, jk: tuple[int, int]) -> list[list[int]]:
    j, k = jk
    rows = [[0] * (n - r + 1) for _ in range(r + 1)]
    if 2 * j != r and 2 * k != n - r:
        rows[j][k] += 1
        rows[r - j][n - r - k] += 1
        rows[r - j][k] -= 1
        rows[j][n - r - k] -= 1
    return rows


def g_from_motion(v: VectorConfig, w: VectorConfig) -> GMatrix:
    """Sum of per-event increments along the straight-line motion.

    Cross-checked against the algebraic route from the two enumerated
    f-matrices; genericity errors propagate to the caller, which may
    perturb the endpoint and retry.
    """
    path = detect_mutations(v, w)
    r, n = v.r, v.n
    rows = [[0] * (n - r + 1) for _ in range(r + 1)]
    for ev in path.events:
        inc = _increment_rows(r, n, ev.type_jk)
        for j in range(r + 1):
            for k in range(n - r + 1):
                rows[j][k] += inc[j][k]
    result = GMatrix(r, n, tuple(tuple(row) for row in rows))
    assert result == g_of_pair(v, w), "motion route disagrees with algebraic route"
    return result


def events_to_json(path: MotionPath) -> list[dict]:
    """Events in the stable trace shape used by the command line."""
    out = []
    for ev in path.events:
        a, b = ev.interval
        out.append(
            {
                "R": list(ev.subset),
                "interval": [str(a), str(b)],
                "type": list(ev.type_jk),
                "flip": "+-" if ev.sign_flip[0] > 0 else "-+",
            }
        )
    return out


def perturb(
    w: VectorConfig, seed: int, magnitude: Rat | int | str = Fraction(1, 10**6)
) -> VectorConfig:
    """Nudge every entry by a seeded rational of absolute value <= magnitude.

    Deterministic in (seed, magnitude).  Face counts of the result are not
    guaranteed to match the input; callers needing them preserved must
    re-enumerate and compare.
    """
    mag = rat(magnitude)
    if mag < 0:
        raise DimensionError("perturbation magnitude must be nonnegative")
    if mag == 0:
        return w
    rng = random.Random(seed)
    denom = 10**6
    for _ in range(1000):
        cols = []
        for j in range(w.n):
            cols.append([x + mag * Fraction(rng.randint(-denom, denom), denom) for x in w.mat.col(j)])
        try:
            return new_config(w.r, w.n, cols)
        except GeneralPositionError:
            continue
    raise BudgetExhaustedError("could not restore general position while perturbing")


def _affine_coords(points: list[tuple[Rat, ...]], target: list[Rat]) -> list[Rat] | None:
    """Coefficients writing target as an affine combination of d points in R^(d-?).

    Returns None when the system is inconsistent or the points are affinely
    dependent.  Solved in homogeneous coordinates, where affine combinations
    become linear ones.
    """
    d = len(points)
    lifted = [(rat(1),) + tuple(p) for p in points]
    rhs = [rat(1)] + list(target)
    nrows = len(rhs)
    aug = tuple(tuple(col[i] for col in lifted) + (rhs[i],) for i in range(nrows))
    rows, pivots = _row_echelon(Mat(nrows, d + 1, aug))
    if pivots != list(range(d)):
        return None
    return [rows[i][d] for i in range(d)]


def _moment_point(i: int, d: int) -> tuple[Rat, ...]:
    return tuple(rat(i) ** e for e in range(1, d + 1))


def _hyperplane_normal(points: list[tuple[Rat, ...]]) -> list[Rat] | None:
    """A nonzero vector orthogonal to the affine hull of d points in R^d."""
    d = len(points)
    base = points[0]
    rows = tuple(
        tuple(points[i][c] - base[c] for c in range(d)) for i in range(1, d)
    )
    ker = kernel_basis(Mat(d - 1, d, rows))
    if ker.ncols != 1:
        return None
    return list(ker.col(0))


def _lift(points: list[tuple[Rat, ...]]) -> list[list[Rat]]:
    return [[rat(1)] + list(p) for p in points]


def mutation_rich_path(n: int, r: int, seed: int) -> list[VectorConfig]:
    """Pointed configurations whose consecutive pairs step through single
    mutations covering every type (j, k), 1 <= j <= (r-1)//2,
    0 <= k <= (n-r-1)//2.

    A sweep construction: d-1 stationary points sit on the moment curve,
    n-d more cluster in a small ball around the next curve point, and one
    moving point crosses the cluster hyperplanes along lines perpendicular
    to the stationary hull, one line per required j.  Each crossing is an
    event with the predicted j, and a full sweep makes k take every value.
    The cluster radius is validated a posteriori and halved on failure.
    All output first coordinates equal 1, so every configuration is pointed.
    """
    if r < 1 or n < r:
        raise DimensionError(f"need n >= r >= 1, got r={r}, n={n}")
    required = {
        (j, k)
        for j in range(1, (r - 1) // 2 + 1)
        for k in range(0, (n - r - 1) // 2 + 1)
    }
    if not required:
        return [gen_cyclic(n, r)]
    d = r - 1
    anchors = [_moment_point(i, d) for i in range(1, d + 1)]
    normal = _hyperplane_normal(anchors)
    if normal is None:
        raise BudgetExhaustedError("stationary anchor points are degenerate")
    sigmas = [tuple(range(1, d - j + 2)) for j in range(1, (r - 1) // 2 + 1)]
    line_feet = []
    for sigma in sigmas:
        size = len(sigma)
        beta = Fraction(1 + d - size, size)
        foot = [rat(0)] * d
        for lab in range(1, d + 1):
            coef = beta if lab in sigma else rat(-1)
            for c in range(d):
                foot[c] += coef * anchors[lab - 1][c]
        line_feet.append(foot)
    rng = random.Random(seed)
    eps = Fraction(1, 4)
    jitter_denom = 10**9
    for _ in range(12):
        for _ in range(25):
            cluster = []
            for _ in range(n - d):
                delta = [Fraction(rng.randint(-999, 999), 1000) for _ in range(d)]
                cluster.append(tuple(anchors[d - 1][c] + eps * delta[c] for c in range(d)))
            stationary = anchors[: d - 1] + cluster
            try:
                new_config(r, n - 1, _lift(stationary))
            except GeneralPositionError:
                continue
            plan = _plan_sweeps(sigmas, line_feet, anchors, cluster, normal)
            if plan is None:
                break
            waypoints = []
            ok = True
            for travel in plan:
                for s_val in travel:
                    jit = [
                        Fraction(rng.randint(-999, 999), jitter_denom) for _ in range(d)
                    ]
                    waypoints.append(
                        tuple(s_val[c] + jit[c] for c in range(d))
                    )
            configs = []
            for pt in waypoints:
                try:
                    configs.append(new_config(r, n, _lift(stationary + [pt])))
                except GeneralPositionError:
                    ok = False
                    break
            if not ok:
                continue
            try:
                outputs, seen = _run_segments(configs)
            except GenericityError:
                continue
            if required <= seen:
                for cfg in outputs:
                    assert all(cfg.column(i + 1)[0] == 1 for i in range(n))
                return outputs
            break
        eps /= 2
    raise BudgetExhaustedError("sweep construction failed to cover all types")


def _plan_sweeps(
    sigmas: list[tuple[int, ...]],
    line_feet: list[list[Rat]],
    anchors: list[tuple[Rat, ...]],
    cluster: list[tuple[Rat, ...]],
    normal: list[Rat],
) -> list[list[list[Rat]]] | None:
    """Endpoints of each sweep line, validated against every cluster choice.

    For each line the crossing with the hyperplane through the first d-1
    anchors and one cluster point must carry affine coefficients that are
    positive exactly on the line's label set.  Returns None (caller shrinks
    the cluster) as soon as one crossing lands outside its region.
    """
    d = len(anchors)
    unorm = sum(x * x for x in normal)
    plans = []
    for sigma, foot in zip(sigmas, line_feet):
        span = rat(1)
        for q in cluster:
            pts = list(anchors[: d - 1]) + [q]
            nu = _hyperplane_normal(pts)
            if nu is None:
                return None
            denom = sum(a * b for a, b in zip(nu, normal))
            if denom == 0:
                return None
            s_c = sum(a * (b - c) for a, b, c in zip(nu, pts[0], foot)) / denom
            crossing = [foot[c] + s_c * normal[c] for c in range(d)]
            coords = _affine_coords(pts, crossing)
            if coords is None:
                return None
            for lab in range(1, d + 1):
                val = coords[lab - 1]
                if lab in sigma and val <= 0:
                    return None
                if lab not in sigma and val >= 0:
                    return None
            span = max(span, abs(s_c))
        reach = 2 * span + 1
        lo = [foot[c] - reach * normal[c] for c in range(d)]
        hi = [foot[c] + reach * normal[c] for c in range(d)]
        plans.append([lo, hi])
    return plans


def _run_segments(configs: list[VectorConfig]) -> tuple[list[VectorConfig], set[tuple[int, int]]]:
    """Detect along consecutive waypoint configs; emit one config per event."""
    outputs = [configs[0]]
    seen: set[tuple[int, int]] = set()
    for a, b in zip(configs, configs[1:]):
        path = detect_mutations(a, b)
        samples = gap_samples(path)
        for ev, t_plus in zip(path.events, samples):
            seen.add(ev.type_jk)
            outputs.append(interpolated_config(a, b, t_plus))
    return outputs, seen
