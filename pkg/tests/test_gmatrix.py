"""The pair invariant: skew shape, transforms, closed form, minors."""

from __future__ import annotations

import random

import pytest

from arrlevels.config import gale_dual, gen_cocyclic, gen_cyclic, gen_random
from arrlevels.errors import InconsistentInputError
from arrlevels.faces import FMatrix, f_matrix, fstar_matrix
from arrlevels.gmatrix import (
    GMatrix,
    check_contraction_deletion,
    delta_f_from_g,
    delta_fstar_from_g,
    full_from_small,
    g_closed_form_neighborly,
    g_from_fmatrices,
    g_of_pair,
    satisfies_skew,
    small_from_full,
    small_g_is_nonnegative,
)


def _add_grid(fm: FMatrix, delta) -> FMatrix:
    rows = tuple(
        tuple(fm.entry(s, t) + delta[s][t] for t in range(fm.n + 1))
        for s in range(fm.d + 1)
    )
    return FMatrix(fm.d, fm.n, rows)


def _random_skew(rng: random.Random, r: int, n: int) -> GMatrix:
    small = [
        [rng.randint(-4, 4) for _ in range((n - r - 1) // 2 + 1)]
        for _ in range((r - 1) // 2 + 1)
    ]
    from arrlevels.gmatrix import SmallGMatrix

    return full_from_small(SmallGMatrix(r, n, tuple(tuple(row) for row in small)))


MOTION_G = GMatrix(2, 3, ((1, -1), (0, 0), (-1, 1)))


def test_motion_example_is_skew():
    assert satisfies_skew(MOTION_G)


def test_small_full_round_trip():
    sm = small_from_full(MOTION_G)
    assert sm.rows == ((1,),)
    assert full_from_small(sm).rows == MOTION_G.rows


def test_forced_zero_middle_row_and_column():
    g = g_of_pair(gen_cocyclic(6, 4), gen_cyclic(6, 4))  # r even
    assert all(x == 0 for x in g.rows[2])
    h = g_of_pair(gen_cocyclic(5, 3), gen_cyclic(5, 3))  # n - r even
    assert all(row[1] == 0 for row in h.rows)


def test_delta_f_zero_g():
    zero = GMatrix(2, 3, ((0, 0), (0, 0), (0, 0)))
    assert all(all(x == 0 for x in row) for row in delta_f_from_g(zero))


def test_delta_f_example_values():
    delta = delta_f_from_g(MOTION_G)
    assert delta[0][0] == 1
    assert delta[1][0] == 2
    assert all(sum(row) == 0 for row in delta)


def test_delta_f_row_sums_always_vanish():
    rng = random.Random(21)
    for _ in range(10):
        g = _random_skew(rng, 3, 6)
        assert all(sum(row) == 0 for row in delta_f_from_g(g))


def test_g_from_equal_matrices_is_zero():
    fm = f_matrix(gen_cyclic(5, 3))
    assert g_from_fmatrices(fm, fm).is_zero()


def test_closed_form_small_values():
    sm = g_closed_form_neighborly(5, 3)
    assert sm.rows == ((1,), (2,))
    assert g_closed_form_neighborly(7, 3).rows[0][1] == 3


def test_closed_form_positive():
    for n, r in ((5, 3), (6, 3), (7, 4), (8, 5), (6, 2)):
        sm = g_closed_form_neighborly(n, r)
        assert all(x > 0 for row in sm.rows for x in row)


def test_algebraic_route_matches_closed_form():
    for n, r in ((5, 3), (6, 3), (7, 3), (7, 4)):
        g = g_of_pair(gen_cocyclic(n, r), gen_cyclic(n, r))
        assert small_from_full(g).rows == g_closed_form_neighborly(n, r).rows


def test_inversion_round_trip_random_skew():
    rng = random.Random(17)
    base = f_matrix(gen_cyclic(6, 3))
    for _ in range(8):
        g = _random_skew(rng, 3, 6)
        shifted = _add_grid(base, delta_f_from_g(g))
        assert g_from_fmatrices(base, shifted).rows == g.rows


def test_delta_fstar_matches_enumeration():
    v, w = gen_cocyclic(5, 3), gen_cyclic(5, 3)
    g = g_of_pair(v, w)
    delta = delta_fstar_from_g(g)
    fsv, fsw = fstar_matrix(v), fstar_matrix(w)
    for s in range(6):
        for t in range(6):
            assert delta[s][t] == fsw.entry(s, t) - fsv.entry(s, t)


def test_gale_antisymmetry():
    v = gen_random(5, 3, seed=31)
    w = gen_random(5, 3, seed=32)
    g = g_of_pair(v, w)
    gd = g_of_pair(gale_dual(v), gale_dual(w))
    for j in range(4):
        for k in range(3):
            assert g.entry(j, k) == -gd.entry(k, j)


def test_path_additivity():
    v = gen_random(5, 3, seed=41)
    w = gen_random(5, 3, seed=42)
    x = gen_random(5, 3, seed=43)
    total = g_of_pair(v, w).add(g_of_pair(w, x))
    assert total.rows == g_of_pair(v, x).rows


def test_reversal_negates():
    v = gen_random(6, 3, seed=44)
    w = gen_random(6, 3, seed=45)
    assert g_of_pair(w, v).rows == g_of_pair(v, w).neg().rows


def test_neighborly_rigidity_zero_g():
    v = gen_cyclic(6, 3)
    w = gen_cyclic(6, 3, (0, 2, 3, 7, 10, 15))
    assert g_of_pair(v, w).is_zero()
    assert f_matrix(v).rows == f_matrix(w).rows


def test_pointed_pair_zero_top_row():
    v = gen_random(6, 3, seed=51, pointed=True)
    w = gen_random(6, 3, seed=52, pointed=True)
    g = g_of_pair(v, w)
    assert all(x == 0 for x in g.rows[0])


def test_inversion_rejects_fake_counts():
    fm = f_matrix(gen_cyclic(5, 3))
    rows = [list(r) for r in fm.rows]
    rows[0][0] += 1
    bad = FMatrix(fm.d, fm.n, tuple(tuple(r) for r in rows))
    with pytest.raises(InconsistentInputError):
        g_from_fmatrices(fm, bad)


def test_contraction_identity_holds():
    v = gen_random(6, 3, seed=61, pointed=True)
    w = gen_random(6, 3, seed=62, pointed=True)
    assert check_contraction_deletion(v, w, "contract").holds


def test_deletion_identity_holds():
    assert check_contraction_deletion(gen_cocyclic(6, 3), gen_cyclic(6, 3), "delete").holds


def test_minor_identities_trivial_pair():
    v = gen_cyclic(6, 3)
    assert check_contraction_deletion(v, v, "contract").holds
    assert check_contraction_deletion(v, v, "delete").holds


def test_rank_three_small_quadrant_observation():
    for seed in range(3):
        v = gen_random(6, 3, seed=100 + seed)
        g = g_of_pair(gen_cocyclic(6, 3), v)
        assert isinstance(small_g_is_nonnegative(g), bool)
