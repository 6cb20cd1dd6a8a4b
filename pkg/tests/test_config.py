"""Configuration construction, generators, duality, minors, predicates."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from arrlevels.config import (
    config_from_json,
    config_to_json,
    contract,
    coneighborliness_degree,
    delete,
    gale_dual,
    gen_cocyclic,
    gen_cyclic,
    gen_random,
    integer_columns,
    is_extremal,
    is_neighborly,
    is_coneighborly,
    is_pointed,
    neighborliness_degree,
    new_config,
    scale_column,
    transform,
)
from arrlevels.errors import (
    DimensionError,
    FileFormatError,
    GeneralPositionError,
)
from arrlevels.exactnum import Mat
from arrlevels.faces import f_matrix, fstar_matrix


TRIANGLE = new_config(2, 3, [(1, 0), (0, 1), (1, 1)])


def test_new_config_valid_triangle():
    assert TRIANGLE.r == 2 and TRIANGLE.n == 3


def test_new_config_collinear_pair_rejected():
    with pytest.raises(GeneralPositionError) as info:
        new_config(2, 2, [(1, 0), (2, 0)])
    assert info.value.subset == (1, 2)


def test_new_config_rank_one():
    v = new_config(1, 2, [(1,), (-3,)])
    assert integer_columns(v) == [(1,), (-3,)]


def test_new_config_needs_enough_columns():
    with pytest.raises(DimensionError):
        new_config(3, 2, [(1, 0, 0), (0, 1, 0)])


def test_gen_cyclic_moment_columns():
    v = gen_cyclic(3, 2, (0, 1, 2))
    assert integer_columns(v) == [(1, 0), (1, 1), (1, 2)]


def test_gen_cocyclic_alternates_signs():
    v = gen_cocyclic(3, 2, (0, 1, 2))
    assert integer_columns(v) == [(-1, 0), (1, 1), (-1, -2)]


def test_gen_cyclic_square_case():
    v = gen_cyclic(2, 2, (0, 1))
    assert integer_columns(v) == [(1, 0), (1, 1)]


def test_gen_cyclic_rejects_unsorted_params():
    with pytest.raises(ValueError):
        gen_cyclic(3, 2, (1, 1, 2))


def test_gen_random_deterministic():
    a = gen_random(4, 2, seed=7)
    b = gen_random(4, 2, seed=7)
    assert a.mat.entries == b.mat.entries


def test_gen_random_pointed_lift():
    v = gen_random(5, 3, seed=1, pointed=True)
    assert all(v.mat.entries[0][j] == 1 for j in range(5))
    assert is_pointed(v)


def test_gale_dual_orthogonality():
    dual = gale_dual(TRIANGLE)
    assert dual.r == 1 and dual.n == 3
    assert TRIANGLE.mat.mul(dual.mat.transpose()).is_zero()


def test_gale_dual_of_cyclic42():
    v = gen_cyclic(4, 2)
    dual = gale_dual(v)
    assert (dual.r, dual.n) == (2, 4)
    assert v.mat.mul(dual.mat.transpose()).is_zero()


def test_gale_dual_square_rejected():
    with pytest.raises(DimensionError):
        gale_dual(gen_cyclic(3, 3))


def test_double_dual_f_matrix_fixed_point():
    v = gen_cyclic(5, 3)
    assert f_matrix(gale_dual(gale_dual(v))).rows == f_matrix(v).rows


def test_delete_cyclic_column():
    left = delete(gen_cyclic(4, 2, (0, 1, 2, 3)), 4)
    right = gen_cyclic(3, 2, (0, 1, 2))
    assert left.mat.entries == right.mat.entries


def test_contract_commutes_with_duality():
    v = gen_cyclic(5, 3)
    for i in (1, 3, 5):
        lhs = f_matrix(gale_dual(contract(v, i)))
        rhs = f_matrix(delete(gale_dual(v), i))
        assert lhs.rows == rhs.rows


def test_contract_rank_two_gives_scalars():
    w = contract(TRIANGLE, 1)
    assert w.r == 1 and w.n == 2
    assert all(col != (0,) for col in (w.mat.col(0), w.mat.col(1)))


def test_neighborliness_of_cyclic():
    v = gen_cyclic(6, 3)
    assert neighborliness_degree(v) >= 1
    assert is_neighborly(v)


def test_coneighborliness_of_cocyclic():
    v = gen_cocyclic(6, 3)
    assert coneighborliness_degree(v) >= 1
    assert is_coneighborly(v)


def test_unpointed_neighborliness_is_minus_one():
    v = new_config(2, 3, [(1, 0), (0, 1), (-1, -1)])
    assert not is_pointed(v)
    assert neighborliness_degree(v) == -1


def test_empty_set_extremal_iff_pointed():
    assert is_extremal(TRIANGLE, ()) == is_pointed(TRIANGLE)
    spread = new_config(2, 3, [(1, 0), (0, 1), (-1, -1)])
    assert is_extremal(spread, ()) == is_pointed(spread) == False


def test_singletons_extremal_in_cyclic53():
    v = gen_cyclic(5, 3)
    assert all(is_extremal(v, (i,)) for i in range(1, 6))


def test_singletons_not_extremal_in_cocyclic73():
    v = gen_cocyclic(7, 3)
    assert not any(is_extremal(v, (i,)) for i in range(1, 8))


def test_fstar_equals_dual_f():
    v = gen_cyclic(5, 3)
    dual = gale_dual(v)
    fs = fstar_matrix(v)
    fd = f_matrix(dual)
    for s in range(v.n + 1):
        for t in range(v.n + 1):
            assert fs.entry(s, t) == fd.entry(v.n - s, t)


def test_pointedness_duality():
    for v in (gen_cyclic(5, 3), gen_cocyclic(5, 3), gen_random(6, 3, seed=3)):
        pointed = f_matrix(v).entry(0, 0) == 1
        assert pointed == (fstar_matrix(v).entry(v.n, 0) == 0)


def test_positive_scaling_preserves_f():
    v = gen_cyclic(4, 2)
    w = scale_column(v, 2, Fraction(7, 3))
    assert f_matrix(w).rows == f_matrix(v).rows
    assert fstar_matrix(w).rows == fstar_matrix(v).rows


def test_invertible_transform_preserves_f():
    v = gen_cyclic(5, 3)
    a = Mat.from_rows([[1, 2, 0], [0, 1, 5], [3, 0, 1]])
    assert f_matrix(transform(v, a)).rows == f_matrix(v).rows


def test_transform_rejects_singular():
    v = gen_cyclic(4, 2)
    with pytest.raises(Exception):
        transform(v, Mat.from_rows([[1, 2], [2, 4]]))


def test_json_round_trip():
    v = gen_random(5, 3, seed=11)
    text = json.dumps(config_to_json(v))
    w = config_from_json(json.loads(text))
    assert w.mat.entries == v.mat.entries


def test_json_rejects_bad_fields():
    with pytest.raises(FileFormatError):
        config_from_json({"r": 2, "n": 3})
    with pytest.raises(FileFormatError):
        config_from_json({"r": 2, "n": 1, "vectors": [["1", "0"]]})
