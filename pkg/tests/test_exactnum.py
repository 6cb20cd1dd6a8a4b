"""Rational scalars, matrices, and univariate root isolation."""

from __future__ import annotations

from fractions import Fraction

import pytest

from arrlevels.errors import BoundaryRootError, DegeneratePolynomialError, DimensionError
from arrlevels.exactnum import (
    Mat,
    UniPoly,
    bisect_root_interval,
    count_distinct_roots,
    det,
    inverse,
    isolate_roots,
    kernel_basis,
    poly_gcd,
    rank,
    rat,
    rat_str,
    refine_root_interval,
    squarefree_part,
)


def test_rat_serialization_round_trip():
    assert rat_str(rat("3/6")) == "1/2"
    assert rat_str(rat(-4)) == "-4"
    assert rat(rat_str(Fraction(-7, 3))) == Fraction(-7, 3)


def test_rat_rejects_negative_denominator_text():
    with pytest.raises(ValueError):
        rat("3/-2")


def test_det_identity():
    assert det(Mat.identity(2)) == 1


def test_det_rank_deficient():
    assert det(Mat.from_rows([[1, 1], [0, 0]])) == 0


def test_det_half_entries():
    m = Mat.from_rows([[1, 0], [Fraction(1, 2), Fraction(-1, 2)]])
    assert det(m) == Fraction(-1, 2)


def test_det_requires_square():
    with pytest.raises(DimensionError):
        det(Mat.from_rows([[1, 2, 3]]))


def test_det_equal_columns_vanishes():
    m = Mat.from_rows([[1, 2, 1], [3, 5, 3], [0, 7, 0]])
    assert det(m) == 0


def _cofactor_det(m: Mat) -> Fraction:
    if m.nrows == 1:
        return m.entries[0][0]
    total = Fraction(0)
    for j in range(m.ncols):
        minor = Mat.from_rows(
            [[m.entries[i][c] for c in range(m.ncols) if c != j] for i in range(1, m.nrows)]
        )
        total += (-1) ** j * m.entries[0][j] * _cofactor_det(minor)
    return total


def test_det_matches_cofactor_expansion():
    import random

    rng = random.Random(99)
    for _ in range(12):
        m = Mat.from_rows(
            [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)] for _ in range(3)]
        )
        assert det(m) == _cofactor_det(m)


def test_kernel_basis_single_vector():
    m = Mat.from_rows([[1, 0, 1], [0, 1, 1]])
    k = kernel_basis(m)
    assert k.ncols == 1
    col = [k.entries[i][0] for i in range(3)]
    scale = col[2]
    assert scale != 0
    assert [c / scale for c in col] == [-1, -1, 1]
    assert m.mul(k).is_zero()


def test_kernel_basis_trivial():
    assert kernel_basis(Mat.identity(3)).ncols == 0


def test_kernel_basis_full():
    k = kernel_basis(Mat.zeros(1, 2))
    assert k.ncols == 2
    assert rank(k) == 2


def test_rank_examples():
    assert rank(Mat.identity(2)) == 2
    assert rank(Mat.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(Mat.zeros(0, 0)) == 0


def test_inverse_round_trip():
    m = Mat.from_rows([[2, 1], [1, 1]])
    assert m.mul(inverse(m)).entries == Mat.identity(2).entries


def test_poly_gcd_and_squarefree():
    # (t-1)^2 (t+2) against (t-1)(t+3)
    a = UniPoly.make([1, -1]).mul(UniPoly.make([1, -1])).mul(UniPoly.make([2, 1]))
    b = UniPoly.make([1, -1]).mul(UniPoly.make([3, 1]))
    g = poly_gcd(a, b)
    assert g.degree == 1 and g(Fraction(1)) == 0
    sf = squarefree_part(a)
    assert sf.degree == 2
    assert sf(Fraction(1)) == 0 and sf(Fraction(-2)) == 0


def test_isolate_linear_root():
    p = UniPoly.make([1, -2])  # 1 - 2t
    out = isolate_roots(p, Fraction(0), Fraction(1))
    assert len(out) == 1
    (a, b), simple = out[0]
    assert simple
    assert a < Fraction(1, 2) < b


def test_isolate_two_simple_roots():
    third = UniPoly.make([Fraction(-1, 3), 1])
    two_thirds = UniPoly.make([Fraction(-2, 3), 1])
    p = third.mul(two_thirds)
    out = isolate_roots(p, Fraction(0), Fraction(1))
    assert len(out) == 2
    (a1, b1), s1 = out[0]
    (a2, b2), s2 = out[1]
    assert s1 and s2
    assert a1 < Fraction(1, 3) < b1 < Fraction(2, 3) or b1 <= a2
    assert a2 < Fraction(2, 3) < b2


def test_isolate_constant_no_roots():
    assert isolate_roots(UniPoly.make([3]), Fraction(0), Fraction(1)) == []


def test_isolate_flags_multiple_root():
    p = UniPoly.make([Fraction(-1, 2), 1])
    out = isolate_roots(p.mul(p), Fraction(0), Fraction(1))
    assert len(out) == 1
    assert out[0][1] is False


def test_isolate_zero_polynomial_rejected():
    with pytest.raises(DegeneratePolynomialError):
        isolate_roots(UniPoly.zero(), Fraction(0), Fraction(1))


def test_isolate_boundary_root_rejected():
    p = UniPoly.make([0, 1])  # root at t=0
    with pytest.raises(BoundaryRootError):
        isolate_roots(p, Fraction(0), Fraction(1))


def test_count_distinct_roots_matches_isolation():
    p = UniPoly.make([Fraction(-1, 4), 0, 1])  # t^2 - 1/4, roots +-1/2
    assert count_distinct_roots(p, Fraction(-1), Fraction(1)) == 2
    assert count_distinct_roots(p, Fraction(0), Fraction(1)) == 1


def test_refinement_narrows_and_keeps_root():
    p = UniPoly.make([1, -2])
    ((a, b), _), = isolate_roots(p, Fraction(0), Fraction(1))
    a2, b2 = refine_root_interval(p, (a, b), Fraction(1, 1000))
    assert b2 - a2 <= Fraction(1, 1000)
    assert p(a2) * p(b2) < 0


def test_bisect_keeps_sign_change():
    p = UniPoly.make([1, -2])
    interval = (Fraction(0), Fraction(1))
    for _ in range(6):
        interval = bisect_root_interval(p, interval)
    a, b = interval
    assert a < Fraction(1, 2) < b
    assert b - a <= Fraction(1, 32)
