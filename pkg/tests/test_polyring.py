"""Homogeneous rational polynomials, invariant decompositions, MacWilliams."""

import random
from math import comb

import pytest

from amdesign.gf2core import (
    WeightDistribution,
    code_from_rows,
    dual,
    weight_distribution,
)
from amdesign.catalog import builtin
from amdesign.polyring import (
    HomPoly,
    SpanError,
    X,
    Y,
    check_relative_invariance,
    gleason_basis,
    gleason_decompose,
    macwilliams_transform_classical,
    q8,
    vanishing_coefficient_search,
    weight_enumerator_poly,
)


def we(c):
    return weight_enumerator_poly(weight_distribution(c), c.n)


def test_arithmetic():
    assert (X + Y) * (X - Y) == X**2 - Y**2
    assert ((X**2 + Y**2) ** 2).coeffs == (1, 0, 2, 0, 1)
    assert (X**3).coefficient(0) == 1
    p = HomPoly.monomial(3, 2, 5)
    assert p.degree == 5 and p.coefficient(2) == 5
    assert (p - p).is_zero
    assert (2 * X) == X * 2 == X + X
    assert (-X).coeffs == (-1, 0)
    with pytest.raises(ValueError):
        X + X**2
    with pytest.raises(ValueError):
        p.coefficient(6)
    with pytest.raises(ValueError):
        HomPoly(2, (1, 0))


def test_substitutions():
    assert (X**2).substitute_sum_diff().coeffs == (1, 2, 1)
    assert (X + Y).substitute_negate_y() == X - Y
    assert (X * Y * (X**2 + Y**2)).divide_xy(1) == X**2 + Y**2
    with pytest.raises(ValueError):
        (X**2 + Y**2).divide_xy(1)
    assert str(X**2 - Y**2) == "x^2 - y^2"


def test_q8_coefficients():
    assert q8().coeffs == (0, 1, 0, -7, 0, 7, 0, -1, 0)
    assert check_relative_invariance(q8(), 1)


def test_gleason_basis_is_relatively_invariant():
    for t, n in [(0, 8), (0, 16), (1, 14), (2, 16), (3, 22)]:
        basis = gleason_basis(t, n)
        assert basis
        for b in basis:
            assert b.degree == n - 2 * t
            assert check_relative_invariance(b, t)


def test_gleason_basis_errors():
    with pytest.raises(ValueError):
        gleason_basis(0, 7)
    with pytest.raises(ValueError):
        gleason_basis(-1, 8)
    with pytest.raises(ValueError):
        gleason_basis(1, 8)


def test_gleason_decompose_examples(type1):
    assert gleason_decompose(we(builtin("e8")), 0, 8) == [1, -4]
    assert gleason_decompose(we(type1), 0, 16) == [1, -8, 0]
    assert gleason_decompose(q8(), 1, 10) == [1]


def test_gleason_decompose_round_trip(type1):
    coords = gleason_decompose(we(type1), 0, 16)
    basis = gleason_basis(0, 16)
    total = HomPoly.zero(16)
    for c, b in zip(coords, basis):
        total = total + c * b
    assert total == we(type1)


def test_gleason_decompose_outside_span():
    with pytest.raises(SpanError) as err:
        gleason_decompose(X**8 + Y**8, 0, 8)
    residual = err.value.residual
    assert not residual.is_zero
    basis = gleason_basis(0, 8)
    approx = HomPoly.zero(8)
    for c, b in zip(err.value.partial, basis):
        approx = approx + c * b
    assert approx + residual == X**8 + Y**8


def test_gleason_decompose_degree_mismatch():
    with pytest.raises(ValueError):
        gleason_decompose(X**6, 0, 8)


def test_check_relative_invariance():
    assert check_relative_invariance(X**2 + Y**2, 0)
    assert not check_relative_invariance(X**2 - Y**2, 0)
    with pytest.raises(ValueError):
        check_relative_invariance(X + Y, 0)


def test_vanishing_coefficient_search():
    # independent oracle: coefficient of z^i in (1+z)^2 (1-z)^alpha
    def coeff(alpha, i):
        return sum(
            comb(2, i - j) * (-1) ** j * comb(alpha, j)
            for j in range(alpha + 1)
            if 0 <= i - j <= 2
        )

    expected = [
        (a, i)
        for a in range(16)
        for i in range((a + 2) // 2 + 1)
        if coeff(a, i) == 0
    ]
    found = vanishing_coefficient_search(16)
    assert found == expected
    assert found == [(2, 1), (7, 3), (14, 6)]
    with pytest.raises(ValueError):
        vanishing_coefficient_search(0)


def test_weight_enumerator_poly():
    p = weight_enumerator_poly(WeightDistribution({0: 1, 2: 3}), 4)
    assert p == X**4 + 3 * X**2 * Y**2
    with pytest.raises(ValueError):
        weight_enumerator_poly(WeightDistribution({5: 1}), 4)


def test_macwilliams_examples(type1):
    e8 = builtin("e8")
    wd8 = weight_distribution(e8)
    assert macwilliams_transform_classical(wd8, 8, 4) == wd8
    wd16 = weight_distribution(type1)
    assert macwilliams_transform_classical(wd16, 16, 8) == wd16
    zero2 = WeightDistribution({0: 1})
    assert macwilliams_transform_classical(zero2, 2, 0).counts == {0: 1, 1: 2, 2: 1}


def test_macwilliams_matches_enumerated_dual():
    rng = random.Random(5)
    seen = 0
    while seen < 50:
        n = rng.randrange(2, 13)
        k = rng.randrange(0, n + 1)
        c = code_from_rows((rng.getrandbits(n) for _ in range(k)), n)
        wd = weight_distribution(c)
        assert macwilliams_transform_classical(wd, n, c.dimension) == \
            weight_distribution(dual(c))
        seen += 1


def test_macwilliams_involution():
    rng = random.Random(6)
    for _ in range(20):
        n = rng.randrange(2, 11)
        c = code_from_rows((rng.getrandbits(n) for _ in range(n // 2)), n)
        wd = weight_distribution(c)
        once = macwilliams_transform_classical(wd, n, c.dimension)
        assert macwilliams_transform_classical(once, n, n - c.dimension) == wd


def test_macwilliams_input_validation():
    with pytest.raises(ValueError):
        macwilliams_transform_classical(WeightDistribution({0: 1, 1: 2}), 2, 0)
    with pytest.raises(ValueError):
        macwilliams_transform_classical(WeightDistribution({1: 1}), 2, 0)
