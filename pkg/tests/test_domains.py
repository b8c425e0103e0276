import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats, fractions, integers, lists
from scipy.spatial.transform import Rotation

from openspectral.domains import (
    DOMAINS, UnitCube, UnitBall, load_domain, parse_domain,
    transform_value, zero_set, in_zero_set, inner_product_numeric, ball_volume,
)
from openspectral.utils import DimensionMismatchError, HorizonError
from .conftest import BALL2_RADII, BALL3_RADIUS, J32_ZERO


def test_registry_and_tokens():
    assert set(DOMAINS) == {"cube", "ball"}
    ball = load_domain({"name": "Ball", "dimension": 3})
    assert isinstance(ball, UnitBall) and ball.token == "ball:3"
    assert parse_domain("cube:2") == UnitCube(2)


@pytest.mark.parametrize("token", ["ball", "ball:x", "sphere:2", "ball:0", "cube:2:3"])
def test_parse_domain_rejects(token):
    with pytest.raises(ValueError):
        parse_domain(token)


def test_transform_examples():
    assert transform_value(UnitCube(2), (0, 0)) == 1
    assert abs(transform_value(UnitBall(2), (0, 0)) - math.pi) <= 1e-15
    assert transform_value(UnitCube(2), (1, Fraction(1, 2))) == 0
    assert abs(transform_value(UnitCube(2), (1.0, 0.5))) <= 1e-12
    rho = J32_ZERO / (2 * math.pi)
    assert abs(rho - BALL3_RADIUS) <= 1e-12
    assert abs(transform_value(UnitBall(3), (rho, 0, 0))) <= 1e-9


def test_volume_is_transform_at_origin():
    for d in range(1, 6):
        ball = UnitBall(d)
        assert ball.volume() == pytest.approx(ball_volume(d), rel=1e-15)
        assert transform_value(ball, [0] * d).real == pytest.approx(ball.volume(), rel=1e-15)
    assert ball_volume(3) == pytest.approx(4 * math.pi / 3)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        transform_value(UnitBall(2), (1, 2, 3))
    with pytest.raises(DimensionMismatchError):
        in_zero_set(zero_set(UnitCube(2), 1.0), (1,), None)


def test_nonfinite_vector_rejected():
    with pytest.raises(ValueError):
        transform_value(UnitCube(2), (math.nan, 0.0))


def test_ball_zero_sets():
    radii = zero_set(UnitBall(2), 1.3).root_radii
    np.testing.assert_allclose(radii, BALL2_RADII, atol=1e-6, rtol=0)
    radii = zero_set(UnitBall(3), 0.8).root_radii
    np.testing.assert_allclose(radii, [BALL3_RADIUS], atol=1e-6, rtol=0)


def test_ball_zero_set_csv():
    lines = zero_set(UnitBall(2), 1.3).to_csv().splitlines()
    assert lines[0] == "index,radius"
    assert lines[1].startswith("1,0.60983")
    assert len(lines) == 3


def test_zero_set_rejects_bad_horizon():
    with pytest.raises(ValueError):
        zero_set(UnitBall(2), 0)
    with pytest.raises(ValueError):
        zero_set(UnitCube(2), -1)


def test_cube_membership():
    zs = zero_set(UnitCube(4), 10.0)
    assert in_zero_set(zs, (2, 0, 0, 0))
    zs = zero_set(UnitCube(2), 10.0)
    assert in_zero_set(zs, (3, Fraction(1, 4)))
    assert not in_zero_set(zs, (Fraction(1, 2), Fraction(1, 2)))
    assert not in_zero_set(zs, (0, 0))
    assert in_zero_set(zs, (-1.0 + 1e-12, 0.3))
    assert not in_zero_set(zs, (1.0 + 1e-6, 0.3))
    assert in_zero_set(zs, (1.0 + 1e-6, 0.3), 1e-5)


def test_ball_membership_and_horizon():
    zs = zero_set(UnitBall(2), 2.0)
    assert in_zero_set(zs, (0.609835, 0), 1e-6)
    assert in_zero_set(zs, (0, -0.609835), 1e-6)
    assert not in_zero_set(zs, (0.5, 0), 1e-6)
    assert zs.count_up_to(1.2) == 2
    r1 = float(zs.root_radii[0])
    assert zs.count_up_to(r1 - 5e-10) == 0
    assert zs.count_up_to(r1 - 5e-10, 1e-9) == 1
    with pytest.raises(HorizonError):
        in_zero_set(zs, (2.5, 0), 1e-6)
    with pytest.raises(HorizonError):
        zs.count_up_to(3.0)


def test_distance_to_zero_set():
    assert zero_set(UnitCube(2), 1.0).distance_to((0.25, 1.75)) == pytest.approx(0.25)
    zs = zero_set(UnitBall(2), 2.0)
    assert zs.distance_to((0.5, 0.0)) == pytest.approx(zs.root_radii[0] - 0.5)


def test_separation_radius():
    assert UnitCube(3).separation_radius() == 1.0
    assert UnitBall(2).separation_radius() == pytest.approx(BALL2_RADII[0], abs=1e-6)
    assert UnitBall(3).separation_radius() == pytest.approx(BALL3_RADIUS, abs=1e-6)


def test_inner_product_examples():
    assert abs(inner_product_numeric(UnitCube(1), (1,), (0,), 256)) <= 1e-3
    assert abs(inner_product_numeric(UnitCube(2), (0.3, 0.7), (0.3, 0.7)) - 1) <= 1e-6
    assert abs(inner_product_numeric(UnitBall(2), (0.609835, 0), (0, 0), 512)) <= 5e-3


def test_inner_product_rejects_low_resolution():
    with pytest.raises(ValueError):
        inner_product_numeric(UnitCube(2), (0, 0), (1, 0), 4)


vectors_2d = lists(floats(min_value=-1.5, max_value=1.5), min_size=2, max_size=2)


@settings(max_examples=25, deadline=None)
@given(vectors_2d, vectors_2d)
def test_quadrature_converges_to_transform(lam, lam_prime):
    for domain in (UnitCube(2), UnitBall(2)):
        exact = transform_value(domain, np.subtract(lam, lam_prime))
        coarse = abs(inner_product_numeric(domain, lam, lam_prime, 16) - exact)
        fine = abs(inner_product_numeric(domain, lam, lam_prime, 64) - exact)
        assert fine <= 1e-8
        assert fine <= coarse + 1e-10


@settings(max_examples=30, deadline=None)
@given(lists(floats(min_value=-3, max_value=3), min_size=3, max_size=3), integers(min_value=0, max_value=2 ** 31))
def test_ball_transform_is_radial(xi, seed):
    ball = UnitBall(3)
    rotated = Rotation.random(random_state=seed).apply(xi)
    assert abs(transform_value(ball, xi) - transform_value(ball, rotated)) <= 1e-12


def test_transform_is_continuous_at_origin():
    for domain in (UnitCube(2), UnitBall(2), UnitBall(3)):
        values = [abs(transform_value(domain, (10.0 ** -k, 0.0) + (0.0,) * (domain.dimension - 2)))
                  for k in range(2, 9)]
        errors = [abs(v - domain.volume()) for v in values]
        assert all(b < a for a, b in zip(errors, errors[1:]) if a > 1e-13)
        assert errors[-1] <= 1e-9


@settings(max_examples=200, deadline=None)
@given(lists(fractions(min_value=-5, max_value=5, max_denominator=6), min_size=2, max_size=3))
def test_cube_zero_iff_member_exact(xi):
    cube = UnitCube(len(xi))
    zs = zero_set(cube, math.inf)
    assert (transform_value(cube, xi) == 0) == in_zero_set(zs, xi)


@settings(max_examples=100, deadline=None)
@given(lists(fractions(min_value=-5, max_value=5, max_denominator=6), min_size=2, max_size=3))
def test_cube_zero_iff_member_float(xi):
    xi = [float(c) for c in xi]
    cube = UnitCube(len(xi))
    zs = zero_set(cube, math.inf)
    if in_zero_set(zs, xi):
        assert abs(transform_value(cube, xi)) <= 1e-12
    else:
        assert abs(transform_value(cube, xi)) > 1e-6
