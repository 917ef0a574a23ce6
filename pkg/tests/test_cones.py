"""Tests for the cone Sigma, its extremal rays and box points."""

import random
from fractions import Fraction

import pytest

from canring.config import Config
from canring.cones import (
    build_sigma,
    box_points,
    canonical_decompose,
    epsilon,
    extremal_rays,
    extremal_rays_hirz,
    extremal_rays_proj,
    in_cone,
    in_half_open_box,
    is_extremal,
    minimal_integral_multiple,
    t_partition,
)
from canring.errors import CapacityExceededError, DegreeError, OutsideConeError
from canring.geometry.divisor import ghost_complete
from canring.geometry.variety import Variety
from canring.models.enums import RayLabel


def _random_point(rays, rng):
    weights = [rng.randint(0, 3) for _ in rays]
    size = len(rays[0].point)
    return tuple(sum(w * r.point[i] for w, r in zip(weights, rays)) for i in range(size))


@pytest.fixture
def equal_set_divisor(make_divisor):
    """1/2 V(u) + 1/2 V(w) on F_1, ghost-completed."""
    return ghost_complete(
        make_divisor(Variety.hirzebruch(1), [("1/2", "u"), ("1/2", "w")])
    )


class TestProjectiveRays:
    def test_hyperplane_rays(self, hyperplane_completed):
        rays = extremal_rays_proj(hyperplane_completed)
        assert [r.point for r in rays] == [(3, -1, 1, 0), (2, -1, 1, 0), (6, -3, 2, 1)]
        assert [r.degree for r in rays] == [3, 2, 6]
        assert all(r.label == RayLabel.E_I for r in rays)
        sigma = build_sigma(hyperplane_completed)
        assert all(sigma.contains(r.point) for r in rays)

    def test_rays_are_extremal(self, hyperplane_completed):
        rays = extremal_rays(hyperplane_completed)
        assert is_extremal([r.point for r in rays])

    def test_minimal_multiple_divides_scale(self, hyperplane_completed):
        rays = extremal_rays_proj(hyperplane_completed)
        for i, ray in enumerate(rays):
            multiple = minimal_integral_multiple(epsilon(hyperplane_completed, i))
            assert ray.degree % multiple == 0
        assert minimal_integral_multiple(epsilon(hyperplane_completed, 2)) == 6

    def test_non_positive_degree(self, make_divisor):
        divisor = ghost_complete(
            make_divisor(Variety.projective(2), [("1/2", "x0"), ("-1/2", "x1")])
        )
        with pytest.raises(DegreeError):
            build_sigma(divisor)
        with pytest.raises(DegreeError):
            extremal_rays_proj(divisor)


class TestHirzebruchRays:
    def test_f0_partition(self, f0_divisor):
        parts = t_partition(f0_divisor)
        assert parts.t_eq == ()
        assert parts.t_plus == (0, 1)
        assert parts.t_minus == (2, 3)

    def test_f0_rays(self, f0_divisor):
        rays = extremal_rays_hirz(f0_divisor, strict=True)
        degrees = {r.indices: r.degree for r in rays}
        assert degrees == {(0, 2): 1, (0, 3): 3, (1, 2): 2, (1, 3): 6}
        assert rays[0].point == (1, 0, 0, 0, 0)
        sigma = build_sigma(f0_divisor)
        assert all(sigma.contains(r.point) for r in rays)
        assert all(r.closed_form is None for r in rays)

    def test_f0_rays_are_extremal(self, f0_divisor):
        rays = extremal_rays(f0_divisor)
        assert is_extremal([r.point for r in rays])

    def test_equal_set_ray(self, equal_set_divisor):
        divisor = equal_set_divisor
        parts = t_partition(divisor)
        assert parts.t_eq == (2,)
        rays = extremal_rays_hirz(divisor, strict=True)
        assert rays[0].label == RayLabel.E_I
        assert rays[0].point == (2, -1, 0, 1, -1)
        assert minimal_integral_multiple(epsilon(divisor, 2)) == rays[0].degree == 2
        assert {r.indices: r.point for r in rays[1:]} == {
            (0, 3): (1, 0, 0, 0, 0),
            (1, 3): (2, -1, 1, 0, 0),
        }
        sigma = build_sigma(divisor)
        assert all(sigma.contains(r.point) for r in rays)

    @pytest.mark.parametrize("m", [0, 1])
    def test_random_divisors(self, make_divisor, m):
        rng = random.Random(1729 + m)
        checked = 0
        for _ in range(40):
            coeffs = [Fraction(rng.randint(-2, 4), rng.randint(1, 4)) for _ in range(4)]
            pairs = list(zip(map(str, coeffs), ["u", "v", "z", "w"]))
            divisor = make_divisor(Variety.hirzebruch(m), pairs)
            a = coeffs[0] + coeffs[1] + m * coeffs[2]
            b = coeffs[2] + coeffs[3]
            if a <= 0 or b <= 0:
                continue
            sigma = build_sigma(divisor)
            rays = extremal_rays_hirz(divisor)
            assert rays
            assert all(sigma.contains(r.point) for r in rays)
            checked += 1
        assert checked > 5


class TestDecomposition:
    def test_in_cone(self):
        rays = [(1, 0), (0, 1)]
        assert in_cone((2, 3), rays)
        assert not in_cone((-1, 0), rays)
        assert in_cone((0, 0), rays)
        assert not is_extremal([(1, 0), (0, 1), (1, 1)])

    def test_recomposes(self, hyperplane_completed):
        rays = extremal_rays(hyperplane_completed)
        total = sum(r.degree for r in rays)
        rng = random.Random(7)
        for _ in range(30):
            point = _random_point(rays, rng)
            decomposition = canonical_decompose(point, rays)
            rebuilt = tuple(
                lam + sum(z * r.point[i] for z, r in zip(decomposition.zeta, rays))
                for i, lam in enumerate(decomposition.lam)
            )
            assert rebuilt == point
            assert decomposition.lam[0] < total
            assert all(c >= 0 for c in decomposition.coefficients)

    @pytest.mark.parametrize(
        "fixture, seed",
        [
            ("hyperplane_completed", 11),
            ("two_fifths_line", 12),
            ("f0_divisor", 13),
            ("equal_set_divisor", 14),
        ],
    )
    def test_random_points_recompose(self, request, fixture, seed):
        divisor = request.getfixturevalue(fixture)
        sigma = build_sigma(divisor)
        rays = extremal_rays(divisor)
        box = box_points(sigma, rays)
        total = sum(r.degree for r in rays)
        rng = random.Random(seed)
        for _ in range(100):
            offset = rng.choice(box)
            point = tuple(a + b for a, b in zip(offset, _random_point(rays, rng)))
            assert sigma.contains(point)
            decomposition = canonical_decompose(point, rays)
            rebuilt = tuple(
                lam + sum(z * r.point[i] for z, r in zip(decomposition.zeta, rays))
                for i, lam in enumerate(decomposition.lam)
            )
            assert rebuilt == point
            assert 0 <= decomposition.lam[0] < total
            assert all(z >= 0 for z in decomposition.zeta)

    def test_outside(self, hyperplane_completed):
        rays = extremal_rays(hyperplane_completed)
        with pytest.raises(OutsideConeError):
            canonical_decompose((1, 0, -1, 1), rays)


class TestBoxPoints:
    def test_hyperplane_box(self, hyperplane_completed):
        sigma = build_sigma(hyperplane_completed)
        rays = extremal_rays(hyperplane_completed)
        points = box_points(sigma, rays)
        total = sum(r.degree for r in rays)
        assert (0, 0, 0, 0) in points
        for point in points:
            assert sigma.contains(point)
            assert point[0] < total
            assert not any(canonical_decompose(point, rays).zeta)
            assert in_half_open_box(point, [r.point for r in rays])

    def test_f0_box_uses_every_ray(self, f0_divisor):
        sigma = build_sigma(f0_divisor)
        rays = extremal_rays(f0_divisor)
        points = box_points(sigma, rays)
        assert sorted(points) == [
            (0, 0, 0, 0, 0),
            (3, -1, 1, -1, 1),
            (4, -2, 2, -1, 1),
            (4, -1, 1, -1, 1),
            (5, -2, 2, -1, 1),
            (5, -1, 1, -1, 1),
            (6, -2, 2, -2, 2),
            (7, -3, 3, -2, 2),
            (7, -2, 2, -2, 2),
            (8, -3, 3, -2, 2),
        ]

    def test_half_open_box_on_non_simplicial_rays(self):
        rays = [(1, 0), (1, 1), (1, 2)]
        assert in_half_open_box((0, 0), rays)
        assert in_half_open_box((1, 1), rays)
        assert in_half_open_box((2, 2), rays)
        assert not in_half_open_box((1, 0), rays)
        assert not in_half_open_box((3, 3), rays)
        assert not in_half_open_box((1, 3), rays)

    def test_cap(self, hyperplane_completed):
        sigma = build_sigma(hyperplane_completed)
        rays = extremal_rays(hyperplane_completed)
        with pytest.raises(CapacityExceededError):
            box_points(sigma, rays, Config(box_cap=1))
