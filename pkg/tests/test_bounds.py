"""Tests for the generator and relation degree bounds."""

import random
from fractions import Fraction

import pytest

from canring.algebra.polynomial import (
    format_polynomial,
    parse_polynomial,
    projective_ring,
    substitute,
)
from canring.bounds import (
    chi_bound,
    combine_bounds,
    compute_bounds,
    effective_bounds,
    hirz_bounds,
    hirz_rho,
    hirz_tau,
    proj_bounds,
    psi_bound_proj,
    rewrite_in_basis,
)
from canring.cones import extremal_rays
from canring.errors import DegreeError, DependentBasisError, NonEffectiveError
from canring.geometry.divisor import ghost_complete
from canring.geometry.variety import Variety
from canring.models.enums import RingShape


class TestEffective:
    @pytest.mark.parametrize(
        "pairs, expected",
        [
            ([("2/5", "x0^2 + x1*x2")], (5, 10)),
            ([("1/2", "x0"), ("1/3", "x1")], (3, 6)),
            ([("1", "x0")], (1, 2)),
        ],
    )
    def test_values(self, make_divisor, pairs, expected):
        assert effective_bounds(make_divisor(Variety.projective(2), pairs)) == expected

    def test_rejects_negative(self, hyperplane_divisor):
        with pytest.raises(NonEffectiveError):
            effective_bounds(hyperplane_divisor)

    def test_rejects_zero(self, make_divisor):
        with pytest.raises(DegreeError):
            effective_bounds(make_divisor(Variety.projective(1), [("0", "x0")]))


class TestProjective:
    def test_hyperplane_example(self, hyperplane_completed):
        assert proj_bounds(hyperplane_completed) == (11, Fraction(22))
        assert psi_bound_proj(hyperplane_completed) == 17

    def test_report(self, hyperplane_completed):
        report = compute_bounds(hyperplane_completed)
        assert report.shape == RingShape.GENERAL
        assert report.source == "projective"
        assert report.ells == (3, 2, 6)
        assert report.ray_degrees == (3, 2, 6)
        assert report.chi == 20
        assert report.effective is None
        assert report.claims() == (11, 22)

    def test_generator_bound_is_ray_degree_sum(self, make_divisor):
        rng = random.Random(31)
        for _ in range(20):
            pairs = [
                (str(Fraction(rng.randint(-3, 5), rng.randint(1, 6))), f"x{i}") for i in range(3)
            ]
            divisor = make_divisor(Variety.projective(2), pairs)
            if sum(Fraction(c) for c, _ in pairs) <= 0:
                continue
            generator, _ = proj_bounds(divisor)
            assert generator == sum(r.degree for r in extremal_rays(divisor))

    def test_needs_completion(self, hyperplane_divisor):
        with pytest.raises(DependentBasisError):
            proj_bounds(hyperplane_divisor)

    def test_needs_positive_degree(self, make_divisor):
        divisor = ghost_complete(
            make_divisor(Variety.projective(2), [("1/2", "x0"), ("-1/2", "x1")])
        )
        with pytest.raises(DegreeError):
            proj_bounds(divisor)

    def test_effective_is_primary(self, make_divisor):
        divisor = ghost_complete(
            make_divisor(Variety.projective(2), [("1/2", "x0"), ("1/3", "x1")])
        )
        report = compute_bounds(divisor)
        assert report.source == "effective"
        assert report.claims() == (3, 6)
        assert report.projective is not None
        assert report.projective[0] == 3 * 1 + 2 * 1 + 6 * 1

    def test_rewrites_extra_components(self, make_divisor):
        divisor = ghost_complete(
            make_divisor(Variety.projective(2), [("1/2", "x0^2 + x1*x2"), ("1/3", "x1")])
        )
        report = compute_bounds(divisor)
        assert report.rewrites == {3: "z0*z2 + z1^2"}


class TestRewriteInBasis:
    def test_shifted_basis(self):
        r = projective_ring(2)
        basis = [parse_polynomial(t, r) for t in ("x0 + x1", "x1", "x2")]
        beta = rewrite_in_basis(parse_polynomial("x0", r), basis)
        assert format_polynomial(beta) == "z0 - z1"

    def test_round_trip(self):
        r = projective_ring(2)
        basis = [parse_polynomial(t, r) for t in ("x0 - x2", "2*x1", "x0 + x2")]
        f = parse_polynomial("x0^2 + x1*x2", r)
        assert substitute(rewrite_in_basis(f, basis), basis) == f

    @pytest.mark.parametrize(
        "forms", [("x0", "x0 + x1", "x1"), ("x0", "x1", "x2^2"), ("x0", "x1")]
    )
    def test_rejects_bad_basis(self, forms):
        r = projective_ring(2)
        with pytest.raises(DependentBasisError):
            rewrite_in_basis(parse_polynomial("x0", r), [parse_polynomial(t, r) for t in forms])


class TestCombinators:
    def test_chi(self):
        assert chi_bound([2, 3, 6]) == 20
        assert chi_bound([1]) == 0
        with pytest.raises(ValueError):
            chi_bound([])

    def test_combine(self):
        assert combine_bounds(22, Fraction(35, 2)) == 22
        assert combine_bounds(0, Fraction(5, 2)) == Fraction(5, 2)


class TestHirzebruch:
    def test_f0_example(self, f0_divisor):
        assert hirz_rho(f0_divisor) == 12
        assert hirz_tau(f0_divisor) == 18
        assert hirz_bounds(f0_divisor) == (12, 24)
        report = compute_bounds(f0_divisor)
        assert report.source == "hirzebruch"
        assert report.claims() == (12, 24)
        assert report.ell_pairs == {(0, 2): 1, (0, 3): 3, (1, 2): 2, (1, 3): 6}

    @pytest.mark.parametrize("m", [0, 1, 2])
    def test_rho_is_ray_degree_sum(self, make_divisor, m):
        rng = random.Random(99 + m)
        checked = 0
        for _ in range(40):
            coeffs = [Fraction(rng.randint(-2, 4), rng.randint(1, 4)) for _ in range(4)]
            divisor = make_divisor(
                Variety.hirzebruch(m), list(zip(map(str, coeffs), ["u", "v", "z", "w"]))
            )
            if coeffs[0] + coeffs[1] + m * coeffs[2] <= 0 or coeffs[2] + coeffs[3] <= 0:
                continue
            rho = hirz_rho(divisor)
            assert rho == sum(r.degree for r in extremal_rays(divisor))
            assert hirz_tau(divisor) <= 2 * rho
            checked += 1
        assert checked > 5

    def test_zero_bidegree_coordinate(self, make_divisor):
        divisor = ghost_complete(make_divisor(Variety.hirzebruch(0), [("1/2", "u")]))
        with pytest.raises(DegreeError):
            hirz_rho(divisor)
        report = compute_bounds(divisor)
        assert report.shape == RingShape.PROJECTIVE_LINE
        assert report.claims() is None


class TestShapes:
    def test_trivial(self, make_divisor):
        divisor = ghost_complete(make_divisor(Variety.projective(1), [("-1/2", "x0")]))
        report = compute_bounds(divisor)
        assert report.shape == RingShape.TRIVIAL
        assert report.claims() == (0, 0)

    def test_univariate(self, make_divisor):
        divisor = make_divisor(Variety.projective(1), [("1/4", "x0"), ("-1/4", "x1")])
        report = compute_bounds(divisor)
        assert report.shape == RingShape.UNIVARIATE
        assert report.claims() == (4, 0)
