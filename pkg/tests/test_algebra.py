"""Tests for exact rationals, polynomial text and linear algebra."""

import random
from fractions import Fraction

import pytest

from canring.algebra.linalg import (
    EchelonBasis,
    RationalMatrix,
    inverse,
    kernel_basis,
    left_kernel,
    rank,
    solve,
    span_contains,
)
from canring.algebra.polynomial import (
    bidegree,
    format_polynomial,
    from_terms,
    hirzebruch_ring,
    monomials_of_bidegree,
    monomials_of_degree,
    parse_polynomial,
    poly_add,
    poly_divmod_by,
    poly_mul,
    projective_ring,
    substitute,
    total_degree,
)
from canring.algebra.rational import (
    floor_rational,
    format_rational,
    fractional_part,
    lcm_all,
    parse_rational,
)
from canring.errors import (
    DimensionMismatchError,
    NonHomogeneousError,
    ParseError,
    UnknownVariableError,
    VariableMismatchError,
)


class TestRational:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("2/4", Fraction(1, 2)),
            ("-1/3", Fraction(-1, 3)),
            ("7", Fraction(7)),
            (" 3 / 6 ", Fraction(1, 2)),
            (5, Fraction(5)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["1/0", "abc", "1/2/3", "", "1.5"])
    def test_parse_rejects(self, text):
        with pytest.raises(ParseError):
            parse_rational(text)

    def test_format(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-2, 6)) == "-1/3"

    def test_floor_and_fractional_part(self):
        assert floor_rational(Fraction(-5, 3)) == -2
        assert floor_rational(Fraction(5, 3)) == 1
        assert fractional_part(Fraction(-5, 3)) == Fraction(1, 3)
        assert fractional_part(4) == 0

    def test_lcm(self):
        assert lcm_all([]) == 1
        assert lcm_all([4, 6, 5]) == 60


class TestPolynomialText:
    def test_round_trip_canonical_text(self):
        r = projective_ring(2)
        assert format_polynomial(parse_polynomial("x1*x2 + x0^2", r)) == "x0^2 + x1*x2"
        assert format_polynomial(parse_polynomial("2 x0 - 1/2 x1", r)) == "2*x0 - 1/2*x1"

    def test_juxtaposed_variables(self):
        r = projective_ring(1)
        assert parse_polynomial("x0x1", r) == parse_polynomial("x0*x1", r)

    def test_hirzebruch_names(self):
        r = hirzebruch_ring()
        f = parse_polynomial("uz + v^2 w", r)
        assert format_polynomial(f) == "v^2*w + u*z"

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError) as exc:
            parse_polynomial("y0 + x1", projective_ring(2))
        assert exc.value.name == "y0"

    @pytest.mark.parametrize("text", ["x0 +", "", "*x0", "x0**2", "x0^"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_polynomial(text, projective_ring(2))

    def test_non_homogeneous_names_term(self):
        f = parse_polynomial("x0^2 + x1", projective_ring(2))
        with pytest.raises(NonHomogeneousError) as exc:
            total_degree(f)
        assert exc.value.term == "x1"

    def test_bidegree(self):
        r = hirzebruch_ring()
        assert bidegree(parse_polynomial("z + u^2 w", r), 2) == (2, 1)
        with pytest.raises(NonHomogeneousError):
            bidegree(parse_polynomial("z + u w", r), 2)


class TestPolynomialArithmetic:
    def test_add_and_mul(self):
        r = projective_ring(1)
        f = parse_polynomial("x0 + x1", r)
        g = parse_polynomial("x0 - x1", r)
        assert format_polynomial(poly_add(f, g)) == "2*x0"
        assert format_polynomial(poly_mul(f, g)) == "x0^2 - x1^2"
        with pytest.raises(VariableMismatchError):
            poly_mul(f, parse_polynomial("x0", projective_ring(2)))

    def test_divmod(self):
        r = projective_ring(1)
        q, rem = poly_divmod_by(parse_polynomial("x0^2", r), parse_polynomial("x0 + x1", r))
        assert format_polynomial(q) == "x0 - x1"
        assert format_polynomial(rem) == "x1^2"

    def test_divmod_mismatched_rings(self):
        with pytest.raises(VariableMismatchError):
            poly_divmod_by(
                parse_polynomial("x0", projective_ring(1)),
                parse_polynomial("x0", projective_ring(2)),
            )

    def test_monomials_of_degree(self):
        found = monomials_of_degree(3, 2)
        assert len(found) == 6
        assert found[0] == (2, 0, 0)
        assert found[-1] == (0, 0, 2)
        assert monomials_of_degree(3, -1) == ()

    def test_monomials_of_bidegree(self):
        found = monomials_of_bidegree(1, 2, 1)
        assert len(found) == 5
        assert all(a + b + c == 2 and c + d == 1 for a, b, c, d in found)

    def test_substitute(self):
        r = projective_ring(1)
        f = parse_polynomial("x0^2 - x1^2", r)
        images = [parse_polynomial("x0 + x1", r), parse_polynomial("x0 - x1", r)]
        assert format_polynomial(substitute(f, images)) == "4*x0*x1"


class TestLinearAlgebra:
    def test_rank(self):
        m = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, Fraction(1, 2)]])
        assert rank(m) == 2

    def test_shape_checked(self):
        with pytest.raises(DimensionMismatchError):
            RationalMatrix(2, 2, ((Fraction(1), Fraction(0)),))

    def test_span_contains(self):
        rows = [[1, 0, 1], [0, 1, 1]]
        assert span_contains(rows, [2, 3, 5])
        assert not span_contains(rows, [0, 0, 1])

    def test_echelon_dependency_is_exact(self):
        basis = EchelonBasis(track=True)
        vectors = [[1, 2, 0], [0, 1, 1], [Fraction(1, 2), Fraction(5, 2), Fraction(3, 2)]]
        assert basis.add(vectors[0]) is None
        assert basis.add(vectors[1]) is None
        dependency = basis.add(vectors[2])
        assert dependency is not None
        combined = [
            sum(Fraction(c) * vectors[label][pos] for label, c in dependency.items())
            for pos in range(3)
        ]
        assert combined == [0, 0, 0]

    def test_left_kernel(self):
        vectors = [{0: 1}, {1: 1}, {0: 2, 1: -3}]
        (relation,) = left_kernel(vectors)
        assert relation[2] * 2 + relation[0] == 0
        assert relation[2] * -3 + relation[1] == 0

    def test_kernel_basis(self):
        m = RationalMatrix.from_rows([[1, 1, 0], [0, 0, 1]])
        (v,) = kernel_basis(m)
        assert m.apply(v) == (0, 0)
        assert any(v)

    def test_solve(self):
        m = RationalMatrix.from_rows([[2, 0], [0, 3]])
        assert solve(m, [1, 1]) == [Fraction(1, 2), Fraction(1, 3)]
        singular = RationalMatrix.from_rows([[1, 1], [1, 1]])
        assert solve(singular, [1, 2]) is None

    def test_inverse(self):
        m = RationalMatrix.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, 2]])
        inv = inverse(m)
        assert inv is not None
        assert inv.entries == (
            (1, -1, 0),
            (0, 1, 0),
            (0, 0, Fraction(1, 2)),
        )
        assert inverse(RationalMatrix.from_rows([[1, 2], [2, 4]])) is None


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-60, 60), rng.randint(1, 12))


def _random_polynomial(r, rng: random.Random):
    terms = {}
    for degree in range(3):
        for e in monomials_of_degree(r.ngens, degree):
            if rng.random() < 0.4:
                terms[e] = _random_rational(rng)
    return from_terms(r, terms)


class TestRandomProperties:
    def test_floor_is_superadditive(self):
        rng = random.Random(2718)
        for _ in range(500):
            a, b = _random_rational(rng), _random_rational(rng)
            low = floor_rational(a) + floor_rational(b)
            assert low <= floor_rational(a + b) <= low + 1

    def test_floor_plus_fractional_part(self):
        rng = random.Random(1414)
        for _ in range(500):
            a = _random_rational(rng)
            assert floor_rational(a) + fractional_part(a) == a
            assert 0 <= fractional_part(a) < 1

    def test_polynomial_ring_axioms(self):
        r = projective_ring(2)
        rng = random.Random(577)
        for _ in range(40):
            f, g, h = (_random_polynomial(r, rng) for _ in range(3))
            assert poly_add(f, g) == poly_add(g, f)
            assert poly_mul(f, g) == poly_mul(g, f)
            assert poly_add(poly_add(f, g), h) == poly_add(f, poly_add(g, h))
            assert poly_mul(poly_mul(f, g), h) == poly_mul(f, poly_mul(g, h))
            assert poly_mul(f, poly_add(g, h)) == poly_add(poly_mul(f, g), poly_mul(f, h))
            assert poly_add(f, r.zero) == f
            assert poly_mul(f, r.one) == f

    def test_kernel_dimension_is_cols_minus_rank(self):
        rng = random.Random(4242)
        for _ in range(60):
            rows, cols = rng.randint(1, 4), rng.randint(1, 5)
            m = RationalMatrix.from_rows(
                [[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)]
            )
            basis = kernel_basis(m)
            assert len(basis) == m.cols - rank(m)
            assert all(m.apply(v) == (0,) * m.rows for v in basis)
            if basis:
                assert rank(RationalMatrix.from_rows(basis)) == len(basis)
