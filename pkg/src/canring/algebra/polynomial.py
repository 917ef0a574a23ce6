"""Multivariate polynomials over QQ, backed by sympy's sparse polynomial rings.

Every ring uses graded lexicographic order over its declared variable order, so
division remainders and printed term order are the same everywhere.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Hashable, Iterable, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..errors import NonHomogeneousError, ParseError, UnknownVariableError, VariableMismatchError
from .rational import parse_rational

Polynomial = PolyElement
Monomial = tuple[int, ...]

HIRZEBRUCH_VARIABLES = ("u", "v", "z", "w")


@lru_cache(maxsize=None)
def polynomial_ring(variables: tuple[str, ...]) -> PolyRing:
    """The polynomial ring QQ[variables] with grlex order."""
    if not variables:
        raise ValueError("A polynomial ring needs at least one variable")
    result = ring(",".join(variables), QQ, grlex)
    return result[0]


def projective_ring(m: int) -> PolyRing:
    """Coordinate ring of P^m in x0..xm."""
    return polynomial_ring(tuple(f"x{i}" for i in range(m + 1)))


def hirzebruch_ring() -> PolyRing:
    """Cox ring of F_m in u, v, z, w."""
    return polynomial_ring(HIRZEBRUCH_VARIABLES)


def variable_names(r: PolyRing) -> tuple[str, ...]:
    return tuple(str(s) for s in r.symbols)


def to_fraction(c: Any) -> Fraction:
    """Convert a QQ domain element to a Fraction."""
    return Fraction(int(c.numerator), int(c.denominator))


def to_domain(c: Fraction | int) -> Any:
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def from_terms(r: PolyRing, terms: Mapping[Monomial, Fraction | int]) -> Polynomial:
    """Build a polynomial from an exponent map, dropping zero coefficients."""
    return r.from_dict({m: to_domain(c) for m, c in terms.items() if c != 0})


def terms_of(f: Polynomial) -> dict[Monomial, Fraction]:
    """Exponent map of f with Fraction coefficients."""
    return {tuple(m): to_fraction(c) for m, c in f.items()}


def monomial(r: PolyRing, exponents: Sequence[int]) -> Polynomial:
    return r.from_dict({tuple(exponents): QQ(1)})


def _check_same_ring(f: Polynomial, g: Polynomial) -> None:
    if f.ring != g.ring:
        raise VariableMismatchError(
            f"Variable mismatch: {variable_names(f.ring)} vs {variable_names(g.ring)}"
        )


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_same_ring(f, g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_same_ring(f, g)
    return f * g


def poly_divmod_by(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder of f by g under grlex.

    Raises:
        VariableMismatchError: when f and g live in different rings
        ZeroDivisionError: when g is zero
    """
    _check_same_ring(f, g)
    if not g:
        raise ZeroDivisionError("Polynomial division by zero")
    quotient, remainder = f.div(g)
    return quotient, remainder


def monomial_degree(exponents: Sequence[int]) -> int:
    return sum(exponents)


def monomial_bidegree(exponents: Sequence[int], m: int) -> tuple[int, int]:
    """Bi-degree (a + b + m*c, c + d) of u^a v^b z^c w^d on F_m."""
    a, b, c, d = exponents
    return (a + b + m * c, c + d)


def graded_degree(f: Polynomial, grading: Callable[[Monomial], Hashable]) -> Hashable:
    """Common grading value of the terms of f.

    The leading grlex term fixes the expected value; the first term that differs is
    named in the error.

    Raises:
        NonHomogeneousError: when two terms have different grading values
    """
    ordered = f.terms()
    if not ordered:
        raise NonHomogeneousError("0", "The zero polynomial has no degree")
    expected = grading(tuple(ordered[0][0]))
    for exponents, _ in ordered[1:]:
        if grading(tuple(exponents)) != expected:
            term = format_monomial(tuple(exponents), variable_names(f.ring))
            raise NonHomogeneousError(term)
    return expected


def total_degree(f: Polynomial) -> int:
    """Degree of a nonzero homogeneous polynomial."""
    degree = graded_degree(f, monomial_degree)
    assert isinstance(degree, int)
    return degree


def bidegree(f: Polynomial, m: int) -> tuple[int, int]:
    """Bi-degree of a nonzero bi-homogeneous polynomial on F_m."""
    value = graded_degree(f, lambda e: monomial_bidegree(e, m))
    assert isinstance(value, tuple)
    return value


@lru_cache(maxsize=4096)
def monomials_of_degree(n_vars: int, degree: int) -> tuple[Monomial, ...]:
    """All exponent tuples of the given total degree, in descending grlex order."""
    if degree < 0:
        return ()
    if n_vars == 1:
        return ((degree,),)
    result: list[Monomial] = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(n_vars - 1, degree - first):
            result.append((first, *rest))
    return tuple(result)


@lru_cache(maxsize=4096)
def monomials_of_bidegree(m: int, a_deg: int, b_deg: int) -> tuple[Monomial, ...]:
    """Monomials u^i v^j z^c w^e of bi-degree (a_deg, b_deg) on F_m, descending grlex."""
    if a_deg < 0 or b_deg < 0:
        return ()
    found: list[Monomial] = []
    for c in range(b_deg + 1):
        rest = a_deg - m * c
        if rest < 0:
            break
        for i in range(rest + 1):
            found.append((i, rest - i, c, b_deg - c))
    found.sort(key=lambda e: (sum(e), e), reverse=True)
    return tuple(found)


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """f(images[0], ..., images[n-1]) computed in the ring of the images."""
    if len(images) != f.ring.ngens:
        raise VariableMismatchError(
            f"Substitution needs {f.ring.ngens} images, got {len(images)}"
        )
    target = images[0].ring
    result = target.zero
    for exponents, coeff in f.items():
        term = target.from_dict({(0,) * target.ngens: coeff})
        for image, power in zip(images, exponents):
            if power:
                term = term * image**power
        result = result + term
    return result


def power_product(
    r: PolyRing, factors: Sequence[Polynomial], exponents: Iterable[int]
) -> Polynomial:
    """Product of factors[i] ** exponents[i]; exponents must be non-negative."""
    result = r.one
    for factor, power in zip(factors, exponents):
        if power < 0:
            raise ValueError(f"Negative exponent {power} in power product")
        if power:
            result = result * factor**power
    return result


def coordinates(f: Polynomial, index: Mapping[Monomial, int]) -> dict[int, Fraction]:
    """Sparse coordinate vector of f over an indexed monomial basis."""
    vector: dict[int, Fraction] = {}
    for exponents, coeff in f.items():
        key = tuple(exponents)
        if key not in index:
            raise ValueError(f"Monomial {key} is outside the graded piece")
        vector[index[key]] = to_fraction(coeff)
    return vector


# ---------- Text form ----------


def format_monomial(exponents: Monomial, names: Sequence[str]) -> str:
    factors = []
    for name, power in zip(names, exponents):
        if power == 1:
            factors.append(name)
        elif power > 1:
            factors.append(f"{name}^{power}")
    return "*".join(factors)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text in the shared grammar, terms in descending grlex order."""
    ordered = f.terms()
    if not ordered:
        return "0"
    names = variable_names(f.ring)
    pieces: list[str] = []
    for position, (exponents, raw) in enumerate(ordered):
        coeff = to_fraction(raw)
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        body = format_monomial(tuple(exponents), names)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if position == 0:
            pieces.append(f"-{text}" if sign == "-" else text)
        else:
            pieces.append(f"{sign} {text}")
    return " ".join(pieces)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_COEFF_RE = re.compile(r"\d+(?:/\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_EXP_RE = re.compile(r"\^(\d+)")


def parse_polynomial(text: str, r: PolyRing) -> Polynomial:
    """Parse the shared polynomial grammar into the ring r.

    Terms are joined by ``+``/``-``; a term is an optional coefficient (integer or
    ``p/q``) followed by variables with optional ``^exp``, optionally separated by ``*``.

    Raises:
        ParseError: on malformed text
        UnknownVariableError: on a variable outside the ring
    """
    names = variable_names(r)
    compact = "".join(text.split())
    if not compact:
        raise ParseError("Empty polynomial")
    position = 0
    result: dict[Monomial, Fraction] = {}
    for match in _TERM_RE.finditer(compact):
        if match.start() != position:
            raise ParseError(f"Malformed polynomial {text!r} near {compact[position:]!r}")
        position = match.end()
        sign = -1 if match.group(1) == "-" else 1
        exponents, coeff = _parse_term(match.group(2), names, text)
        result[exponents] = result.get(exponents, Fraction(0)) + sign * coeff
    if position != len(compact):
        raise ParseError(f"Malformed polynomial {text!r} near {compact[position:]!r}")
    return from_terms(r, result)


def _parse_term(body: str, names: tuple[str, ...], text: str) -> tuple[Monomial, Fraction]:
    by_length = sorted(names, key=len, reverse=True)
    exponents = [0] * len(names)
    coeff = Fraction(1)
    cursor = 0
    coeff_match = _COEFF_RE.match(body)
    if coeff_match:
        coeff = parse_rational(coeff_match.group(0))
        cursor = coeff_match.end()
    seen_factor = coeff_match is not None
    while cursor < len(body):
        if body[cursor] == "*":
            if not seen_factor:
                raise ParseError(f"Malformed term {body!r} in {text!r}")
            cursor += 1
            if cursor == len(body):
                raise ParseError(f"Malformed term {body!r} in {text!r}")
        ident = _IDENT_RE.match(body, cursor)
        if ident is None:
            raise ParseError(f"Malformed term {body!r} in {text!r}")
        word = ident.group(0)
        if word in names:
            name = word
        else:
            # juxtaposed variables such as x0x1 or uv
            split = _split_names(word, by_length)
            if not split:
                raise UnknownVariableError(word, names)
            name = split[0]
        cursor += len(name)
        power = 1
        exp_match = _EXP_RE.match(body, cursor)
        if exp_match:
            power = int(exp_match.group(1))
            cursor = exp_match.end()
        exponents[names.index(name)] += power
        seen_factor = True
    return tuple(exponents), coeff


def _split_names(word: str, by_length: list[str]) -> list[str]:
    """Split word into a sequence of variable names, or [] if impossible."""
    if not word:
        return []
    for name in by_length:
        if word.startswith(name):
            if len(name) == len(word):
                return [name]
            rest = _split_names(word[len(name) :], by_length)
            if rest:
                return [name, *rest]
    return []
