"""Shared fixtures: the sample divisors used across the test modules."""

from collections.abc import Callable, Sequence
from pathlib import Path

import pytest

from canring.algebra.polynomial import parse_polynomial
from canring.algebra.rational import parse_rational
from canring.config import Config, set_config
from canring.geometry.divisor import QDivisor, ghost_complete
from canring.geometry.variety import Variety

DIVISORS_DIR = Path(__file__).resolve().parent.parent / "divisors"

DivisorFactory = Callable[[Variety, Sequence[tuple[str, str]]], QDivisor]


def build_divisor(variety: Variety, pairs: Sequence[tuple[str, str]]) -> QDivisor:
    """Divisor from ("p/q", "polynomial text") pairs."""
    return QDivisor.build(
        variety,
        [(parse_rational(c), parse_polynomial(f, variety.ring)) for c, f in pairs],
    )


@pytest.fixture(autouse=True)
def default_config():
    """Every test starts from the built-in caps."""
    config = Config()
    set_config(config)
    return config


@pytest.fixture
def make_divisor() -> DivisorFactory:
    return build_divisor


@pytest.fixture
def divisors_dir() -> Path:
    return DIVISORS_DIR


@pytest.fixture
def hyperplane_divisor() -> QDivisor:
    """1/2 V(x0) - 1/3 V(x1) on P^2, before ghost completion."""
    return build_divisor(Variety.projective(2), [("1/2", "x0"), ("-1/3", "x1")])


@pytest.fixture
def hyperplane_completed(hyperplane_divisor: QDivisor) -> QDivisor:
    return ghost_complete(hyperplane_divisor)


@pytest.fixture
def f0_divisor() -> QDivisor:
    """1/2 V(u) + 1/3 V(z) on F_0, already ghost-complete."""
    return build_divisor(
        Variety.hirzebruch(0), [("1/2", "u"), ("0", "v"), ("1/3", "z"), ("0", "w")]
    )


@pytest.fixture
def two_fifths_line() -> QDivisor:
    """2/5 V(x0) on P^1 with the ghost 0 * V(x1)."""
    return ghost_complete(build_divisor(Variety.projective(1), [("2/5", "x0")]))
