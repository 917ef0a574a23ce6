from fractions import Fraction

import pytest

from canring.algebra.rational import floor_rational
from canring.convergents import (
    ConvergentSequence,
    continued_fraction,
    lower_convergents,
    record_scan,
)


def test_two_fifths():
    seq = lower_convergents(Fraction(2, 5))
    assert seq.entries == ((0, 1), (1, 3), (2, 5))
    assert seq.format() == "0/1 1/3 2/5"


def test_unit_steps_above_one():
    seq = lower_convergents(Fraction(7, 2))
    assert seq.entries == ((0, 1), (1, 1), (2, 1), (3, 1), (7, 2))


def test_integer_and_zero():
    assert lower_convergents(3).entries == ((0, 1), (1, 1), (2, 1), (3, 1))
    assert lower_convergents(0).entries == ((0, 1),)


def test_continued_fraction():
    assert continued_fraction(Fraction(7, 2)) == [3, 2]
    assert continued_fraction(Fraction(2, 5)) == [0, 2, 2]


def test_negative_rejected():
    with pytest.raises(ValueError):
        lower_convergents(Fraction(-1, 2))


def test_sequence_checks_unimodularity():
    with pytest.raises(ValueError):
        ConvergentSequence(Fraction(2, 5), ((0, 1), (2, 5)))
    with pytest.raises(ValueError):
        ConvergentSequence(Fraction(1, 2), ((0, 1), (1, 3)))


def test_matches_record_scan():
    for q in range(1, 31):
        for p in range(0, 2 * q + 1):
            alpha = Fraction(p, q)
            assert lower_convergents(alpha) == record_scan(alpha), alpha


def test_degrees_increase():
    seq = lower_convergents(Fraction(13, 29))
    assert list(seq.degrees) == sorted(seq.degrees)
    assert seq.degrees[-1] == 29
    ratios = [Fraction(c, d) for c, d in seq]
    assert ratios == sorted(ratios)
    assert len(set(ratios)) == len(ratios)


def test_entries_are_best_lower_approximations():
    for q in range(1, 31):
        for p in range(0, 2 * q + 1):
            alpha = Fraction(p, q)
            for c, d in lower_convergents(alpha):
                assert Fraction(c, d) <= alpha
                for shorter in range(1, d):
                    assert Fraction(floor_rational(shorter * alpha), shorter) < Fraction(c, d)
