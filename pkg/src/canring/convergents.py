"""Best lower rational approximations 0 = c_0/d_0 < ... < c_r/d_r = alpha."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .algebra.rational import floor_rational


@dataclass(frozen=True)
class ConvergentSequence:
    """Entries (c_i, d_i), increasing in c_i/d_i, consecutive pairs unimodular."""

    alpha: Fraction
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.entries or self.entries[0] != (0, 1):
            raise ValueError("A convergent sequence starts at 0/1")
        last_c, last_d = self.entries[-1]
        if Fraction(last_c, last_d) != self.alpha:
            raise ValueError(f"Sequence ends at {last_c}/{last_d}, not at {self.alpha}")
        for (c0, d0), (c1, d1) in zip(self.entries, self.entries[1:]):
            if c1 * d0 - c0 * d1 != 1:
                raise ValueError(f"{c0}/{d0} and {c1}/{d1} are not unimodular neighbours")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> tuple[int, int]:
        return self.entries[index]

    @property
    def numerators(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.entries)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.entries)

    def format(self) -> str:
        return " ".join(f"{c}/{d}" for c, d in self.entries)


def _check_alpha(alpha: Fraction | int) -> Fraction:
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError(f"Invalid alpha {alpha}: lower convergents need alpha >= 0")
    return alpha


def continued_fraction(alpha: Fraction | int) -> list[int]:
    """Regular continued fraction [a_0; a_1, ..., a_N] of a non-negative rational."""
    alpha = _check_alpha(alpha)
    p, q = alpha.numerator, alpha.denominator
    digits: list[int] = []
    while q:
        digit, rest = divmod(p, q)
        digits.append(digit)
        p, q = q, rest
    return digits


def lower_convergents(alpha: Fraction | int) -> ConvergentSequence:
    """Even convergents of alpha together with their intermediate fractions.

    The expansion is padded to even length, so the last approach to alpha comes from
    below. Matches record_scan on every input.
    """
    alpha = _check_alpha(alpha)
    entries = [(0, 1)]
    if alpha == 0:
        return ConvergentSequence(alpha, tuple(entries))
    digits = continued_fraction(alpha)
    if len(digits) % 2 == 0:
        # odd last index: [..., a_N] == [..., a_N - 1, 1]
        digits[-1] -= 1
        digits.append(1)
    h_prev, k_prev = 0, 1
    h_cur, k_cur = 1, 0
    for index, digit in enumerate(digits):
        if index % 2 == 0:
            for t in range(1, digit + 1):
                entries.append((h_prev + t * h_cur, k_prev + t * k_cur))
        h_prev, k_prev, h_cur, k_cur = h_cur, k_cur, digit * h_cur + h_prev, digit * k_cur + k_prev
    return ConvergentSequence(alpha, tuple(entries))


def record_scan(alpha: Fraction | int) -> ConvergentSequence:
    """Brute force: scan c/d <= alpha by (d, c) and keep each new strict maximum."""
    alpha = _check_alpha(alpha)
    entries = [(0, 1)]
    best = Fraction(0)
    for d in range(1, alpha.denominator + 1):
        for c in range(floor_rational(d * alpha) + 1):
            if Fraction(c, d) > best:
                best = Fraction(c, d)
                entries.append((c, d))
    return ConvergentSequence(alpha, tuple(entries))
