"""Presentation of R_D for D = alpha * V(x_k) on P^m.

Generators are F_i^v = u^{d_i} x^v / x_k^{c_i}, one family per lower convergent
c_i/d_i of alpha, v running over exponent vectors of degree c_i avoiding x_k. The
relations are the binomials G (two convergents at least two apart) and L (equal or
adjacent convergents with unsorted numerators).
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations_with_replacement, product

from ..algebra.polynomial import Monomial, monomial, monomials_of_degree
from ..convergents import ConvergentSequence, lower_convergents
from ..errors import OutsideConeError
from ..geometry.divisor import QDivisor
from ..geometry.variety import Variety
from ..models.enums import RelationKind
from .types import Generator, Presentation, Relation, Word, make_word

logger = logging.getLogger(__name__)


def class_S(c: int, m: int, k: int) -> tuple[Monomial, ...]:  # noqa: N802
    """Exponent vectors in Z_{>=0}^{m+1} of degree c with v_k = 0."""
    if c < 0:
        raise ValueError(f"Invalid degree {c}: must be >= 0")
    if not 0 <= k <= m:
        raise ValueError(f"Invalid coordinate index {k} for P^{m}")
    return tuple((*e[:k], 0, *e[k:]) for e in monomials_of_degree(m, c))


def _support(v: Monomial) -> list[int]:
    return [i for i, x in enumerate(v) if x]


def precede(v: Monomial, w: Monomial) -> bool:
    """v before w: the last coordinate used by v is at most the first used by w."""
    if len(v) != len(w):
        raise ValueError("precede: vectors differ in length")
    left, right = _support(v), _support(w)
    if not left or not right:
        return True
    return left[-1] <= right[0]


def _indices(v: Monomial) -> list[int]:
    """Multiset of coordinate indices of v, sorted."""
    return [i for i, x in enumerate(v) for _ in range(x)]


def _vector(indices: list[int], size: int) -> Monomial:
    v = [0] * size
    for i in indices:
        v[i] += 1
    return tuple(v)


def sorted_split(v: Monomial, w: Monomial, c_i: int, c_j: int) -> tuple[Monomial, Monomial]:
    """The pair (y, z) with y + z = v + w, |y| = c_i and y before z."""
    if sum(v) != c_i or sum(w) != c_j:
        raise ValueError(f"sorted_split: degrees {sum(v)}, {sum(w)} differ from {c_i}, {c_j}")
    merged = sorted(_indices(v) + _indices(w))
    return _vector(merged[:c_i], len(v)), _vector(merged[c_i:], len(v))


def two_convergent_decompose(
    target: tuple[int, int], seq: ConvergentSequence
) -> tuple[int, tuple[int, int]]:
    """Write (d, c) = k1 * (d_h, c_h) + k2 * (d_{h+1}, c_{h+1}) with k1, k2 >= 0.

    Returns the first such h. A target on the ray of entry h + 1 is reported as
    (h + 1, (k2, 0)).

    Raises:
        OutsideConeError: when c < 0 or c/d > alpha
    """
    d, c = target
    alpha = seq.alpha
    if d < 0 or c < 0 or c > d * alpha:
        raise OutsideConeError(f"({d}, {c}) is outside the cone spanned by the convergents")
    if len(seq) == 1:
        return 0, (d, 0)
    for h in range(len(seq) - 1):
        c_h, d_h = seq[h]
        c_next, d_next = seq[h + 1]
        k1 = d * c_next - c * d_next
        k2 = c * d_h - d * c_h
        if k1 >= 0 and k2 >= 0:
            if k1 == 0:
                return h + 1, (k2, 0)
            return h, (k1, k2)
    raise OutsideConeError(f"({d}, {c}) is outside the cone spanned by the convergents")


class _Families:
    """Generator index lookup by (convergent, exponent vector)."""

    def __init__(self, seq: ConvergentSequence, m: int, k: int) -> None:
        self.seq = seq
        self.classes = [class_S(c, m, k) for c, _ in seq]
        self.index: dict[tuple[int, Monomial], int] = {}
        for i, vectors in enumerate(self.classes):
            for v in vectors:
                self.index[(i, v)] = len(self.index)

    def word(self, pieces: list[tuple[int, Monomial]]) -> Word:
        return make_word([self.index[p] for p in pieces])


def _g_relations(families: _Families) -> list[Relation]:
    seq = families.seq
    relations: list[Relation] = []
    for i in range(len(seq)):
        for j in range(i + 2, len(seq)):
            (c_i, d_i), (c_j, d_j) = seq[i], seq[j]
            h, (k1, k2) = two_convergent_decompose((d_i + d_j, c_i + c_j), seq)
            for v, w in product(families.classes[i], families.classes[j]):
                merged = sorted(_indices(v) + _indices(w))
                pieces: list[tuple[int, Monomial]] = []
                cursor = 0
                for index, count in ((h, k1), (h + 1, k2)):
                    size = seq[index][0] if count else 0
                    for _ in range(count):
                        pieces.append((index, _vector(merged[cursor : cursor + size], len(v))))
                        cursor += size
                left = families.word([(i, v), (j, w)])
                right = families.word(pieces)
                if left == right:
                    logger.debug("Skipping trivial G relation at %s", left)
                    continue
                relations.append(Relation.binomial(RelationKind.G, left, right, d_i + d_j))
    return relations


def _l_relations(families: _Families) -> list[Relation]:
    seq = families.seq
    relations: list[Relation] = []
    for i in range(len(seq)):
        c_i, d_i = seq[i]
        for v, w in combinations_with_replacement(families.classes[i], 2):
            y, z = sorted_split(v, w, c_i, c_i)
            if sorted([y, z]) == sorted([v, w]):
                continue
            relations.append(
                Relation.binomial(
                    RelationKind.L,
                    families.word([(i, v), (i, w)]),
                    families.word([(i, y), (i, z)]),
                    2 * d_i,
                )
            )
        if i + 1 == len(seq):
            continue
        c_j, d_j = seq[i + 1]
        for v, w in product(families.classes[i], families.classes[i + 1]):
            if precede(v, w):
                continue
            y, z = sorted_split(v, w, c_i, c_j)
            relations.append(
                Relation.binomial(
                    RelationKind.L,
                    families.word([(i, v), (i + 1, w)]),
                    families.word([(i, y), (i + 1, z)]),
                    d_i + d_j,
                )
            )
    return relations


def one_hyperplane_presentation(alpha: Fraction | int, k: int, m: int) -> Presentation:
    """Generators F_i^v and the G and L relations of R(P^m, alpha * V(x_k))."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError(f"Invalid alpha {alpha}: must be > 0")
    variety = Variety.projective(m)
    divisor = QDivisor.build(variety, [(alpha, variety.coordinate(k))])
    seq = lower_convergents(alpha)
    families = _Families(seq, m, k)
    generators = [
        Generator(
            degree=d,
            numerator=monomial(variety.ring, v),
            poles=(c,),
            component=0,
            convergent=i,
            exponent=v,
        )
        for i, (c, d) in enumerate(seq)
        for v in families.classes[i]
    ]
    relations = _g_relations(families) + _l_relations(families)
    relations.sort(key=lambda r: r.degree)
    logger.info(
        "alpha=%s on P^%d: %d generators, %d relations",
        alpha,
        m,
        len(generators),
        len(relations),
    )
    return Presentation(divisor, tuple(generators), tuple(relations), convergents=seq)
