"""Exact linear algebra over QQ by fraction-free elimination.

Vectors are cleared to primitive integer rows before elimination. A row with pivot p
eliminates column p from a vector by cross multiplication (Bareiss style) followed by
division by the content, so intermediate entries stay small.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DimensionMismatchError
from .rational import common_denominator

SparseVector = dict[int, Fraction]


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError(
                f"Matrix declared {self.rows}x{self.cols} but entries do not match"
            )

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Fraction | int]], cols: int | None = None
    ) -> RationalMatrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        return cls(len(entries), cols, entries)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> RationalMatrix:
        return RationalMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def apply(self, vector: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        """M @ vector."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"Cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(vector)}"
            )
        return tuple(sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self.entries)


def _primitive(values: Mapping[int, Fraction | int]) -> dict[int, int]:
    """Scale a sparse rational vector to a primitive integer vector (same direction)."""
    scale = common_denominator(Fraction(v) for v in values.values())
    ints = {k: int(Fraction(v) * scale) for k, v in values.items() if v != 0}
    content = math.gcd(*ints.values()) if ints else 1
    return {k: v // content for k, v in ints.items()}


VectorLike = Sequence[Fraction | int] | Mapping[int, Fraction | int]


def _sparse(vector: VectorLike) -> dict[int, Fraction | int]:
    if isinstance(vector, Mapping):
        return dict(vector)
    return {i: x for i, x in enumerate(vector) if x != 0}


class EchelonBasis:
    """Incremental row echelon form over sparse integer rows.

    Each stored row's pivot is its smallest nonzero column, and pivots are distinct.
    With ``track=True`` every row also carries its combination of inserted labels, so a
    dependent insertion yields an exact linear relation among the inserted vectors.
    """

    def __init__(self, track: bool = False) -> None:
        self.track = track
        self._rows: dict[int, tuple[dict[int, int], dict[int, int]]] = {}
        self._inserted = 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(
        self, vector: dict[int, int], combination: dict[int, int]
    ) -> tuple[dict[int, int], dict[int, int]]:
        while vector:
            col = min(vector)
            entry = self._rows.get(col)
            if entry is None:
                break
            row, row_combination = entry
            pivot = row[col]
            factor = vector[col]
            vector = _combine(pivot, vector, -factor, row)
            if self.track:
                combination = _combine(pivot, combination, -factor, row_combination)
            content = math.gcd(*vector.values(), *combination.values())
            if content > 1:
                vector = {k: v // content for k, v in vector.items()}
                combination = {k: v // content for k, v in combination.items()}
        return vector, combination

    def add(
        self,
        vector: VectorLike,
        label: int | None = None,
    ) -> dict[int, int] | None:
        """Insert a vector.

        Returns:
            None when the vector was independent and became a new row; otherwise the
            dependency as a primitive integer combination of labels (empty when
            tracking is off)
        """
        if label is None:
            label = self._inserted
        self._inserted += 1
        raw = _sparse(vector)
        start = _primitive(raw)
        combination: dict[int, int] = {}
        if self.track:
            combination = {label: 1}
            if start:
                # start == scale * vector; keep combination . inputs == current row
                key = next(iter(start))
                scale = Fraction(start[key]) / Fraction(raw[key])
                start = {k: v * scale.denominator for k, v in start.items()}
                combination = {label: scale.numerator}
        reduced, combination = self._reduce(start, combination)
        if reduced:
            self._rows[min(reduced)] = (reduced, combination)
            return None
        return _primitive(combination) if self.track else {}

    def contains(self, vector: VectorLike) -> bool:
        start = _primitive(_sparse(vector))
        reduced, _ = self._reduce(start, {})
        return not reduced


def _combine(a: int, x: Mapping[int, int], b: int, y: Mapping[int, int]) -> dict[int, int]:
    """a*x + b*y with zero entries dropped."""
    out = {k: a * v for k, v in x.items()}
    for k, v in y.items():
        value = out.get(k, 0) + b * v
        if value:
            out[k] = value
        else:
            out.pop(k, None)
    return out


def rank(matrix: RationalMatrix) -> int:
    """Exact rank."""
    basis = EchelonBasis()
    for row in matrix.entries:
        basis.add(row)
    return basis.rank


def span_contains(
    rows: Iterable[Sequence[Fraction | int]], vector: Sequence[Fraction | int]
) -> bool:
    """Whether vector lies in the span of rows."""
    rows = list(rows)
    if any(len(r) != len(vector) for r in rows):
        raise DimensionMismatchError("span_contains: rows and vector differ in length")
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    return basis.contains(vector)


def left_kernel(vectors: Sequence[Mapping[int, Fraction | int]]) -> list[SparseVector]:
    """Basis of {lam : sum lam_i vectors[i] = 0}, as sparse vectors over positions."""
    basis = EchelonBasis(track=True)
    relations: list[SparseVector] = []
    for position, vector in enumerate(vectors):
        dependency = basis.add(vector, label=position)
        if dependency is not None:
            relations.append({k: Fraction(v) for k, v in dependency.items()})
    return relations


def kernel_basis(matrix: RationalMatrix) -> list[list[Fraction]]:
    """Basis of the right null space {v : M v = 0}."""
    columns = [
        {i: x for i, x in enumerate(matrix.column(j)) if x != 0} for j in range(matrix.cols)
    ]
    basis: list[list[Fraction]] = []
    for relation in left_kernel(columns):
        dense = [Fraction(0)] * matrix.cols
        for j, value in relation.items():
            dense[j] = value
        basis.append(dense)
    return basis


def solve(matrix: RationalMatrix, rhs: Sequence[Fraction | int]) -> list[Fraction] | None:
    """Some x with M x = rhs (free variables zero), or None when inconsistent."""
    if len(rhs) != matrix.rows:
        raise DimensionMismatchError(
            f"Right-hand side of length {len(rhs)} for a matrix with {matrix.rows} rows"
        )
    basis = EchelonBasis(track=True)
    for j in range(matrix.cols):
        basis.add({i: x for i, x in enumerate(matrix.column(j)) if x != 0}, label=j)
    target = {i: Fraction(x) for i, x in enumerate(rhs) if x != 0}
    if not target:
        return [Fraction(0)] * matrix.cols
    dependency = basis.add(target, label=matrix.cols)
    if dependency is None or dependency.get(matrix.cols, 0) == 0:
        return None
    lead = Fraction(dependency[matrix.cols])
    solution = [Fraction(0)] * matrix.cols
    for j, value in dependency.items():
        if j != matrix.cols:
            solution[j] = -Fraction(value) / lead
    return solution


def inverse(matrix: RationalMatrix) -> RationalMatrix | None:
    """Inverse of a square matrix, or None when singular."""
    if matrix.rows != matrix.cols:
        raise DimensionMismatchError("Only square matrices have inverses")
    if rank(matrix) < matrix.rows:
        return None
    columns = []
    for i in range(matrix.rows):
        unit = [1 if j == i else 0 for j in range(matrix.rows)]
        x = solve(matrix, unit)
        assert x is not None
        columns.append(x)
    return RationalMatrix.from_rows(columns).transpose()
