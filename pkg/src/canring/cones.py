"""The cone Sigma of admissible exponent tuples (d, c_0, ..., c_{n-1}) and its rays.

A lattice point sigma of Sigma stands for the section u^d * prod f_i^{c_i}. It needs
d >= 0, c_i >= -d * alpha_i, and the balance rows sum a_i c_i = 0 (plus
sum b_i c_i = 0 on F_m).
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .algebra.linalg import RationalMatrix, rank, solve
from .algebra.rational import common_denominator, floor_rational, lcm_all
from .config import Config, get_config
from .errors import CapacityExceededError, DegreeError, OutsideConeError, RayMismatchError
from .geometry.divisor import QDivisor, degree_of
from .models.enums import RayLabel

logger = logging.getLogger(__name__)

Point = tuple[int, ...]


@dataclass(frozen=True)
class ConeSpec:
    """Coefficient constraints and balance rows of Sigma."""

    alphas: tuple[Fraction, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def arity(self) -> int:
        return len(self.alphas) + 1

    def balance(self, point: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        return tuple(
            sum((Fraction(w) * c for w, c in zip(row, point[1:])), Fraction(0))
            for row in self.rows
        )

    def contains(self, point: Sequence[Fraction | int]) -> bool:
        """Exact membership of an integer tuple."""
        if len(point) != self.arity or any(Fraction(x).denominator != 1 for x in point):
            return False
        d = point[0]
        if d < 0:
            return False
        if any(c < -d * alpha for c, alpha in zip(point[1:], self.alphas)):
            return False
        return all(value == 0 for value in self.balance(point))


@dataclass(frozen=True)
class Ray:
    """Extremal ray e_i or e_{i,j} of Sigma.

    ``closed_form`` is kept only when the closed formula disagreed with the direct
    computation; ``point`` is always the direct value.
    """

    point: Point
    label: RayLabel
    indices: tuple[int, ...]
    closed_form: Point | None = None

    @property
    def degree(self) -> int:
        return self.point[0]

    def name(self) -> str:
        return "e_" + ",".join(map(str, self.indices))


@dataclass(frozen=True)
class TPartition:
    """Components by the sign of a_i * sum(alpha b) - b_i * sum(alpha a)."""

    t_eq: tuple[int, ...]
    t_plus: tuple[int, ...]
    t_minus: tuple[int, ...]


@dataclass(frozen=True)
class Decomposition:
    """sigma = lam + sum zeta_i e_i over the rays, with deg lam < sum of ray degrees."""

    lam: Point
    zeta: tuple[int, ...]
    coefficients: tuple[Fraction, ...]
    simplex: tuple[int, ...]


def ell(ks: Sequence[int], exclude: Sequence[int]) -> int:
    """lcm of the k_j over j outside exclude."""
    return lcm_all(k for j, k in enumerate(ks) if j not in exclude)


def _integral(vector: Sequence[Fraction]) -> Point:
    if any(x.denominator != 1 for x in vector):
        raise ValueError(f"Vector {tuple(map(str, vector))} is not integral")
    return tuple(int(x) for x in vector)


def minimal_integral_multiple(vector: Sequence[Fraction | int]) -> int:
    """Least positive t with t * vector integral."""
    return common_denominator(Fraction(x) for x in vector)


def _require_positive(divisor: QDivisor) -> None:
    degree = degree_of(divisor)
    coords = [degree] if isinstance(degree, Fraction) else list(degree)
    if any(x <= 0 for x in coords):
        raise DegreeError(
            f"Cone Sigma needs positive degree, got {', '.join(str(x) for x in coords)}"
        )


def build_sigma(divisor: QDivisor) -> ConeSpec:
    """Sigma for a ghost-completed divisor of positive degree.

    Raises:
        DegreeError: when a degree coordinate is not positive
    """
    _require_positive(divisor)
    rows = [tuple(c.a for c in divisor.components)]
    if not divisor.variety.is_projective:
        rows.append(tuple(c.b for c in divisor.components))
    return ConeSpec(divisor.alphas, tuple(rows))


def extremal_rays_proj(divisor: QDivisor) -> list[Ray]:
    """Rays e_i of degree l_i a_i with l_i = lcm_{j != i} k_j."""
    if not divisor.variety.is_projective:
        raise ValueError("extremal_rays_proj needs a divisor on P^m")
    _require_positive(divisor)
    alphas, ks = divisor.alphas, divisor.ks
    a = [c.a for c in divisor.components]
    rays: list[Ray] = []
    for i in range(divisor.n):
        scale = ell(ks, [i])
        d = scale * a[i]
        point = [Fraction(d)]
        for j in range(divisor.n):
            if j == i:
                rest = sum((alphas[h] * a[h] for h in range(divisor.n) if h != i), Fraction(0))
                point.append(scale * rest)
            else:
                point.append(-alphas[j] * d)
        rays.append(Ray(_integral(point), RayLabel.E_I, (i,)))
    return rays


def _hirzebruch_sums(divisor: QDivisor, skip: Sequence[int]) -> tuple[Fraction, Fraction]:
    sum_a = sum(
        (c.coefficient * c.a for h, c in enumerate(divisor.components) if h not in skip),
        Fraction(0),
    )
    sum_b = sum(
        (c.coefficient * c.b for h, c in enumerate(divisor.components) if h not in skip),
        Fraction(0),
    )
    return sum_a, sum_b


def t_partition(divisor: QDivisor) -> TPartition:
    """Split components by the sign of a_i * sum(alpha b) - b_i * sum(alpha a)."""
    if divisor.variety.is_projective:
        raise ValueError("t_partition needs a divisor on F_m")
    sum_a, sum_b = _hirzebruch_sums(divisor, ())
    eq: list[int] = []
    plus: list[int] = []
    minus: list[int] = []
    for i, c in enumerate(divisor.components):
        sign = c.a * sum_b - c.b * sum_a
        (eq if sign == 0 else plus if sign > 0 else minus).append(i)
    return TPartition(tuple(eq), tuple(plus), tuple(minus))


def epsilon(divisor: QDivisor, i: int) -> tuple[Fraction, ...]:
    """Degree-one point on the edge of Sigma where only c_i leaves its bound."""
    comps = divisor.components
    weight = comps[i].a + comps[i].b
    rest = sum(
        (c.coefficient * (c.a + c.b) for j, c in enumerate(comps) if j != i), Fraction(0)
    )
    slots = (rest / weight if j == i else -c.coefficient for j, c in enumerate(comps))
    return (Fraction(1), *slots)


def _closed_pair_ray(divisor: QDivisor, i: int, j: int, d: int) -> tuple[Fraction, ...]:
    comps = divisor.components
    sum_a, sum_b = _hirzebruch_sums(divisor, (i, j))
    det = comps[i].a * comps[j].b - comps[j].a * comps[i].b
    point = [Fraction(d)]
    for h, c in enumerate(comps):
        if h == i:
            point.append(d * (comps[j].b * sum_a - comps[j].a * sum_b) / det)
        elif h == j:
            point.append(d * (comps[i].a * sum_b - comps[i].b * sum_a) / det)
        else:
            point.append(-d * c.coefficient)
    return tuple(point)


def _direct_pair_ray(divisor: QDivisor, i: int, j: int, d: int) -> tuple[Fraction, ...]:
    """The point of degree d on the segment from eps_i to eps_j where the rows vanish."""
    cone = build_sigma(divisor)
    eps_i, eps_j = epsilon(divisor, i), epsilon(divisor, j)
    s_i, s_j = cone.balance(eps_i)[0], cone.balance(eps_j)[0]
    x = -d * s_j / (s_i - s_j)
    y = d * s_i / (s_i - s_j)
    return tuple(x * p + y * q for p, q in zip(eps_i, eps_j))


def extremal_rays_hirz(divisor: QDivisor, strict: bool = False) -> list[Ray]:
    """Rays e_i for i in t_eq and e_{i,j} for i in t_plus, j in t_minus.

    Each e_{i,j} is computed from its closed formula and directly as the point of
    degree l_{i,j} (a_i b_j - a_j b_i) on the segment [eps_i, eps_j] inside both
    balance hyperplanes. A disagreement is logged and the direct value kept.

    Raises:
        DegreeError: when a bi-degree coordinate of D is not positive
        RayMismatchError: on a disagreement when ``strict`` is set
    """
    if divisor.variety.is_projective:
        raise ValueError("extremal_rays_hirz needs a divisor on F_m")
    _require_positive(divisor)
    parts = t_partition(divisor)
    ks = divisor.ks
    comps = divisor.components
    rays: list[Ray] = []
    for i in parts.t_eq:
        scale = ell(ks, [i]) * math.gcd(comps[i].a, comps[i].b)
        point = tuple(scale * x for x in epsilon(divisor, i))
        rays.append(Ray(_integral(point), RayLabel.E_I, (i,)))
    for i in parts.t_plus:
        for j in parts.t_minus:
            d = ell(ks, [i, j]) * (comps[i].a * comps[j].b - comps[j].a * comps[i].b)
            closed = _closed_pair_ray(divisor, i, j, d)
            direct = _direct_pair_ray(divisor, i, j, d)
            if closed != direct:
                message = (
                    f"Ray e_{i},{j}: closed form {tuple(map(str, closed))} differs from "
                    f"direct computation {tuple(map(str, direct))}"
                )
                if strict:
                    raise RayMismatchError(message)
                logger.warning(message)
                rays.append(
                    Ray(_integral(direct), RayLabel.E_IJ, (i, j), closed_form=_integral(closed))
                )
            else:
                rays.append(Ray(_integral(direct), RayLabel.E_IJ, (i, j)))
    return rays


def extremal_rays(divisor: QDivisor, strict: bool = False) -> list[Ray]:
    if divisor.variety.is_projective:
        return extremal_rays_proj(divisor)
    return extremal_rays_hirz(divisor, strict)


def _matrix(rays: Sequence[Point]) -> RationalMatrix:
    """Rays as the columns of a matrix."""
    return RationalMatrix.from_rows(list(zip(*rays)))


def _nonnegative_solutions(
    point: Sequence[int], rays: Sequence[Point], size: int
) -> Iterator[tuple[tuple[int, ...], list[Fraction]]]:
    """(subset, coefficients) for independent ray subsets of the given size containing point."""
    for subset in combinations(range(len(rays)), size):
        columns = [rays[s] for s in subset]
        matrix = _matrix(columns)
        if rank(matrix) < size:
            continue
        x = solve(matrix, list(point))
        if x is not None and all(v >= 0 for v in x):
            yield subset, x


def in_cone(point: Sequence[int], rays: Sequence[Point]) -> bool:
    """Whether point is a non-negative rational combination of the rays."""
    if not any(point):
        return True
    dim = rank(RationalMatrix.from_rows(list(rays))) if rays else 0
    for size in range(1, dim + 1):
        if next(_nonnegative_solutions(point, rays, size), None) is not None:
            return True
    return False


def is_extremal(rays: Sequence[Point]) -> bool:
    """No ray lies in the cone spanned by the others."""
    rays = list(rays)
    return all(not in_cone(ray, rays[:i] + rays[i + 1 :]) for i, ray in enumerate(rays))


def canonical_decompose(sigma: Sequence[int], rays: Sequence[Ray]) -> Decomposition:
    """Split sigma over the first simplicial subcone (in index order) that contains it.

    Raises:
        OutsideConeError: when sigma is not in the cone spanned by the rays
    """
    points = [r.point for r in rays]
    dim = rank(RationalMatrix.from_rows(points)) if points else 0
    found = next(_nonnegative_solutions(sigma, points, dim), None) if dim else None
    if found is None:
        if not any(sigma):
            zero = tuple(0 for _ in rays)
            return Decomposition(tuple(sigma), zero, tuple(Fraction(0) for _ in rays), ())
        raise OutsideConeError(f"{tuple(sigma)} is not in the cone spanned by the rays")
    subset, x = found
    coefficients = [Fraction(0)] * len(rays)
    for s, value in zip(subset, x):
        coefficients[s] = value
    zeta = tuple(floor_rational(v) for v in coefficients)
    lam = tuple(
        s - sum(z * r[pos] for z, r in zip(zeta, points)) for pos, s in enumerate(sigma)
    )
    return Decomposition(lam, zeta, tuple(coefficients), subset)


def _box_bases(points: Sequence[Point]) -> list[tuple[int, ...]]:
    """Independent column subsets whose size is the rank of the ray matrix."""
    dim = rank(_matrix(points)) if points else 0
    return [
        subset
        for subset in combinations(range(len(points)), dim)
        if rank(_matrix([points[s] for s in subset])) == dim
    ]


def _box_vertices(
    point: Sequence[int], points: Sequence[Point], bases: Sequence[tuple[int, ...]]
) -> Iterator[list[Fraction]]:
    """Vertices of {s : sum s_i e_i = point, 0 <= s_i <= 1}.

    Non-basic coordinates sit at 0 or 1; the basic ones are solved exactly.
    """
    n = len(points)
    for subset in bases:
        matrix = _matrix([points[s] for s in subset])
        others = [j for j in range(n) if j not in subset]
        for fixed in product((0, 1), repeat=len(others)):
            rhs = [
                value - sum(f * points[j][pos] for j, f in zip(others, fixed))
                for pos, value in enumerate(point)
            ]
            x = solve(matrix, rhs)
            if x is None or any(v < 0 or v > 1 for v in x):
                continue
            s = [Fraction(0)] * n
            for j, f in zip(others, fixed):
                s[j] = Fraction(f)
            for j, v in zip(subset, x):
                s[j] = v
            yield s


def in_half_open_box(
    point: Sequence[int],
    points: Sequence[Point],
    bases: Sequence[tuple[int, ...]] | None = None,
) -> bool:
    """Whether point = sum s_i e_i for some s with 0 <= s_i < 1.

    The closed polytope of admissible s is searched through its vertices. It meets
    the half-open box exactly when each s_i drops below 1 at some vertex, since the
    average of those vertices then has every s_i < 1.
    """
    if bases is None:
        bases = _box_bases(points)
    vertices = list(_box_vertices(point, points, bases))
    if not vertices:
        return False
    return all(any(v[i] < 1 for v in vertices) for i in range(len(points)))


def box_points(
    cone: ConeSpec, rays: Sequence[Ray], config: Config | None = None
) -> list[Point]:
    """Lattice points of Sigma of the form sum s_i e_i with every 0 <= s_i < 1.

    The search runs over degrees below the sum of the ray degrees with per-slot
    bounds from c_i >= -d alpha_i and the summed balance row. Membership is decided
    over all rays at once, not per simplicial subcone.

    Raises:
        CapacityExceededError: when the candidate count exceeds the box cap
    """
    config = config or get_config()
    total = sum(r.degree for r in rays)
    weights = [sum(column) for column in zip(*cone.rows)]
    n = len(cone.alphas)
    ranges: list[list[range]] = []
    needed = 0
    for d in range(total):
        slots = []
        for i in range(n):
            low = -floor_rational(d * cone.alphas[i])
            spare = sum((weights[j] * cone.alphas[j] for j in range(n) if j != i), Fraction(0))
            high = floor_rational(d * spare / weights[i])
            slots.append(range(low, high + 1))
        count = math.prod(len(s) for s in slots[:-1])
        needed += count
        ranges.append(slots)
    if needed > config.box_cap:
        raise CapacityExceededError("box", config.box_cap, needed)
    points = [r.point for r in rays]
    bases = _box_bases(points)
    found: list[Point] = []
    for d, slots in enumerate(ranges):
        for head in product(*slots[:-1]):
            rest = -sum(weights[i] * c for i, c in enumerate(head))
            if rest % weights[-1]:
                continue
            point = (d, *head, rest // weights[-1])
            if not cone.contains(point):
                continue
            if in_half_open_box(point, points, bases):
                found.append(point)
    logger.debug("box search: %d candidates, %d points", needed, len(found))
    return found
