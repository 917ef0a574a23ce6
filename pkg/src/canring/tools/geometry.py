"""Graded basis and cone tools."""

from __future__ import annotations

from typing import Any

from ..algebra.polynomial import Monomial, format_polynomial
from ..cones import (
    Ray,
    box_points,
    build_sigma,
    epsilon,
    extremal_rays,
    is_extremal,
    minimal_integral_multiple,
    t_partition,
)
from ..config import Config, get_config
from ..geometry.divisor import QDivisor
from ..geometry.sections import basis_numerator, graded_basis
from ..models.enums import RayLabel
from .common import ToolOutput, complete, divisor_to_map, factor_text


def _power(text: str, exponent: int) -> str:
    return text if exponent == 1 else f"{text}^{exponent}"


def section_text(divisor: QDivisor, d: int, element: Monomial) -> str:
    """``u^d * num / den`` for the section u^d prod f_i^{c_i}."""
    upper = [_power(factor_text(f), c) for f, c in zip(divisor.polys, element) if c > 0]
    lower = [_power(factor_text(f), -c) for f, c in zip(divisor.polys, element) if c < 0]
    text = f"u^{d} * " + ("*".join(upper) if upper else "1")
    if lower:
        text += " / " + "*".join(lower)
    return text


def _ray_to_map(divisor: QDivisor, ray: Ray) -> dict[str, Any]:
    """Convert a ray to a dict for JSON response."""
    result: dict[str, Any] = {
        "name": ray.name(),
        "label": ray.label.value,
        "point": list(ray.point),
        "degree": ray.degree,
    }
    if ray.label == RayLabel.E_I:
        result["minimal_multiple"] = minimal_integral_multiple(epsilon(divisor, ray.indices[0]))
    if ray.closed_form is not None:
        result["closed_form"] = list(ray.closed_form)
    return result


class BasisTool:
    """Explicit bases of the graded pieces."""

    def __init__(self, config: Config | None = None) -> None:
        self.config = config or get_config()

    def basis(self, divisor: QDivisor, d: int) -> ToolOutput:
        """Basis of H^0(X, floor(dD)) as exponent tuples and the sections they denote.

        Args:
            divisor: Divisor as parsed from its spec file
            d: Degree of the graded piece

        Returns:
            Basis payload with the common denominator exponents floor(d alpha_i)
        """
        completed, warnings = complete(divisor)
        basis = graded_basis(completed, d)
        payload = {
            "divisor": divisor_to_map(completed),
            "degree": d,
            "dimension": len(basis),
            "twist": list(basis.twist),
            "elements": [
                {
                    "exponents": list(e),
                    "section": section_text(completed, d, e),
                    "numerator": format_polynomial(basis_numerator(completed, basis, e)),
                }
                for e in basis.elements
            ],
        }
        return ToolOutput(payload, warnings)


class ConeTool:
    """Extremal rays and box points of the cone Sigma."""

    def __init__(self, config: Config | None = None) -> None:
        self.config = config or get_config()

    def cone(self, divisor: QDivisor, box: bool = False, strict: bool = False) -> ToolOutput:
        """Rays of Sigma with degrees, plus box points when requested.

        Args:
            divisor: Divisor of positive degree as parsed from its spec file
            box: Also enumerate the box points
            strict: Fail on a closed-form ray that disagrees with the direct one

        Returns:
            Cone payload; each closed-form mismatch is a warning
        """
        completed, warnings = complete(divisor)
        sigma = build_sigma(completed)
        rays = extremal_rays(completed, strict)
        payload: dict[str, Any] = {
            "divisor": divisor_to_map(completed),
            "rows": [list(row) for row in sigma.rows],
        }
        if not completed.variety.is_projective:
            parts = t_partition(completed)
            payload["t_partition"] = {
                "t_eq": list(parts.t_eq),
                "t_plus": list(parts.t_plus),
                "t_minus": list(parts.t_minus),
            }
        payload["rays"] = [_ray_to_map(completed, r) for r in rays]
        payload["ray_degree_sum"] = sum(r.degree for r in rays)
        payload["extremal"] = is_extremal([r.point for r in rays])
        for ray in rays:
            if ray.closed_form is not None:
                warnings.append(
                    f"Ray {ray.name()}: closed form {list(ray.closed_form)} differs from "
                    f"direct computation {list(ray.point)}; using the direct value"
                )
        if box:
            points = box_points(sigma, rays, self.config)
            payload["box_points"] = [list(p) for p in points]
        return ToolOutput(payload, warnings)
