"""Tool output and the conversions shared by every tool."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..algebra.polynomial import Polynomial, format_polynomial
from ..algebra.rational import format_rational
from ..geometry.divisor import QDivisor, ghost_complete, ghost_forms
from ..models.enums import Verdict


@dataclass
class ToolOutput:
    """JSON-ready payload plus the warnings and verdict for the report."""

    payload: dict[str, Any]
    warnings: list[str] = field(default_factory=list)
    verdict: Verdict | None = None


def degree_to_map(degree: Fraction | int | tuple[Any, Any]) -> str | list[str]:
    if isinstance(degree, tuple):
        return [format_rational(x) for x in degree]
    return format_rational(degree)


def counts_to_map(counts: dict[int, int]) -> dict[str, int]:
    return {str(degree): count for degree, count in counts.items()}


def factor_text(f: Polynomial) -> str:
    text = format_polynomial(f)
    return text if len(f) == 1 else f"({text})"


def divisor_to_map(divisor: QDivisor) -> dict[str, Any]:
    """Convert a divisor to a dict for the report."""
    return {
        "variety": divisor.variety.describe(),
        "components": [
            {"coeff": format_rational(c.coefficient), "poly": format_polynomial(c.poly)}
            for c in divisor.components
        ],
    }


def complete(divisor: QDivisor) -> tuple[QDivisor, list[str]]:
    """Ghost-complete a divisor, with one warning naming the appended forms."""
    ghosts = ghost_forms(divisor)
    warnings: list[str] = []
    if ghosts:
        warnings.append(
            "Appended ghost components: "
            + ", ".join(f"0*V({format_polynomial(g)})" for g in ghosts)
        )
    return ghost_complete(divisor), warnings
