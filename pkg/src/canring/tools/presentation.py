"""Presentation and convergent tools."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from ..algebra.polynomial import format_polynomial
from ..algebra.rational import format_rational
from ..config import Config, get_config
from ..convergents import ConvergentSequence, continued_fraction, lower_convergents
from ..geometry.divisor import QDivisor
from ..presentation.effective import effective_presentation
from ..presentation.types import Generator, Presentation, Relation
from .common import ToolOutput, complete, counts_to_map, divisor_to_map


def _generator_to_map(index: int, generator: Generator) -> dict[str, Any]:
    """Convert a generator to a dict for JSON response."""
    result: dict[str, Any] = {
        "index": index,
        "label": generator.label(index),
        "degree": generator.degree,
        "numerator": format_polynomial(generator.numerator),
        "poles": list(generator.poles),
    }
    if generator.component is not None:
        result["component"] = generator.component
    if generator.exponent is not None:
        result["exponent"] = list(generator.exponent)
    return result


def _relation_to_map(relation: Relation, presentation: Presentation) -> dict[str, Any]:
    """Convert a relation to a dict, words spelled with generator labels."""

    def spell(word: tuple[int, ...]) -> list[str]:
        return [presentation.generators[g].label(g) for g in word]

    result: dict[str, Any] = {"kind": relation.kind.value, "degree": relation.degree}
    if relation.is_binomial:
        result["left"] = spell(relation.left)
        result["right"] = spell(relation.right)
    else:
        result["terms"] = [{"coeff": c, "word": spell(w)} for c, w in relation.terms]
    return result


def _convergents_to_map(seq: ConvergentSequence) -> dict[str, Any]:
    return {
        "alpha": format_rational(seq.alpha),
        "continued_fraction": continued_fraction(seq.alpha),
        "entries": [{"c": c, "d": d} for c, d in seq],
        "text": seq.format(),
    }


class PresentationTool:
    """Builds explicit presentations of effective divisors on P^m."""

    def __init__(self, config: Config | None = None) -> None:
        self.config = config or get_config()

    def present(self, divisor: QDivisor) -> ToolOutput:
        """Generators and relations of R_D.

        Args:
            divisor: Effective divisor on P^m as parsed from its spec file

        Returns:
            Presentation payload: generators with degrees, numerators and pole orders,
            relations with kind tags and both words
        """
        completed, warnings = complete(divisor)
        presentation = effective_presentation(completed, self.config)
        payload: dict[str, Any] = {
            "divisor": divisor_to_map(presentation.divisor),
            "generator_degrees": counts_to_map(presentation.generator_degrees()),
            "relation_degrees": counts_to_map(presentation.relation_degrees()),
            "generators": [
                _generator_to_map(i, g) for i, g in enumerate(presentation.generators)
            ],
            "relations": [_relation_to_map(r, presentation) for r in presentation.relations],
        }
        if presentation.convergents is not None:
            payload["convergents"] = _convergents_to_map(presentation.convergents)
        return ToolOutput(payload, warnings)


class ConvergentsTool:
    """Lower convergents of a rational."""

    def __init__(self, config: Config | None = None) -> None:
        self.config = config or get_config()

    def convergents(self, alpha: Fraction) -> ToolOutput:
        return ToolOutput(_convergents_to_map(lower_convergents(alpha)))
