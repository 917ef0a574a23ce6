"""Bound evaluation and oracle verification tools."""

from __future__ import annotations

from typing import Any

from ..algebra.polynomial import format_polynomial
from ..algebra.rational import format_rational
from ..bounds import BoundReport, compute_bounds
from ..config import Config, get_config
from ..geometry.divisor import QDivisor
from ..oracle import OracleReport, Verification, verify_bounds
from ..presentation.types import Generator, Relation
from .common import ToolOutput, complete, counts_to_map, degree_to_map, divisor_to_map


def _report_to_map(report: BoundReport) -> dict[str, Any]:
    """Convert a bound report to a dict for JSON response."""
    result: dict[str, Any] = {
        "shape": report.shape.value,
        "source": report.source,
        "degree": degree_to_map(report.degree),
        "generator_bound": report.generator_bound,
        "relation_bound": (
            None if report.relation_bound is None else format_rational(report.relation_bound)
        ),
        "relation_bound_floor": report.relation_floor,
    }
    if report.ells:
        result["ells"] = list(report.ells)
    if report.ell_pairs:
        result["ell_pairs"] = {f"{i},{j}": value for (i, j), value in report.ell_pairs.items()}
    if report.ray_degrees:
        result["ray_degrees"] = list(report.ray_degrees)
    if report.chi is not None:
        result["chi_bound"] = report.chi
    if report.psi is not None:
        result["psi_bound"] = format_rational(report.psi)
    if report.rho is not None:
        result["rho"] = report.rho
        result["tau"] = report.tau
    if report.effective is not None:
        result["effective"] = list(report.effective)
    if report.projective is not None:
        generator, relation = report.projective
        result["projective"] = [generator, format_rational(relation)]
    if report.rewrites:
        result["rewrites"] = {str(i): text for i, text in report.rewrites.items()}
    return result


def _generator_to_map(index: int, generator: Generator) -> dict[str, Any]:
    return {
        "index": index,
        "degree": generator.degree,
        "numerator": format_polynomial(generator.numerator),
        "poles": list(generator.poles),
    }


def _relation_to_map(relation: Relation) -> dict[str, Any]:
    return {
        "kind": relation.kind.value,
        "degree": relation.degree,
        "terms": [{"coeff": c, "word": list(w)} for c, w in relation.terms],
    }


def _oracle_to_map(oracle: OracleReport) -> dict[str, Any]:
    result: dict[str, Any] = {
        "d_max": oracle.d_max,
        "capped": oracle.capped,
        "generator_degrees": counts_to_map(oracle.generator_degrees),
        "generators": [_generator_to_map(i, g) for i, g in enumerate(oracle.generators)],
    }
    if oracle.relations_searched:
        result["relation_degrees"] = counts_to_map(oracle.relation_degrees)
        result["relations"] = [_relation_to_map(r) for r in oracle.relations]
    return result


def _verification_to_map(check: Verification) -> dict[str, Any]:
    result: dict[str, Any] = {
        "verdict": check.verdict.value,
        "claims": None if check.claims is None else list(check.claims),
        "oracle": _oracle_to_map(check.oracle),
    }
    if check.witness is not None:
        result["witness"] = {"kind": check.violated, "degree": check.witness}
    return result


class BoundsTool:
    """Evaluates every degree bound that applies to a divisor."""

    def __init__(self, config: Config | None = None) -> None:
        self.config = config or get_config()

    def bounds(self, divisor: QDivisor) -> ToolOutput:
        """Bound report for a divisor, after ghost completion.

        Args:
            divisor: Divisor as parsed from its spec file

        Returns:
            Bound report payload; warnings name ghost components and missing bounds
        """
        completed, warnings = complete(divisor)
        report = compute_bounds(completed)
        if report.claims() is None:
            warnings.append(f"No degree bounds apply to ring shape {report.shape.value}")
        payload = {"divisor": divisor_to_map(completed), "bounds": _report_to_map(report)}
        return ToolOutput(payload, warnings)


class VerifyTool:
    """Checks bound reports against the brute-force oracle."""

    def __init__(self, config: Config | None = None) -> None:
        self.config = config or get_config()

    def verify(self, divisor: QDivisor, d_max: int, relations: bool = False) -> ToolOutput:
        """Run the oracle to d_max and compare with the bounds.

        Args:
            divisor: Divisor as parsed from its spec file
            d_max: Highest degree searched
            relations: Also search minimal relations

        Returns:
            Oracle report and bounds payload with a PASS, FAIL or INCONCLUSIVE verdict
        """
        completed, warnings = complete(divisor)
        report = compute_bounds(completed)
        check = verify_bounds(completed, report, d_max, relations, self.config)
        warnings.extend(check.warnings)
        payload = {
            "divisor": divisor_to_map(completed),
            "bounds": _report_to_map(report),
            **_verification_to_map(check),
        }
        return ToolOutput(payload, warnings, check.verdict)
