"""Divisor spec file parsing and storage."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import yaml
from pydantic import ValidationError

from ..algebra.polynomial import format_polynomial, parse_polynomial
from ..algebra.rational import format_rational, parse_rational
from ..config import Config, get_config
from ..errors import ParseError
from ..geometry.divisor import QDivisor
from ..geometry.variety import Variety
from ..models.enums import VarietyKind
from ..models.spec import ComponentSpec, DivisorSpecFile, VarietySpec


def _validate(data: object) -> DivisorSpecFile:
    try:
        return DivisorSpecFile.model_validate(data)
    except ValidationError as exc:
        raise ParseError(f"Invalid divisor spec: {exc}") from exc


def _load_text(text: str, fmt: str) -> object:
    if fmt == "json":
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"Divisor spec is not valid JSON: {exc}") from exc
    if fmt == "yaml":
        try:
            return yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise ParseError(f"Divisor spec is not valid YAML: {exc}") from exc
    raise ValueError(f"Invalid format: {fmt}. Must be one of: yaml, json")


def spec_to_divisor(spec: DivisorSpecFile) -> QDivisor:
    """Validated QDivisor for a spec model; ghost completion is not applied."""
    if spec.variety.type == VarietyKind.PROJECTIVE.value:
        assert spec.variety.dim is not None
        variety = Variety.projective(spec.variety.dim)
    else:
        assert spec.variety.m is not None
        variety = Variety.hirzebruch(spec.variety.m)
    pairs = [
        (parse_rational(c.coeff), parse_polynomial(c.poly, variety.ring))
        for c in spec.components
    ]
    return QDivisor.build(variety, pairs)


def parse_divisor_spec(text: str, fmt: str = "yaml") -> QDivisor:
    """Parse divisor spec text as ``yaml`` (which also reads JSON) or strict ``json``.

    Raises:
        ParseError: on malformed text, rationals or polynomials
        UnknownVariableError: on a variable outside the variety's coordinates
        NonHomogeneousError: naming the offending term
        ProportionalComponentsError: on duplicate components
    """
    return spec_to_divisor(_validate(_load_text(text, fmt)))


def serialize_divisor(divisor: QDivisor) -> DivisorSpecFile:
    """Normalized spec: canonical ``p/q`` coefficients and canonical polynomial text."""
    variety = divisor.variety
    if variety.is_projective:
        variety_spec = VarietySpec(type=VarietyKind.PROJECTIVE, dim=variety.m)
    else:
        variety_spec = VarietySpec(type=VarietyKind.HIRZEBRUCH, m=variety.m)
    return DivisorSpecFile(
        variety=variety_spec,
        components=[
            ComponentSpec(coeff=format_rational(c.coefficient), poly=format_polynomial(c.poly))
            for c in divisor.components
        ],
    )


def _spec_data(divisor: QDivisor) -> dict[str, object]:
    return serialize_divisor(divisor).model_dump(exclude_none=True)


def dump_divisor_spec(divisor: QDivisor, fmt: str = "yaml") -> str:
    """Render the normalized spec as ``yaml`` or ``json`` text."""
    data = _spec_data(divisor)
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt == "yaml":
        return yaml.dump(data, default_flow_style=False, allow_unicode=True, sort_keys=False)
    raise ValueError(f"Invalid format: {fmt}. Must be one of: yaml, json")


def spec_digest(divisor: QDivisor) -> str:
    """SHA-256 of the canonical JSON of the normalized spec."""
    canonical = json.dumps(_spec_data(divisor), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class SpecStorage:
    """Reads and writes divisor spec files."""

    def __init__(self, config: Config | None = None) -> None:
        self.config = config or get_config()

    def load(self, path: Path | str) -> QDivisor:
        """Load a divisor spec file; ``.json`` paths are read as JSON, everything else YAML.

        Raises:
            ParseError: when the file is missing or malformed
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"Cannot read divisor spec {path}: {exc.strerror}") from exc
        return parse_divisor_spec(text, "json" if path.suffix == ".json" else "yaml")

    def save(self, divisor: QDivisor, path: Path | str) -> Path:
        """Write the normalized spec; ``.json`` paths get JSON, everything else YAML."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        fmt = "json" if path.suffix == ".json" else "yaml"
        path.write_text(dump_divisor_spec(divisor, fmt), encoding="utf-8")
        return path
