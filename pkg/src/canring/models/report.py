"""Report envelope emitted by every CLI command."""

from typing import Any

from pydantic import Field

from .enums import Command, Verdict
from .spec import BaseCanringModel


class Report(BaseCanringModel):
    """Command echo, input digest, result payload, warnings and verdict."""

    command: Command
    digest: str | None = None  # SHA-256 of the normalized divisor spec
    result: dict[str, Any] = Field(default_factory=dict)
    warnings: list[str] = Field(default_factory=list)
    verdict: Verdict | None = None
