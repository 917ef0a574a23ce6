"""Data models for divisor spec files and reports."""

from .enums import Command, RayLabel, RelationKind, RingShape, VarietyKind, Verdict
from .report import Report
from .spec import BaseCanringModel, ComponentSpec, DivisorSpecFile, VarietySpec

__all__ = [
    "BaseCanringModel",
    "Command",
    "ComponentSpec",
    "DivisorSpecFile",
    "RayLabel",
    "RelationKind",
    "Report",
    "RingShape",
    "VarietyKind",
    "VarietySpec",
    "Verdict",
]
