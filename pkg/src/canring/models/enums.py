"""Enumerations for varieties, ring shapes, relation kinds and verdicts."""

from enum import Enum


class VarietyKind(str, Enum):
    """Ambient variety family."""

    PROJECTIVE = "projective"
    HIRZEBRUCH = "hirzebruch"


class RingShape(str, Enum):
    """Coarse shape of a section ring, decided from the divisor degree."""

    TRIVIAL = "trivial"
    UNIVARIATE = "univariate"
    PROJECTIVE_LINE = "projective_line"
    GENERAL = "general"


class RelationKind(str, Enum):
    """Family a relation belongs to."""

    G = "G"
    L = "L"
    KERNEL = "kernel"


class RayLabel(str, Enum):
    """Extremal ray families."""

    E_I = "e_i"
    E_IJ = "e_ij"


class Verdict(str, Enum):
    """Outcome of checking bounds against the oracle."""

    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


class Command(str, Enum):
    """CLI subcommands."""

    BOUNDS = "bounds"
    PRESENT = "present"
    BASIS = "basis"
    CONE = "cone"
    VERIFY = "verify"
    CONVERGENTS = "convergents"
