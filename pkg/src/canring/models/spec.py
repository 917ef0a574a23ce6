"""Divisor spec file model and related data structures."""

from pydantic import BaseModel, Field, field_validator, model_validator

from .enums import VarietyKind


class BaseCanringModel(BaseModel):
    """Base model for all file and report structures."""

    model_config = {"use_enum_values": True}


class VarietySpec(BaseCanringModel):
    """Ambient variety.

    ``{"type": "projective", "dim": m}`` is P^m, ``{"type": "hirzebruch", "m": m}`` is F_m.
    """

    type: VarietyKind
    dim: int | None = Field(default=None, ge=1)
    m: int | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _check_parameter(self) -> "VarietySpec":
        if self.type == VarietyKind.PROJECTIVE.value:
            if self.dim is None or self.m is not None:
                raise ValueError('projective variety needs "dim" and no "m"')
        elif self.m is None or self.dim is not None:
            raise ValueError('hirzebruch variety needs "m" and no "dim"')
        return self


class ComponentSpec(BaseCanringModel):
    """One component: a coefficient ``p/q`` and the polynomial text of its hypersurface."""

    coeff: str
    poly: str

    @field_validator("coeff", mode="before")
    @classmethod
    def _coeff_text(cls, value: object) -> object:
        # bare integers are allowed in hand-written files
        if isinstance(value, int) and not isinstance(value, bool):
            return str(value)
        return value


class DivisorSpecFile(BaseCanringModel):
    """A Q-divisor on P^m or F_m as stored on disk."""

    variety: VarietySpec
    components: list[ComponentSpec] = Field(default_factory=list)
