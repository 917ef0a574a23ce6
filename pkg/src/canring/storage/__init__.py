"""Storage layer for divisor spec files."""

from .specs import (
    SpecStorage,
    dump_divisor_spec,
    parse_divisor_spec,
    serialize_divisor,
    spec_digest,
    spec_to_divisor,
)

__all__ = [
    "SpecStorage",
    "dump_divisor_spec",
    "parse_divisor_spec",
    "serialize_divisor",
    "spec_digest",
    "spec_to_divisor",
]
