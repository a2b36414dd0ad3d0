"""Exact computations around the components of V(rho) (x) V(rho)."""

__version__ = "0.1.0"

from .errors import (
    InternalConsistencyError,
    InvalidSpec,
    NonDominantInput,
    PreconditionViolated,
    ResourceLimit,
)
from .rootsystem import RootDatum, RootSystemSpec, build_root_datum, parse_spec

__all__ = [
    "InternalConsistencyError",
    "InvalidSpec",
    "NonDominantInput",
    "PreconditionViolated",
    "ResourceLimit",
    "RootDatum",
    "RootSystemSpec",
    "build_root_datum",
    "parse_spec",
]
