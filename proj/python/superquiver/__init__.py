"""Super-representations of coloured type A quivers."""

from ._core import (
    ConstructionError,
    DimensionError,
    PreconditionError,
    ar_dot,
    construct,
    preprojective_dims,
    roots,
    run_cli,
    verify,
)

__all__ = [
    "ConstructionError",
    "DimensionError",
    "PreconditionError",
    "ar_dot",
    "construct",
    "preprojective_dims",
    "roots",
    "run_cli",
    "verify",
]
