"""Shared exceptions and resource caps."""

from __future__ import annotations

import os

BOX_CAP_ENV = "MOMIDUAL_BOX_CAP"
DEFAULT_BOX_CAP = 10_000_000
DEFAULT_TAYLOR_CAP = 20
DEFAULT_SCARF_SUBSET_CAP = 1 << 20
DEFAULT_LATTICE_CAP = 1 << 20


class PreconditionError(ValueError):
    """An operation was called on input it explicitly rejects."""


class DimensionMismatchError(PreconditionError):
    """Vectors or ideals of different ambient dimension were mixed."""


class CapExceededError(RuntimeError):
    """A configured size cap (box, subset count, lattice) would be exceeded."""


def box_cap(override: int | None = None) -> int:
    """Active cardinality cap for degree-box scans."""
    if override is not None:
        return override
    raw = os.environ.get(BOX_CAP_ENV)
    if raw is not None:
        try:
            value = int(raw)
        except ValueError as exc:
            raise PreconditionError(f"{BOX_CAP_ENV} must be an integer, got {raw!r}") from exc
        if value <= 0:
            raise PreconditionError(f"{BOX_CAP_ENV} must be positive, got {value}")
        return value
    return DEFAULT_BOX_CAP


def hull_generator_cap(n: int) -> int:
    """Default generator cap for exact hull computations."""
    return 16 if n <= 3 else 12
