"""Shared error types and the refinement-resolution guard."""

from __future__ import annotations

import os

RESOLUTION_ENV = "PADSET_MAX_RESOLUTION"
_DEFAULT_MAX_RESOLUTION = 12


class InputError(ValueError):
    """Malformed or out-of-domain input."""


class ResolutionError(RuntimeError):
    """An operation would refine sets past the configured depth cap."""


def max_resolution() -> int:
    """Depth cap for ball refinement, from PADSET_MAX_RESOLUTION (default 12)."""
    raw = os.environ.get(RESOLUTION_ENV)
    if raw is None:
        return _DEFAULT_MAX_RESOLUTION
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"{RESOLUTION_ENV} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise InputError(f"{RESOLUTION_ENV} must be nonnegative, got {value}")
    return value
