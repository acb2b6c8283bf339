"""Size guards shared by every enumerating routine.

All limits are counts of objects (codewords, cosets, table entries), not
exponents.  ``SPECKTRAL_MAX_ENUM`` overrides the codeword-enumeration limit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


class GuardError(RuntimeError):
    """Raised when a computation would exceed a configured size guard."""


@dataclass(frozen=True)
class Limits:
    max_enum: int = 2**26  # codewords of one (affine) code
    max_cosets: int = 2**20  # cosets scanned by alpha()
    max_dense: int = 2**26  # entries of a dense function on Q_q^n
    max_naive: int = 2**12  # side of a dense character matrix
    max_faces: int = 2**24  # faces scanned by the covering routines

    def with_overrides(self, **kwargs) -> Limits:
        return replace(self, **kwargs)


def current_limits() -> Limits:
    raw = os.environ.get("SPECKTRAL_MAX_ENUM")
    if raw is None:
        return Limits()
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"SPECKTRAL_MAX_ENUM must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("SPECKTRAL_MAX_ENUM must be positive")
    return Limits(max_enum=value)


def check(size: int, limit: int, what: str) -> None:
    if size > limit:
        raise GuardError(f"{what} too large: {size} > {limit}")
