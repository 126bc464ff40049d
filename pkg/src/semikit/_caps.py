"""Dimension cap for the exact decision procedures.

Fourier-Motzkin elimination grows quickly with dimension, so the exact
membership/coordinate procedures refuse inputs above a cap. The default
is 12; SEMIKIT_MAX_DIM raises or lowers it, clamped to a hard ceiling
of 16.
"""

import os

DEFAULT_CAP = 12
HARD_CEILING = 16


def exact_dim_cap() -> int:
    raw = os.environ.get("SEMIKIT_MAX_DIM")
    if not raw:
        return DEFAULT_CAP
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_CAP
    return max(1, min(HARD_CEILING, value))
