"""Numeric comparison tolerance shared by bound checks."""

import os

DEFAULT_EPS = 1e-9

ENV_VAR = "SPECTROHAM_EPS"


def resolve_eps(eps=None):
    """Return the comparison tolerance to use.

    Explicit argument wins, then the SPECTROHAM_EPS environment
    variable, then DEFAULT_EPS.
    """
    if eps is not None:
        if eps < 0:
            raise ValueError("tolerance must be nonnegative")
        return float(eps)
    raw = os.environ.get(ENV_VAR)
    if raw is not None:
        value = float(raw)
        if value < 0:
            raise ValueError(f"{ENV_VAR} must be nonnegative, got {raw}")
        return value
    return DEFAULT_EPS
