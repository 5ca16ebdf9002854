"""Pure-NumPy kernels: the fallback twin of the compiled extension.

Semantics are shared with ``_core.pyx``: momentum variants are encoded as
(code, p1, p2), rotation classes as 0=hyperbolic1, 1=hyperbolic2,
2=elliptic, 3=parabolic.  Points outside the algebraic domain evaluate to
NaN; callers decide whether that is an error.
"""

from __future__ import annotations

import numpy as np

BACKEND = "fallback"

# momentum variant codes
ZERO, CONSTANT, LINEAR, INVERSE_LINEAR, POWER, QUADRATIC, CUBIC = range(7)

# rotation class codes
H1, H2, ELL, PAR = range(4)


def momentum_values(code, p1, p2, r):
    r = np.asarray(r, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if code == ZERO:
            return np.zeros_like(r)
        if code == CONSTANT:
            return np.full_like(r, p1)
        if code == LINEAR:
            return r / p1
        if code == INVERSE_LINEAR:
            return np.where(r != 0.0, p1 / r, np.nan)
        if code == POWER:
            return np.where(r > 0.0, (r / p2) ** p1, np.nan)
        if code == QUADRATIC:
            den = p1 + p2 * r
            return np.where(den != 0.0, r / den, np.nan)
        if code == CUBIC:
            rad = p1 + p2 * r * r
            return np.where(rad > 0.0, r / np.sqrt(np.abs(rad)), np.nan)
    raise ValueError(f"unknown momentum code {code}")


def momentum_derivs(code, p1, p2, r):
    r = np.asarray(r, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if code in (ZERO, CONSTANT):
            return np.zeros_like(r)
        if code == LINEAR:
            return np.full_like(r, 1.0 / p1)
        if code == INVERSE_LINEAR:
            return np.where(r != 0.0, -p1 / (r * r), np.nan)
        if code == POWER:
            return np.where(r > 0.0, (p1 / p2) * (r / p2) ** (p1 - 1.0), np.nan)
        if code == QUADRATIC:
            den = p1 + p2 * r
            return np.where(den != 0.0, p1 / (den * den), np.nan)
        if code == CUBIC:
            rad = p1 + p2 * r * r
            good = rad > 0.0
            rad = np.abs(rad)
            return np.where(good, p1 / (rad * np.sqrt(rad)), np.nan)
    raise ValueError(f"unknown momentum code {code}")


def graph_transform(cls, eps, k):
    """Map momentum values to the profile-graph integrand of the class."""
    k = np.asarray(k, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if cls == H1:
            rad = k * k - eps
            return np.where(rad > 0.0, k / np.sqrt(np.abs(rad)), np.nan)
        if cls == H2:
            rad = 1.0 - k * k
            return np.where(rad > 0.0, k / np.sqrt(np.abs(rad)), np.nan)
        if cls == ELL:
            rad = k * k + eps
            return np.where(rad > 0.0, k / np.sqrt(np.abs(rad)), np.nan)
        if cls == PAR:
            return np.where(k > 0.0, eps / (k * k), np.nan)
    raise ValueError(f"unknown class code {cls}")


def arc_transform(cls, eps, k):
    """Map momentum values to the arc-length integrand of the class."""
    k = np.asarray(k, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if cls == H1:
            rad = k * k - eps
        elif cls == H2:
            rad = 1.0 - k * k
        elif cls == ELL:
            rad = k * k + eps
        elif cls == PAR:
            return np.where(k > 0.0, 1.0 / k, np.nan)
        else:
            raise ValueError(f"unknown class code {cls}")
        return np.where(rad > 0.0, 1.0 / np.sqrt(np.abs(rad)), np.nan)


def graph_integrand(cls, eps, code, p1, p2, r):
    return graph_transform(cls, eps, momentum_values(code, p1, p2, r))


def arc_integrand(cls, eps, code, p1, p2, r):
    return arc_transform(cls, eps, momentum_values(code, p1, p2, r))
