"""Linear momenta of profile curves and their validity domains.

The momentum of a planar profile curve is the axis component of its unit
tangent, written as a function ``K(r)`` of the (pseudo)distance ``r`` to
the rotation axis.  It determines the curve, and hence the rotational
surface swept by it, up to translation along the axis.  This module holds
the catalog of closed-form momenta, their exact derivatives, the algebraic
and per-class validity domains, the signed curvature of the profile curve,
and the angle of its moving frame.

Rotation classes
----------------
``HYPERBOLIC1``   spacelike axis (x1), Lorentzian profile curve, r = z
``HYPERBOLIC2``   spacelike axis (x1), Euclidean profile curve, r = y
``ELLIPTIC``      timelike axis (x3), Lorentzian profile curve, r = x
``PARABOLIC``     lightlike axis (u = x1+x3), null coordinates, r = v = x1-x3

A surface of class HYPERBOLIC2 is always timelike; the other classes carry
the causal sign ``eps`` of their profile curve (+1 spacelike, -1 timelike).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .errors import DomainError, EmptyDomain

__all__ = [
    "RotationClass", "Momentum", "Zero", "Constant", "Linear",
    "InverseLinear", "Power", "QuadraticFamily", "CubicFamily", "Custom",
    "check_causal_sign", "evaluate", "deriv", "validity_domain",
    "generatrix_curvature", "frame_angle", "class_condition",
    "momentum_to_json", "momentum_from_json",
]


def check_causal_sign(eps) -> int:
    """Validate and return a causal sign (+1 spacelike, -1 timelike)."""
    if eps not in (1, -1):
        raise ValueError(f"causal sign must be +1 or -1, got {eps!r}")
    return int(eps)


class RotationClass(Enum):
    """The three rotation types of the ambient space, four surface classes."""

    HYPERBOLIC1 = "hyperbolic1"
    HYPERBOLIC2 = "hyperbolic2"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"

    @property
    def kernel_code(self) -> int:
        return _CLASS_CODE[self]

    @property
    def r_symbol(self) -> str:
        """Name of the distance coordinate in the profile plane."""
        return {"hyperbolic1": "z", "hyperbolic2": "y",
                "elliptic": "x", "parabolic": "v"}[self.value]

    @property
    def axis(self) -> str:
        return {
            "hyperbolic1": "x1-axis (spacelike), Lorentzian profile curve",
            "hyperbolic2": "x1-axis (spacelike), Euclidean profile curve",
            "elliptic": "x3-axis (timelike)",
            "parabolic": "u-axis (lightlike), null coordinates u=x1+x3, v=x1-x3",
        }[self.value]

    @property
    def forced_epsilon(self) -> Optional[int]:
        """Causal sign imposed by the class itself (HYPERBOLIC2 only)."""
        return -1 if self is RotationClass.HYPERBOLIC2 else None

    @property
    def curvature_sign(self) -> int:
        """Sign s in kappa = s * K'(r) for this class."""
        return {"hyperbolic1": 1, "hyperbolic2": -1,
                "elliptic": 1, "parabolic": -1}[self.value]


_CLASS_CODE = {
    RotationClass.HYPERBOLIC1: _kernels.H1,
    RotationClass.HYPERBOLIC2: _kernels.H2,
    RotationClass.ELLIPTIC: _kernels.ELL,
    RotationClass.PARABOLIC: _kernels.PAR,
}


@dataclass(frozen=True)
class Momentum:
    """Base class of all momentum variants.  Instances are immutable."""

    _kernel_code = None  # analytic variants override with an int

    def __call__(self, r: float) -> float:
        return evaluate(self, r)

    def _params(self) -> tuple[float, float]:
        return (0.0, 0.0)

    def _breakpoints(self) -> tuple[float, ...]:
        """Positive r values where the algebraic domain is interrupted."""
        return ()

    def _in_domain(self, r: float) -> bool:
        return True


@dataclass(frozen=True)
class Zero(Momentum):
    """K = 0: the profile curve is an axis-orthogonal geodesic (planes)."""

    _kernel_code = _kernels.ZERO


@dataclass(frozen=True)
class Constant(Momentum):
    """K = k0: straight profile lines through the origin (cones)."""

    k0: float
    _kernel_code = _kernels.CONSTANT

    def _params(self):
        return (float(self.k0), 0.0)


@dataclass(frozen=True)
class Linear(Momentum):
    """K = r/R, R > 0: the non-flat umbilical surfaces of radius R."""

    R: float
    _kernel_code = _kernels.LINEAR

    def __post_init__(self):
        if not self.R > 0:
            raise ValueError("Linear momentum requires R > 0")

    def _params(self):
        return (float(self.R), 0.0)


@dataclass(frozen=True)
class InverseLinear(Momentum):
    """K = a/r, a >= 0: the zero-mean-curvature surfaces."""

    a: float
    _kernel_code = _kernels.INVERSE_LINEAR

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("InverseLinear momentum requires a >= 0")

    def _params(self):
        return (float(self.a), 0.0)

    def _in_domain(self, r):
        return r != 0.0


@dataclass(frozen=True)
class Power(Momentum):
    """K = (r/a)^q with q != 0, a > 0: the Hopf family k_m = q k_p."""

    q: float
    a: float
    _kernel_code = _kernels.POWER

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("Power momentum requires q != 0")
        if not self.a > 0:
            raise ValueError("Power momentum requires a > 0")

    def _params(self):
        return (float(self.q), float(self.a))

    def _in_domain(self, r):
        return r > 0.0


@dataclass(frozen=True)
class QuadraticFamily(Momentum):
    """K = r/(mu + c r), mu != 0: solutions of k_m = mu k_p^2."""

    mu: float
    c: float
    _kernel_code = _kernels.QUADRATIC

    def __post_init__(self):
        if self.mu == 0:
            raise ValueError("QuadraticFamily requires mu != 0")

    def _params(self):
        return (float(self.mu), float(self.c))

    def _breakpoints(self):
        if self.c != 0.0:
            pole = -self.mu / self.c
            if pole > 0.0:
                return (pole,)
        return ()

    def _in_domain(self, r):
        return self.mu + self.c * r != 0.0


@dataclass(frozen=True)
class CubicFamily(Momentum):
    """K = r/sqrt(mu + c r^2), mu != 0: solutions of k_m = mu k_p^3.

    These are the momenta of the quadric surfaces of revolution.
    """

    mu: float
    c: float
    _kernel_code = _kernels.CUBIC

    def __post_init__(self):
        if self.mu == 0:
            raise ValueError("CubicFamily requires mu != 0")

    def _params(self):
        return (float(self.mu), float(self.c))

    def _breakpoints(self):
        # mu + c r^2 changes sign at sqrt(-mu/c) when mu and c differ in sign
        if self.mu * self.c < 0.0:
            return (math.sqrt(-self.mu / self.c),)
        return ()

    def _in_domain(self, r):
        return self.mu + self.c * r * r > 0.0


@dataclass(frozen=True)
class Custom(Momentum):
    """Momentum sampled from a caller-supplied evaluator.

    ``derivative`` is optional; without it, derivatives come from a
    4th-order central difference with step max(1e-5, 1e-7*r).  Evaluators
    must be re-entrant (everything here may be called concurrently) and are
    not JSON-serializable.
    """

    evaluator: Callable[[float], float]
    derivative: Optional[Callable[[float], float]] = None

    def _in_domain(self, r):
        try:
            return math.isfinite(self.evaluator(r))
        except (ValueError, ZeroDivisionError, OverflowError):
            return False


# ---------------------------------------------------------------------------
# evaluation


def evaluate(spec: Momentum, r: float) -> float:
    """Momentum value K(r); exact for catalog variants.

    Raises DomainError outside the variant's algebraic domain.  Negative r
    is accepted where the formulas remain defined (reflected profile
    branches); per-class validity is a separate check.
    """
    if isinstance(spec, Custom):
        try:
            value = float(spec.evaluator(r))
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise DomainError(f"custom momentum undefined at r={r}") from exc
        if not math.isfinite(value):
            raise DomainError(f"custom momentum not finite at r={r}")
        return value
    p1, p2 = spec._params()
    value = float(_kernels.momentum_values(spec._kernel_code, p1, p2,
                                           np.array([float(r)]))[0])
    if not math.isfinite(value):
        raise DomainError(f"{type(spec).__name__} momentum undefined at r={r}")
    return value


def deriv(spec: Momentum, r: float) -> float:
    """Derivative K'(r): analytic for catalog variants.

    For Custom momenta without a derivative evaluator a 4th-order central
    difference is used; its step balances truncation against cancellation
    at desk scale.
    """
    if isinstance(spec, Custom):
        if spec.derivative is not None:
            value = float(spec.derivative(r))
            if not math.isfinite(value):
                raise DomainError(f"custom derivative not finite at r={r}")
            return value
        h = max(1e-5, 1e-7 * abs(r))
        f = spec.evaluator
        try:
            value = (f(r - 2 * h) - 8 * f(r - h)
                     + 8 * f(r + h) - f(r + 2 * h)) / (12 * h)
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise DomainError(f"custom momentum stencil failed at r={r}") from exc
        if not math.isfinite(value):
            raise DomainError(f"custom derivative not finite at r={r}")
        return float(value)
    p1, p2 = spec._params()
    value = float(_kernels.momentum_derivs(spec._kernel_code, p1, p2,
                                           np.array([float(r)]))[0])
    if not math.isfinite(value):
        raise DomainError(f"{type(spec).__name__} derivative undefined at r={r}")
    return value


def evaluate_array(spec: Momentum, r: np.ndarray) -> np.ndarray:
    """Vectorized K over an array; NaN marks out-of-domain points."""
    r = np.asarray(r, dtype=np.float64)
    if isinstance(spec, Custom):
        out = np.empty_like(r)
        flat = out.ravel()
        for i, ri in enumerate(r.ravel()):
            try:
                flat[i] = spec.evaluator(float(ri))
            except (ValueError, ZeroDivisionError, OverflowError):
                flat[i] = np.nan
        return out
    p1, p2 = spec._params()
    return _kernels.momentum_values(spec._kernel_code, p1, p2, r)


def graph_integrand_array(spec: Momentum, cls: RotationClass, eps: int,
                          r: np.ndarray) -> np.ndarray:
    """Profile-graph integrand of the class, vectorized (NaN = invalid)."""
    r = np.asarray(r, dtype=np.float64)
    if isinstance(spec, Custom):
        return _kernels.graph_transform(cls.kernel_code, float(eps),
                                        evaluate_array(spec, r))
    p1, p2 = spec._params()
    return _kernels.graph_integrand(cls.kernel_code, float(eps),
                                    spec._kernel_code, p1, p2, r)


def arc_integrand_array(spec: Momentum, cls: RotationClass, eps: int,
                        r: np.ndarray) -> np.ndarray:
    """Arc-length integrand of the class, vectorized (NaN = invalid)."""
    r = np.asarray(r, dtype=np.float64)
    if isinstance(spec, Custom):
        return _kernels.arc_transform(cls.kernel_code, float(eps),
                                      evaluate_array(spec, r))
    p1, p2 = spec._params()
    return _kernels.arc_integrand(cls.kernel_code, float(eps),
                                  spec._kernel_code, p1, p2, r)


# ---------------------------------------------------------------------------
# validity domains


def class_condition(spec: Momentum, cls: RotationClass, eps: int,
                    r: float) -> float:
    """The quantity whose positivity defines the class validity domain.

    K^2 - eps, 1 - K^2, K^2 + eps and K for the hyperbolic-1, hyperbolic-2,
    elliptic and parabolic classes respectively.
    """
    k = evaluate(spec, r)
    if cls is RotationClass.HYPERBOLIC1:
        return k * k - eps
    if cls is RotationClass.HYPERBOLIC2:
        return 1.0 - k * k
    if cls is RotationClass.ELLIPTIC:
        return k * k + eps
    return k


def _condition_or_nan(spec, cls, eps, r):
    if r <= 0.0 or not spec._in_domain(r):
        return math.nan
    try:
        return class_condition(spec, cls, eps, r)
    except DomainError:
        return math.nan


_BISECT_TOL = 1e-12


def _bisect_boundary(f, inside, outside):
    """Locate the domain boundary between a point where the condition holds
    (inside) and one where it fails or is NaN (outside), to 1e-12."""
    for _ in range(200):
        if abs(outside - inside) <= _BISECT_TOL:
            break
        mid = 0.5 * (inside + outside)
        v = f(mid)
        if math.isfinite(v) and v > 0.0:
            inside = mid
        else:
            outside = mid
    return 0.5 * (inside + outside)


def validity_domain(spec: Momentum, cls: RotationClass, eps: int,
                    r_max: float = None) -> list[tuple[float, float]]:
    """Maximal open intervals of r > 0 on which the class condition holds.

    Interval endpoints are located by bisection to 1e-12; an unbounded
    right end is reported as math.inf.  Raises EmptyDomain when nothing
    survives.  ``r_max`` bounds the numeric search window (default scales
    with the variant's parameters).
    """
    eps = check_causal_sign(eps)
    if cls.forced_epsilon is not None:
        eps = cls.forced_epsilon

    if r_max is None:
        scale = max([1.0] + [abs(p) for p in spec._params() if p != 0.0])
        r_max = 1e4 * scale

    breaks = sorted(b for b in spec._breakpoints() if 0.0 < b < r_max)
    edges = [0.0] + breaks + [r_max]

    cond = lambda r: _condition_or_nan(spec, cls, eps, r)
    intervals: list[tuple[float, float]] = []

    for lo_edge, hi_edge in zip(edges[:-1], edges[1:]):
        width = hi_edge - lo_edge
        if width <= 0.0:
            continue
        # dense probe: uniform plus geometric clustering at both edges
        probes = np.concatenate([
            lo_edge + width * np.linspace(1e-9, 1.0 - 1e-9, 1601),
            lo_edge + width * np.geomspace(1e-12, 0.5, 120),
            hi_edge - width * np.geomspace(1e-12, 0.5, 120),
        ])
        probes = np.unique(probes)
        vals = np.array([cond(r) for r in probes])
        pos = np.nan_to_num(vals, nan=-1.0) > 0.0
        if not pos.any():
            continue
        idx = 0
        n = len(probes)
        while idx < n:
            if not pos[idx]:
                idx += 1
                continue
            j = idx
            while j + 1 < n and pos[j + 1]:
                j += 1
            lo = (lo_edge if idx == 0
                  else _bisect_boundary(cond, probes[idx], probes[idx - 1]))
            if j == n - 1:
                if hi_edge == r_max and cond(min(r_max * 2, r_max + 1.0)) > 0.0:
                    hi = math.inf
                else:
                    hi = hi_edge
            else:
                hi = _bisect_boundary(cond, probes[j], probes[j + 1])
            if hi > lo:
                intervals.append((lo, hi))
            idx = j + 1

    # merge pieces that only touched at a probe artifact
    merged: list[tuple[float, float]] = []
    for lo, hi in sorted(intervals):
        if merged and lo - merged[-1][1] <= _BISECT_TOL:
            merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    if not merged:
        raise EmptyDomain(
            f"{type(spec).__name__} admits no {cls.value} surface "
            f"with eps={eps:+d}")
    return merged


def in_validity_domain(spec: Momentum, cls: RotationClass, eps: int,
                       r: float) -> bool:
    """Pointwise validity check (cheaper than building the interval list)."""
    v = _condition_or_nan(spec, cls, eps, r)
    return math.isfinite(v) and v > 0.0


# ---------------------------------------------------------------------------
# profile-curve geometry


def generatrix_curvature(spec: Momentum, cls: RotationClass, r: float) -> float:
    """Signed curvature kappa of the profile curve at distance r.

    kappa equals +K' for the hyperbolic-1 and elliptic classes and -K' for
    hyperbolic-2 and parabolic (the momentum differentials flip sign with
    the orientation of the distance coordinate in those planes).
    """
    return cls.curvature_sign * deriv(spec, r)


def frame_angle(spec: Momentum, cls: RotationClass, eps: int, r: float) -> float:
    """Angle of the unit tangent of the profile curve against its axes.

    Euclidean profile (hyperbolic-2): K = cos(theta).  Lorentzian profiles:
    K = cosh or sinh of a hyperbolic angle depending on (class, eps).  The
    parabolic null frame gives K = exp(-angle).  Raises DomainError when
    the required inverse does not apply to K(r).
    """
    eps = check_causal_sign(eps)
    if cls.forced_epsilon is not None:
        eps = cls.forced_epsilon
    k = evaluate(spec, r)
    if cls is RotationClass.HYPERBOLIC2:
        if abs(k) > 1.0:
            raise DomainError(f"|K|={abs(k)} > 1: no Euclidean angle")
        return math.acos(k)
    if cls is RotationClass.HYPERBOLIC1:
        if eps == 1:
            if k < 1.0:
                raise DomainError(f"K={k} < 1: no cosh angle")
            return math.acosh(k)
        return math.asinh(k)
    if cls is RotationClass.ELLIPTIC:
        if eps == 1:
            return math.asinh(k)
        if k < 1.0:
            raise DomainError(f"K={k} < 1: no cosh angle")
        return math.acosh(k)
    # parabolic: K = exp(-angle) with K > 0
    if k <= 0.0:
        raise DomainError(f"K={k} <= 0: no exponential angle")
    return -math.log(k)


# ---------------------------------------------------------------------------
# JSON wire format

_TAGS = {
    Zero: "zero",
    Constant: "constant",
    Linear: "linear",
    InverseLinear: "inverse_linear",
    Power: "power",
    QuadraticFamily: "quadratic_family",
    CubicFamily: "cubic_family",
}
_FIELDS = {
    "zero": (),
    "constant": ("k0",),
    "linear": ("R",),
    "inverse_linear": ("a",),
    "power": ("q", "a"),
    "quadratic_family": ("mu", "c"),
    "cubic_family": ("mu", "c"),
}
_FROM_TAG = {tag: klass for klass, tag in _TAGS.items()}


def momentum_to_json(spec: Momentum) -> dict:
    """Serialize a catalog momentum. Custom momenta are runtime-only."""
    if isinstance(spec, Custom):
        raise TypeError("Custom momenta are not JSON-serializable")
    tag = _TAGS[type(spec)]
    out = {"variant": tag}
    for field in _FIELDS[tag]:
        out[field] = float(getattr(spec, field))
    return out


def momentum_from_json(data: dict) -> Momentum:
    try:
        tag = data["variant"]
        klass = _FROM_TAG[tag]
    except KeyError as exc:
        raise ValueError(f"unknown momentum variant in {data!r}") from exc
    kwargs = {field: float(data[field]) for field in _FIELDS[tag]}
    return klass(**kwargs)
