"""Curvature relations Phi(k_m, k_p) = 0 and their first-order reductions.

On a rotational surface the principal curvatures are k_m = K'(r) and
k_p = K(r)/r, so any functional relation between them becomes a
first-order ODE for the momentum.  This module carries the catalog
relations (proportional, zero mean curvature, quadratic, cubic), an
embedded Runge-Kutta solver for the reduced ODE, the closed-form solution
families, the Hopf profile curves, and the closed-form graphs of the
quadratic family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import (DomainError, DomainExit, StepFailure,
                     UnsolvableForDerivative)
from .momentum import (Custom, CubicFamily, InverseLinear, Linear, Momentum,
                       Power, QuadraticFamily, RotationClass,
                       check_causal_sign)
from .quadrature import integrate_adaptive
from .surface import SurfaceSpec, curvatures_closed

__all__ = [
    "WeingartenRelation", "LinearProportional", "ZeroMeanCurvature",
    "Quadratic", "Cubic", "CustomRelation", "MERIDIAN_FLAT", "phi",
    "ode_rhs", "solve_ode", "SolvedMomentum", "closed_form_momentum",
    "relation_residual", "hopf_generatrix", "quadratic_graph_closed",
    "parse_relation", "relation_label",
]


@dataclass(frozen=True)
class WeingartenRelation:
    """Base class; subclasses define Phi and the reduced ODE rhs."""


@dataclass(frozen=True)
class LinearProportional(WeingartenRelation):
    """k_m = q k_p, q != 0: the Hopf surfaces (q=1 umbilics, q=-1 H=0)."""

    q: float

    def __post_init__(self):
        if self.q == 0:
            raise ValueError("LinearProportional requires q != 0")


@dataclass(frozen=True)
class ZeroMeanCurvature(WeingartenRelation):
    """k_m = -k_p, i.e. H = 0."""


@dataclass(frozen=True)
class Quadratic(WeingartenRelation):
    """k_m = mu k_p^2, mu != 0."""

    mu: float

    def __post_init__(self):
        if self.mu == 0:
            raise ValueError("Quadratic relation requires mu != 0")


@dataclass(frozen=True)
class Cubic(WeingartenRelation):
    """k_m = mu k_p^3, mu != 0: the quadrics of revolution."""

    mu: float

    def __post_init__(self):
        if self.mu == 0:
            raise ValueError("Cubic relation requires mu != 0")


@dataclass(frozen=True)
class CustomRelation(WeingartenRelation):
    """Caller-supplied Phi, optionally with an explicit rhs F(r, K).

    Phi must be affine in k_m for an rhs to exist; solving a general Phi
    for K' is the caller's job, not ours.
    """

    phi_fn: Callable[[float, float], float]
    rhs: Optional[Callable[[float, float], float]] = None


# k_m = 0: cones and right cylinders (the degenerate mu = 0 cubic case)
MERIDIAN_FLAT = CustomRelation(phi_fn=lambda km, kp: km,
                               rhs=lambda r, k: 0.0)


def phi(rel: WeingartenRelation, k_m: float, k_p: float) -> float:
    """Residual of the relation at a curvature pair."""
    if isinstance(rel, LinearProportional):
        return k_m - rel.q * k_p
    if isinstance(rel, ZeroMeanCurvature):
        return k_m + k_p
    if isinstance(rel, Quadratic):
        return k_m - rel.mu * k_p * k_p
    if isinstance(rel, Cubic):
        return k_m - rel.mu * k_p ** 3
    if isinstance(rel, CustomRelation):
        return rel.phi_fn(k_m, k_p)
    raise TypeError(f"unknown relation {rel!r}")


def ode_rhs(rel: WeingartenRelation, r: float, k: float) -> float:
    """F(r, K) with K' = F encoding Phi(K', K/r) = 0."""
    if isinstance(rel, LinearProportional):
        return rel.q * k / r
    if isinstance(rel, ZeroMeanCurvature):
        return -k / r
    if isinstance(rel, Quadratic):
        return rel.mu * k * k / (r * r)
    if isinstance(rel, Cubic):
        return rel.mu * k ** 3 / r ** 3
    if isinstance(rel, CustomRelation):
        if rel.rhs is None:
            raise UnsolvableForDerivative(
                "custom relation has no explicit rhs; supply F(r, K)")
        return rel.rhs(r, k)
    raise TypeError(f"unknown relation {rel!r}")


def _rhs_total_derivative(rel: WeingartenRelation, r: float, k: float,
                          f: float) -> float:
    """d/dr of F(r, K(r)) along the solution (for dense output)."""
    if isinstance(rel, LinearProportional):
        return rel.q * (f * r - k) / (r * r)
    if isinstance(rel, ZeroMeanCurvature):
        return (k - f * r) / (r * r)
    if isinstance(rel, Quadratic):
        return rel.mu * (2 * k * f * r - 2 * k * k) / r ** 3
    if isinstance(rel, Cubic):
        return rel.mu * (3 * k * k * f * r - 3 * k ** 3) / r ** 4
    # custom: finite differences of the rhs
    hr = 1e-6 * max(1.0, abs(r))
    hk = 1e-6 * max(1.0, abs(k))
    fr = (ode_rhs(rel, r + hr, k) - ode_rhs(rel, r - hr, k)) / (2 * hr)
    fk = (ode_rhs(rel, r, k + hk) - ode_rhs(rel, r, k - hk)) / (2 * hk)
    return fr + fk * f


# ---------------------------------------------------------------------------
# Cash-Karp 5(4) with PI step control and quintic Hermite dense output

_CK_C = (0.0, 1 / 5, 3 / 10, 3 / 5, 1.0, 7 / 8)
_CK_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (3 / 10, -9 / 10, 6 / 5),
    (-11 / 54, 5 / 2, -70 / 27, 35 / 27),
    (1631 / 55296, 175 / 512, 575 / 13824, 44275 / 110592, 253 / 4096),
)
_CK_B5 = (37 / 378, 0.0, 250 / 621, 125 / 594, 0.0, 512 / 1771)
_CK_B4 = (2825 / 27648, 0.0, 18575 / 48384, 13525 / 55296, 277 / 14336, 1 / 4)


class _QuinticHermite:
    """Piecewise two-point quintic Hermite through (y, y', y'') records."""

    def __init__(self, rs, ys, d1s, d2s):
        self.rs = np.asarray(rs)
        self.ys = np.asarray(ys)
        self.d1s = np.asarray(d1s)
        self.d2s = np.asarray(d2s)
        self.ascending = self.rs[0] < self.rs[-1]

    def _segment(self, r):
        rs = self.rs if self.ascending else self.rs[::-1]
        k = int(np.clip(np.searchsorted(rs, r) - 1, 0, len(rs) - 2))
        return k if self.ascending else len(self.rs) - 2 - k

    def __call__(self, r, derivative=False):
        lo, hi = ((self.rs[0], self.rs[-1]) if self.ascending
                  else (self.rs[-1], self.rs[0]))
        if not (lo - 1e-9 <= r <= hi + 1e-9):
            raise DomainError(f"r={r} outside solved range [{lo}, {hi}]")
        k = self._segment(r)
        h = self.rs[k + 1] - self.rs[k]
        u = (r - self.rs[k]) / h
        y0, y1 = self.ys[k], self.ys[k + 1]
        m0, m1 = self.d1s[k] * h, self.d1s[k + 1] * h
        a0, a1 = self.d2s[k] * h * h, self.d2s[k + 1] * h * h
        u2, u3, u4, u5 = u * u, u ** 3, u ** 4, u ** 5
        if not derivative:
            h00 = 1 - 10 * u3 + 15 * u4 - 6 * u5
            h10 = u - 6 * u3 + 8 * u4 - 3 * u5
            h20 = 0.5 * (u2 - 3 * u3 + 3 * u4 - u5)
            h01 = 10 * u3 - 15 * u4 + 6 * u5
            h11 = -4 * u3 + 7 * u4 - 3 * u5
            h21 = 0.5 * (u3 - 2 * u4 + u5)
            return (y0 * h00 + m0 * h10 + a0 * h20
                    + y1 * h01 + m1 * h11 + a1 * h21)
        d00 = -30 * u2 + 60 * u3 - 30 * u4
        d10 = 1 - 18 * u2 + 32 * u3 - 15 * u4
        d20 = 0.5 * (2 * u - 9 * u2 + 12 * u3 - 5 * u4)
        d01 = 30 * u2 - 60 * u3 + 30 * u4
        d11 = -12 * u2 + 28 * u3 - 15 * u4
        d21 = 0.5 * (3 * u2 - 8 * u3 + 5 * u4)
        return (y0 * d00 + m0 * d10 + a0 * d20
                + y1 * d01 + m1 * d11 + a1 * d21) / h


@dataclass(frozen=True)
class SolvedMomentum(Custom):
    """Momentum sampled from an ODE solve; a Custom variant plus metadata.

    ``status`` is "reached" or "domain_exit"; in the latter case
    ``boundary_r`` holds the validity boundary located by bisection and the
    samples stop there.
    """

    rs: tuple[float, ...] = ()
    ks: tuple[float, ...] = ()
    status: str = "reached"
    boundary_r: Optional[float] = None


def _class_condition_value(cls, eps, k):
    if cls is RotationClass.HYPERBOLIC1:
        return k * k - eps
    if cls is RotationClass.HYPERBOLIC2:
        return 1.0 - k * k
    if cls is RotationClass.ELLIPTIC:
        return k * k + eps
    return k


def solve_ode(rel: WeingartenRelation, r0: float, K0: float, r_end: float,
              tol: float = 1e-8, rotation_class: Optional[RotationClass] = None,
              eps: Optional[int] = None) -> SolvedMomentum:
    """Integrate K' = F(r, K) from (r0, K0) toward r_end.

    Embedded Cash-Karp 5(4) pair, PI step-size control with atol = rtol =
    tol and max step (r_end - r0)/16; dense output by quintic Hermite using
    exact second derivatives of the solution.  When a rotation class is
    given, integration stops at the class validity boundary (located to
    1e-10) and the result is flagged instead of raised.
    """
    if r0 <= 0 or r_end <= 0:
        raise ValueError("r0 and r_end must be positive")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if r_end == r0:
        raise ValueError("empty integration range")
    if eps is not None:
        eps = check_causal_sign(eps)
        if rotation_class is not None and rotation_class.forced_epsilon is not None:
            eps = rotation_class.forced_epsilon

    def cond(k):
        if rotation_class is None:
            return 1.0
        return _class_condition_value(rotation_class, eps, k)

    if cond(K0) <= 0.0:
        raise DomainExit(f"initial momentum K0={K0} is outside the "
                         f"{rotation_class.value} validity domain",
                         boundary_r=r0)

    span = r_end - r0
    direction = 1.0 if span > 0 else -1.0
    max_step = abs(span) / 16.0
    h = max_step / 4.0

    r, y = float(r0), float(K0)
    f = ode_rhs(rel, r, y)
    rs, ys, d1s = [r], [y], [f]
    d2s = [_rhs_total_derivative(rel, r, y, f)]
    status, boundary = "reached", None

    err_prev = 1.0
    ks = [0.0] * 6
    safety, k_order = 0.9, 5.0
    min_h = 1e-14 * abs(span)

    while (r_end - r) * direction > 1e-14 * abs(span):
        h = min(h, max_step, abs(r_end - r))
        step = direction * h
        ks[0] = f
        failed = False
        for i in range(1, 6):
            yi = y + step * sum(a * ks[j] for j, a in enumerate(_CK_A[i]))
            try:
                ks[i] = ode_rhs(rel, r + _CK_C[i] * step, yi)
            except (DomainError, ValueError, ZeroDivisionError, OverflowError):
                failed = True
                break
            if not math.isfinite(ks[i]):
                failed = True
                break
        if not failed:
            y5 = y + step * sum(b * ks[i] for i, b in enumerate(_CK_B5))
            y4 = y + step * sum(b * ks[i] for i, b in enumerate(_CK_B4))
            failed = not (math.isfinite(y5) and math.isfinite(y4))
        if failed:
            h *= 0.25
            if h < min_h:
                raise StepFailure(f"step size underflow at r={r}")
            continue
        scale = tol + tol * max(abs(y), abs(y5))
        err = abs(y5 - y4) / scale
        if err > 1.0:
            h *= max(0.2, safety * err ** (-1.0 / k_order))
            if h < min_h:
                raise StepFailure(f"tolerance unreachable at r={r} (err={err:.2e})")
            continue

        r_new, y_new = r + step, y5
        if cond(y_new) <= 0.0:
            # bisect inside the step for the validity boundary
            lo, hi = r, r_new
            ylo = y
            interp_f = lambda rr: _step_interp(rel, r, y, step, ks, rr)
            for _ in range(80):
                if abs(hi - lo) <= 1e-10:
                    break
                mid = 0.5 * (lo + hi)
                if cond(interp_f(mid)) > 0.0:
                    lo = mid
                else:
                    hi = mid
            boundary = lo
            y_b = interp_f(boundary)
            f_b = ode_rhs(rel, boundary, y_b)
            rs.append(boundary)
            ys.append(y_b)
            d1s.append(f_b)
            d2s.append(_rhs_total_derivative(rel, boundary, y_b, f_b))
            status = "domain_exit"
            break

        r, y = r_new, y_new
        f = ode_rhs(rel, r, y)
        rs.append(r)
        ys.append(y)
        d1s.append(f)
        d2s.append(_rhs_total_derivative(rel, r, y, f))
        # PI controller (Gustafsson)
        err = max(err, 1e-10)
        factor = safety * err ** (-0.7 / k_order) * err_prev ** (0.4 / k_order)
        h *= min(5.0, max(0.2, factor))
        err_prev = err

    dense = _QuinticHermite(rs, ys, d1s, d2s)
    return SolvedMomentum(
        evaluator=lambda rr: float(dense(rr)),
        derivative=lambda rr: float(dense(rr, derivative=True)),
        rs=tuple(rs), ks=tuple(ys), status=status, boundary_r=boundary)


def _step_interp(rel, r0, y0, step, ks, r):
    """Low-order in-step interpolation used only for boundary bisection."""
    theta = (r - r0) / step
    # 3rd-order: Hermite on the accepted step using k1 and the b5 blend
    y1 = y0 + step * sum(b * ks[i] for i, b in enumerate(_CK_B5))
    f0 = ks[0]
    f1 = ode_rhs(rel, r0 + step, y1)
    h00 = (1 + 2 * theta) * (1 - theta) ** 2
    h10 = theta * (1 - theta) ** 2
    h01 = theta * theta * (3 - 2 * theta)
    h11 = theta * theta * (theta - 1)
    return (y0 * h00 + step * f0 * h10 + y1 * h01 + step * f1 * h11)


# ---------------------------------------------------------------------------
# closed-form solution families


def closed_form_momentum(rel: WeingartenRelation, c_or_a: float) -> Momentum:
    """The closed-form momentum family solving the relation.

    The free constant is the profile scale a for the proportional
    relations and the integration constant c for the quadratic/cubic ones;
    degenerate parameter values collapse to the simpler variants.
    """
    if isinstance(rel, LinearProportional):
        a = c_or_a
        if rel.q == 1.0:
            return Linear(R=a)
        if rel.q == -1.0:
            return InverseLinear(a=a)
        return Power(q=rel.q, a=a)
    if isinstance(rel, ZeroMeanCurvature):
        return InverseLinear(a=c_or_a)
    if isinstance(rel, Quadratic):
        if c_or_a == 0.0:
            return Linear(R=rel.mu)
        return QuadraticFamily(mu=rel.mu, c=c_or_a)
    if isinstance(rel, Cubic):
        if c_or_a == 0.0:
            return Linear(R=math.sqrt(rel.mu))
        return CubicFamily(mu=rel.mu, c=c_or_a)
    raise TypeError(f"no closed form for {rel!r}")


def relation_residual(rel: WeingartenRelation, spec: SurfaceSpec,
                      r: float) -> float:
    """Phi evaluated on the closed-form curvatures of the surface."""
    bundle = curvatures_closed(spec, r)
    return phi(rel, bundle.k_m, bundle.k_p)


# ---------------------------------------------------------------------------
# Hopf profile curves


_HOPF_FAMILIES = ("I-T", "I-S", "II", "III-T", "III-S", "IV")


def hopf_generatrix(q: float, a: float, family: str, eps: int,
                    t: float) -> tuple[float, float]:
    """Point of the Hopf profile curve gamma_q^a in its plane.

    Families I/III use sinh (timelike, t > 0) or cosh profiles; II the
    Euclidean cos profile with |t| < pi/2; IV the null-coordinate power
    graph (with the logarithmic branch at q = 1/2), where t plays v > 0.
    The sinh families with q in [-1, 0) anchor the integral at t = 1
    because it diverges at 0; curves are defined modulo axis translation.
    """
    if q == 0:
        raise ValueError("q must be nonzero")
    if a <= 0:
        raise ValueError("a must be positive")
    if family not in _HOPF_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    eps = check_causal_sign(eps)
    p = 1.0 / q

    if family == "IV":
        v = t
        if v <= 0:
            raise DomainError("IV family needs v > 0")
        if q == 0.5:
            return (eps * a * math.log(v), v)
        return (eps * a ** (2 * q) * v ** (1 - 2 * q) / (1 - 2 * q), v)

    if family in ("I-T", "III-S"):
        if t <= 0:
            raise DomainError("sinh families need t > 0")
        t_ref = 0.0 if p > -1.0 else 1.0
        fn = lambda v: np.sinh(v) ** p
        integral = integrate_adaptive(fn, t_ref, t, 1e-12)
        graph = (a / q) * integral
        radius = a * math.sinh(t) ** p
        return (graph, radius) if family == "I-T" else (radius, graph)

    if family in ("I-S", "III-T"):
        fn = lambda v: np.cosh(v) ** p
        integral = integrate_adaptive(fn, 0.0, t, 1e-12)
        graph = (a / q) * integral
        radius = a * math.cosh(t) ** p
        return (graph, radius) if family == "I-S" else (radius, graph)

    # II: Euclidean profile
    if not -0.5 * math.pi < t < 0.5 * math.pi:
        raise DomainError("II family needs |t| < pi/2")
    fn = lambda v: np.cos(v) ** p
    integral = integrate_adaptive(fn, 0.0, t, 1e-12)
    return (-(a / q) * integral, a * math.cos(t) ** p)


# ---------------------------------------------------------------------------
# closed-form graphs of the quadratic family


def quadratic_graph_closed(cls: RotationClass, eps: int, mu: float, c: float,
                           r: float) -> float:
    """Closed-form profile graph of the momentum r/(mu + c r) at r.

    Defined wherever the class radicand is positive; values agree with the
    quadrature reconstruction up to an additive constant (compare after
    anchoring at a shared point).  Negative mu reduces by antisymmetry of
    the momentum, negative c by the reflection r -> -r.
    """
    eps = check_causal_sign(eps)
    if cls is RotationClass.HYPERBOLIC2:
        eps = -1
    if mu == 0.0:
        raise ValueError("mu must be nonzero")
    if cls is RotationClass.PARABOLIC:
        if r <= 0:
            raise DomainError("parabolic graph needs v > 0")
        return eps * (c * c * r - mu * mu / r + 2 * c * mu * math.log(r))
    if mu < 0:
        return -quadratic_graph_closed(cls, eps, -mu, -c, r)
    if c < 0:
        return quadratic_graph_closed(cls, eps, mu, -c, -r)
    if cls is RotationClass.HYPERBOLIC1:
        return _quad_graph_lorentzian(eps, mu, c, r)
    if cls is RotationClass.ELLIPTIC:
        return _quad_graph_lorentzian(-eps, mu, c, r)
    return _quad_graph_euclidean(mu, c, r)


def _quad_graph_lorentzian(eps: int, mu: float, c: float, z: float) -> float:
    P = (1 - eps * c * c) * z * z - 2 * eps * c * mu * z - eps * mu * mu
    if P <= 0:
        raise DomainError(f"radicand nonpositive at r={z}")
    sqP = math.sqrt(P)
    if eps == -1:
        d = 1 + c * c
        return sqP / d - c * mu / d ** 1.5 * math.log(
            z + c * mu / d + sqP / math.sqrt(d))
    if c < 1.0:
        d = 1 - c * c
        return sqP / d + c * mu / d ** 1.5 * math.log(
            z + c * mu / (c * c - 1) + sqP / math.sqrt(d))
    if c == 1.0:
        return (mu - z) * math.sqrt(-mu * (2 * z + mu)) / (3 * mu)
    d = c * c - 1
    w = d * z / mu + c
    return -sqP / d + c * mu / d ** 1.5 * math.acos(w)


def _quad_graph_euclidean(mu: float, c: float, y: float) -> float:
    Q = (c * c - 1) * y * y + 2 * c * mu * y + mu * mu
    if Q <= 0:
        raise DomainError(f"radicand nonpositive at r={y}")
    sqQ = math.sqrt(Q)
    if c < 1.0:
        d = 1 - c * c
        w = d * y / mu - c
        return -sqQ / d + c * mu / d ** 1.5 * (math.pi - math.acos(w))
    if c == 1.0:
        return (y - mu) * math.sqrt(mu * (2 * y + mu)) / (3 * mu)
    d = c * c - 1
    return sqQ / d - c * mu / d ** 1.5 * math.log(
        y + c * mu / d + sqQ / math.sqrt(d))


# ---------------------------------------------------------------------------
# relation strings (CLI syntax)


def parse_relation(text: str) -> WeingartenRelation:
    """Parse "linear:q=2", "quadratic:mu=1", "cubic:mu=-1", "H0", "km0"."""
    text = text.strip()
    if text == "H0":
        return ZeroMeanCurvature()
    if text == "km0":
        return MERIDIAN_FLAT
    try:
        kind, _, args = text.partition(":")
        params = dict(kv.split("=") for kv in args.split(",") if kv)
        if kind == "linear":
            return LinearProportional(q=float(params["q"]))
        if kind == "quadratic":
            return Quadratic(mu=float(params["mu"]))
        if kind == "cubic":
            return Cubic(mu=float(params["mu"]))
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad relation syntax {text!r}") from exc
    raise ValueError(f"unknown relation {text!r}")


def relation_label(rel: WeingartenRelation) -> str:
    if isinstance(rel, LinearProportional):
        return f"linear:q={rel.q:g}"
    if isinstance(rel, ZeroMeanCurvature):
        return "H0"
    if isinstance(rel, Quadratic):
        return f"quadratic:mu={rel.mu:g}"
    if isinstance(rel, Cubic):
        return f"cubic:mu={rel.mu:g}"
    if rel is MERIDIAN_FLAT:
        return "km0"
    return "custom"
