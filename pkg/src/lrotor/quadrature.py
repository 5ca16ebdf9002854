"""Profile-curve reconstruction by quadrature.

A momentum K(r) determines the profile curve of a rotational surface as a
graph over the distance coordinate r: the graph derivative is a closed-form
transform of K (per rotation class), so the graph and the arc length are
cumulative integrals.  The integrands generically blow up like
1/sqrt(r - r*) at validity-domain boundaries, so every panel is integrated
with an endpoint sin^2 substitution under Gauss-Legendre: an open rule that
turns those square-root singularities into analytic integrands.  Panels
that still refuse to converge are bisected adaptively; hitting the depth
cap classifies the integral as divergent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, TextIO

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import DomainError, NotMonotone, OutOfRange, SingularIntegral
from .momentum import (Momentum, RotationClass, arc_integrand_array,
                       check_causal_sign, graph_integrand_array)

__all__ = ["GraphSample", "generatrix_graph", "arc_length", "invert_graph",
           "graph_to_csv", "integrate_adaptive", "GraphEvaluator"]

_MAX_DEPTH = 60


@lru_cache(maxsize=8)
def _panel_rule(n: int):
    """Fractions and Jacobian weights of the sin^2-substituted Gauss rule.

    x = a + (b-a) sin^2(theta) with theta Gauss-Legendre on [0, pi/2];
    the node fractions cluster at both endpoints and never touch them.
    """
    nodes, weights = np.polynomial.legendre.leggauss(n)
    theta = 0.25 * math.pi * (nodes + 1.0)
    frac = np.sin(theta) ** 2
    jac = 0.25 * math.pi * weights * np.sin(2.0 * theta)
    return frac, jac


def _panel(fvec, a: float, b: float, n: int) -> float:
    frac, jac = _panel_rule(n)
    x = a + (b - a) * frac
    y = fvec(x)
    return (b - a) * float(jac @ y)


def _panel_values(fvec, a: float, b: float, n: int) -> np.ndarray:
    frac, _ = _panel_rule(n)
    return fvec(a + (b - a) * frac)


def integrate_adaptive(fvec, a: float, b: float, abs_tol: float = 1e-10,
                       _depth: int = 0) -> float:
    """Integrate a vectorized integrand over [a, b] (a > b allowed).

    Convergence is judged by agreement of the 24- and 48-point panels;
    disagreement bisects.  NaN values from the integrand raise DomainError
    when the panel is resolvable, SingularIntegral when bisection has
    exhausted double precision or the depth cap.
    """
    if a == b:
        return 0.0
    if b < a:
        return -integrate_adaptive(fvec, b, a, abs_tol)
    coarse = _panel(fvec, a, b, 24)
    fine = _panel(fvec, a, b, 48)
    bad = not (math.isfinite(coarse) and math.isfinite(fine))
    if not bad and abs(fine - coarse) <= max(abs_tol, 1e-14 * abs(fine)):
        return fine
    mid = 0.5 * (a + b)
    if _depth >= _MAX_DEPTH or mid <= a or mid >= b:
        raise SingularIntegral(
            f"integral over [{a}, {b}] did not converge (depth {_depth})")
    if bad:
        # poles strictly inside a panel are a domain violation, not a
        # boundary singularity: probe the central third
        y = _panel_values(fvec, a + (b - a) / 3.0, b - (b - a) / 3.0, 24)
        if not np.all(np.isfinite(y)) and _depth == 0:
            raise DomainError(
                f"integrand undefined inside [{a}, {b}]")
    left = integrate_adaptive(fvec, a, mid, 0.5 * abs_tol, _depth + 1)
    right = integrate_adaptive(fvec, mid, b, 0.5 * abs_tol, _depth + 1)
    return left + right


# ---------------------------------------------------------------------------
# graph samples


@dataclass(frozen=True)
class GraphSample:
    """One reconstructed point: distance r, graph value g, arc length s."""

    r: float
    g: float
    s: float


def _chebyshev_points(r0: float, r1: float, n: int) -> np.ndarray:
    """n Chebyshev-Lobatto points from r0 to r1 (monotone, ends included)."""
    i = np.arange(n)
    return 0.5 * (r0 + r1) - 0.5 * (r1 - r0) * np.cos(math.pi * i / (n - 1))


def _check_interval(spec: Momentum, cls: RotationClass, eps: int,
                    r0: float, r1: float) -> None:
    """Interval must sit in the closure of one validity interval."""
    lo, hi = min(r0, r1), max(r0, r1)
    for b in spec._breakpoints():
        if lo < b < hi:
            raise DomainError(
                f"[{r0}, {r1}] crosses an algebraic boundary at r={b}")
    probes = _chebyshev_points(lo, hi, 33)[1:-1]
    vals = graph_integrand_array(spec, cls, eps, probes)
    if not np.all(np.isfinite(vals)):
        raise DomainError(
            f"[{r0}, {r1}] exits the {cls.value} validity domain")


def generatrix_graph(spec: Momentum, cls: RotationClass, eps: int,
                     interval: Sequence[float], n: int,
                     anchor: float = 0.0,
                     abs_tol: float = 1e-10) -> list[GraphSample]:
    """Reconstruct the profile graph g(r) over an interval.

    Samples are Chebyshev-spaced (dense near the ends, where the integrand
    is singular); g(r0) = anchor fixes the translation freedom along the
    axis, and s is the arc length from r0.  The interval may be descending;
    it must stay inside the closure of one validity interval.
    """
    eps = check_causal_sign(eps)
    if cls.forced_epsilon is not None:
        eps = cls.forced_epsilon
    r0, r1 = float(interval[0]), float(interval[1])
    if n < 2:
        raise ValueError("need at least two samples")
    if r0 == r1:
        raise DomainError("degenerate interval")
    _check_interval(spec, cls, eps, r0, r1)

    rs = _chebyshev_points(r0, r1, n)
    f_graph = lambda x: graph_integrand_array(spec, cls, eps, x)
    f_arc = lambda x: arc_integrand_array(spec, cls, eps, x)

    samples = [GraphSample(float(rs[0]), float(anchor), 0.0)]
    g = float(anchor)
    s = 0.0
    for a, b in zip(rs[:-1], rs[1:]):
        g += integrate_adaptive(f_graph, float(a), float(b), abs_tol)
        s += integrate_adaptive(f_arc, float(a), float(b), abs_tol)
        samples.append(GraphSample(float(b), g, s))
    return samples


def arc_length(spec: Momentum, cls: RotationClass, eps: int,
               r0: float, r1: float, abs_tol: float = 1e-10) -> float:
    """Arc length of the profile curve between distances r0 and r1."""
    eps = check_causal_sign(eps)
    if cls.forced_epsilon is not None:
        eps = cls.forced_epsilon
    if r0 == r1:
        return 0.0
    _check_interval(spec, cls, eps, r0, r1)
    f_arc = lambda x: arc_integrand_array(spec, cls, eps, x)
    return integrate_adaptive(f_arc, float(r0), float(r1), abs_tol)


# ---------------------------------------------------------------------------
# inversion


def invert_graph(samples: Sequence[GraphSample], g_query: float) -> float:
    """Solve g(r) = g_query on a monotone sampled graph.

    Monotone cubic interpolation through the samples, then Newton steps
    with a bisection safeguard; the residual in g is driven to 1e-12 of
    the sampled span (well under the 1e-8 contract).
    """
    if len(samples) < 2:
        raise NotMonotone("need at least two samples to invert")
    r = np.array([p.r for p in samples])
    g = np.array([p.g for p in samples])
    if r[0] > r[-1]:
        r, g = r[::-1], g[::-1]
    dg = np.diff(g)
    if not (np.all(dg > 0.0) or np.all(dg < 0.0)):
        raise NotMonotone("graph values are not strictly monotone")
    lo_g, hi_g = (g[0], g[-1]) if g[0] < g[-1] else (g[-1], g[0])
    span = hi_g - lo_g
    if not (lo_g - 1e-12 * span <= g_query <= hi_g + 1e-12 * span):
        raise OutOfRange(
            f"g={g_query} outside sampled span [{lo_g}, {hi_g}]")
    g_query = min(max(g_query, lo_g), hi_g)

    interp = PchipInterpolator(r, g)
    dinterp = interp.derivative()

    # bracket from the sample grid
    gi = g if g[0] < g[-1] else -g
    q = g_query if g[0] < g[-1] else -g_query
    k = int(np.clip(np.searchsorted(gi, q) - 1, 0, len(r) - 2))
    lo, hi = r[k], r[k + 1]
    x = lo + (hi - lo) * ((q - gi[k]) / (gi[k + 1] - gi[k]))

    tol = 1e-12 * max(1.0, span)
    for _ in range(100):
        resid = float(interp(x)) - g_query
        if abs(resid) <= tol:
            break
        slope = float(dinterp(x))
        step_ok = slope != 0.0
        if step_ok:
            x_new = x - resid / slope
            step_ok = lo <= x_new <= hi
        if not step_ok:
            x_new = 0.5 * (lo + hi)
        if (float(interp(lo)) - g_query) * resid > 0.0:
            lo = x
        else:
            hi = x
        x = x_new
    return float(x)


def graph_to_csv(samples: Sequence[GraphSample], stream: TextIO) -> None:
    """Write samples as CSV with 17 significant digits."""
    stream.write("r,g,s\n")
    for p in samples:
        stream.write(f"{p.r:.17g},{p.g:.17g},{p.s:.17g}\n")


# ---------------------------------------------------------------------------
# fixed-rule evaluator for surface parametrization


class GraphEvaluator:
    """Evaluate g(r) anywhere in a fixed interval, smoothly and fast.

    Cumulative values are precomputed at Chebyshev base nodes with the same
    fixed 48-point panel rule used for point evaluation, so the piecewise
    definition is seamless to machine precision: finite differences across
    segment boundaries see no jumps.  One adaptive integral over the whole
    interval guards against divergent (parabolic K -> 0) endpoints.
    """

    def __init__(self, spec: Momentum, cls: RotationClass, eps: int,
                 r0: float, r1: float, anchor: float = 0.0,
                 n_base: int = 64, n_gauss: int = 48):
        if not r1 > r0:
            raise DomainError("evaluator interval must be ascending")
        eps = check_causal_sign(eps)
        if cls.forced_epsilon is not None:
            eps = cls.forced_epsilon
        _check_interval(spec, cls, eps, r0, r1)
        self.r0, self.r1 = float(r0), float(r1)
        self.n_gauss = n_gauss
        self._f = lambda x: graph_integrand_array(spec, cls, eps, x)
        self.nodes = _chebyshev_points(self.r0, self.r1, n_base)
        cum = np.empty(n_base)
        cum[0] = anchor
        for k in range(n_base - 1):
            cum[k + 1] = cum[k] + _panel(self._f, self.nodes[k],
                                         self.nodes[k + 1], n_gauss)
        self.cum = cum
        if not np.all(np.isfinite(cum)):
            raise DomainError("profile graph not finite on the interval")
        total = integrate_adaptive(self._f, self.r0, self.r1, 1e-10)
        drift = abs((cum[-1] - cum[0]) - total)
        if drift > 1e-8 * (1.0 + abs(total)):
            raise SingularIntegral(
                "fixed-rule reconstruction disagrees with adaptive "
                f"integration by {drift:.3e}")

    def __call__(self, r: float) -> float:
        return float(self.eval_many(np.array([r]))[0])

    def eval_many(self, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=np.float64)
        flat = r.ravel()
        if flat.size and (flat.min() < self.r0 - 1e-12 or
                          flat.max() > self.r1 + 1e-12):
            raise DomainError("evaluation outside the reconstructed interval")
        seg = np.clip(np.searchsorted(self.nodes, flat, side="right") - 1,
                      0, len(self.nodes) - 2)
        frac, jac = _panel_rule(self.n_gauss)
        a = self.nodes[seg]
        span = flat - a
        xs = a[:, None] + span[:, None] * frac[None, :]
        ys = self._f(xs.ravel()).reshape(xs.shape)
        out = self.cum[seg] + span * (ys @ jac)
        return out.reshape(r.shape)
