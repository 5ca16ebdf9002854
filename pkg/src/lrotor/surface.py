"""Rotational surfaces: embeddings, fundamental forms, curvatures, meshes.

Surfaces are parametrized by (r, t) where r is the distance coordinate of
the profile curve and t the rotation parameter.  The profile graph g(r)
comes from quadrature; everything that follows (embedding, numeric
fundamental forms) therefore depends on the momentum only through its
values, never through its derivative -- the closed-form curvature path and
the numeric path stay independent of each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence, TextIO

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import Degenerate, DegenerateMetric, DomainError, OutOfRange
from .momentum import (Momentum, RotationClass, check_causal_sign,
                       class_condition, deriv, evaluate, generatrix_curvature,
                       momentum_from_json, momentum_to_json)
from .quadrature import GraphEvaluator, GraphSample, invert_graph

__all__ = [
    "AmbientPoint", "SurfaceSpec", "ExplicitSurface", "FundamentalForms",
    "CurvatureBundle", "CausalCharacter", "lorentz_inner", "lorentz_cross",
    "parametrize", "embed_grid", "fundamental_forms_numeric",
    "curvatures_closed", "causal_character", "first_form_weight",
    "implicit_residual", "Mesh", "mesh", "write_obj", "curvature_table_csv",
    "surface_to_json", "surface_from_json",
]


class AmbientPoint(NamedTuple):
    """Point of the ambient space with metric dx1^2 + dx2^2 - dx3^2."""

    x1: float
    x2: float
    x3: float


def lorentz_inner(u, v):
    """Indefinite inner product on (..., 3) arrays."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    return u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] - u[..., 2] * v[..., 2]


def lorentz_cross(u, v):
    """Cross product adapted to the metric: <u x v, w> = det(u, v, w)."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    out = np.empty(np.broadcast(u, v).shape, dtype=np.float64)
    out[..., 0] = u[..., 1] * v[..., 2] - u[..., 2] * v[..., 1]
    out[..., 1] = u[..., 2] * v[..., 0] - u[..., 0] * v[..., 2]
    out[..., 2] = -(u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0])
    return out


class CausalCharacter(Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"


@dataclass(frozen=True)
class SurfaceSpec:
    """A rotational surface: class, causal sign, momentum, r range, anchor.

    ``anchor`` is the graph value g(r_interval[0]); it pins the free
    translation along the axis.  The hyperbolic-2 class forces eps = -1.
    """

    cls: RotationClass
    eps: int
    momentum: Momentum
    r_interval: tuple[float, float]
    anchor: float = 0.0

    def __post_init__(self):
        check_causal_sign(self.eps)
        if self.cls is RotationClass.HYPERBOLIC2 and self.eps != -1:
            raise ValueError("hyperbolic-2 surfaces are always timelike")
        object.__setattr__(self, "r_interval",
                           (float(self.r_interval[0]), float(self.r_interval[1])))
        object.__setattr__(self, "anchor", float(self.anchor))
        r0, r1 = self.r_interval
        if not r1 > r0:
            raise DomainError("r_interval must be ascending and non-degenerate")
        if r0 < 0.0:
            raise DomainError("r_interval must lie in r >= 0")
        # probe the class condition strictly inside (endpoints may touch
        # the validity boundary); the evaluator re-checks more densely
        eps = _effective_eps(self)
        for k in range(1, 8):
            r = r0 + (r1 - r0) * k / 8.0
            try:
                ok = class_condition(self.momentum, self.cls, eps, r) > 0.0
            except DomainError:
                ok = False
            if not ok:
                raise DomainError(
                    f"r={r} in r_interval violates the {self.cls.value} "
                    f"validity condition (eps={eps:+d})")

    @property
    def width(self) -> float:
        return self.r_interval[1] - self.r_interval[0]

    def contains(self, r: float, slack: float = 0.0) -> bool:
        r0, r1 = self.r_interval
        return r0 - slack <= r <= r1 + slack


@dataclass(frozen=True)
class ExplicitSurface:
    """A surface given by a direct parametrization instead of a momentum.

    Right cylinders fall outside the momentum framework (their profile
    coordinate is constant), so they are described by an explicit embedding
    with known constant principal curvatures.  ``embed(r_vec, t_vec)``
    returns a (len(r), len(t), 3) array; ``cls_like`` only governs default
    t sampling for grids.
    """

    name: str
    embed: object  # Callable[[ndarray, ndarray], ndarray], identity-hashed
    r_interval: tuple[float, float]
    cls_like: RotationClass
    expected_k_m: object  # Callable[[ndarray], ndarray]
    expected_k_p: object
    causal: CausalCharacter
    implicit: object = None  # Callable[(x1, x2, x3)] -> (residual, scale)

    @property
    def width(self) -> float:
        return self.r_interval[1] - self.r_interval[0]


@lru_cache(maxsize=256)
def _graph_evaluator(spec: SurfaceSpec) -> GraphEvaluator:
    r0, r1 = spec.r_interval
    return GraphEvaluator(spec.momentum, spec.cls, spec.eps, r0, r1,
                          spec.anchor)


def _assemble(cls: RotationClass, g: np.ndarray, r: np.ndarray,
              t: np.ndarray) -> np.ndarray:
    """Embedding from profile data: g, r broadcast against t -> (..., 3)."""
    g = g[..., None]
    r = r[..., None]
    t = t[None, :] if t.ndim == 1 else t
    out_shape = np.broadcast_shapes(g.shape, t.shape) + (3,)
    X = np.empty(out_shape)
    if cls is RotationClass.HYPERBOLIC1:
        X[..., 0] = g
        X[..., 1] = r * np.sinh(t)
        X[..., 2] = r * np.cosh(t)
    elif cls is RotationClass.HYPERBOLIC2:
        X[..., 0] = g
        X[..., 1] = r * np.cosh(t)
        X[..., 2] = r * np.sinh(t)
    elif cls is RotationClass.ELLIPTIC:
        X[..., 0] = r * np.cos(t)
        X[..., 1] = r * np.sin(t)
        X[..., 2] = g
    else:  # parabolic: u = g, v = r in null coordinates
        u, v = g, r
        X[..., 0] = 0.5 * (u + v * (1.0 - t * t))
        X[..., 1] = -t * v
        X[..., 2] = 0.5 * (u - v * (1.0 + t * t))
    return X


def embed_grid(spec: SurfaceSpec, r: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Embedded points over the tensor grid r x t, shape (len(r), len(t), 3)."""
    r = np.atleast_1d(np.asarray(r, dtype=np.float64))
    t = np.atleast_1d(np.asarray(t, dtype=np.float64))
    g = _graph_evaluator(spec).eval_many(r)
    return _assemble(spec.cls, g, r, t)


def parametrize(spec: SurfaceSpec, r: float, t: float) -> AmbientPoint:
    """Point X(r, t) of the surface."""
    if not spec.contains(r):
        raise DomainError(f"r={r} outside {spec.r_interval}")
    X = embed_grid(spec, np.array([r]), np.array([t]))
    return AmbientPoint(*map(float, X[0, 0]))


# ---------------------------------------------------------------------------
# numeric fundamental forms (the oracle path)


@dataclass(frozen=True)
class FundamentalForms:
    """First and second fundamental forms in the (r, t) chart.

    W = EG - F^2 decides the causal type (positive spacelike, negative
    timelike); the unit normal satisfies <nu, nu> = -eps for eps = sign(W).
    """

    E: float
    F: float
    G: float
    e: float
    f: float
    g: float
    W: float
    normal: AmbientPoint


# 4th-order central stencils
_C1 = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0   # f' * h
_C2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0  # f'' * h^2
_OFFS = np.array([-2, -1, 0, 1, 2])

# relative step: balances 4th-order truncation against roundoff in the
# second-derivative stencils (eps/h^2); smaller steps lose accuracy
FD_STEP = 2e-3


def _stencil_grid(embed_parts, assemble, r: np.ndarray, t: np.ndarray,
                  hr: float, ht: float):
    """First and second embedding partials on a tensor grid.

    embed_parts(r_vec) precomputes the r-only payload (the profile graph),
    assemble(payload, r_vec, t_vec) produces points; this keeps each of the
    five r-offsets evaluated once for all five t-offsets.
    """
    X = {}
    for i in _OFFS:
        ri = r + i * hr
        payload = embed_parts(ri)
        for j in _OFFS:
            X[i, j] = assemble(payload, ri, t + j * ht)

    def d_r(j):
        return sum(_C1[k] * X[_OFFS[k], j] for k in range(5)) / hr

    def d_t(i):
        return sum(_C1[k] * X[i, _OFFS[k]] for k in range(5)) / ht

    Xr = d_r(0)
    Xt = d_t(0)
    Xrr = sum(_C2[k] * X[_OFFS[k], 0] for k in range(5)) / hr ** 2
    Xtt = sum(_C2[k] * X[0, _OFFS[k]] for k in range(5)) / ht ** 2
    Xrt = sum(_C1[k] * d_t(_OFFS[k]) for k in range(5)) / hr
    return Xr, Xt, Xrr, Xrt, Xtt


def _forms_arrays(embed_parts, assemble, r: np.ndarray, t: np.ndarray,
                  hr: float, ht: float):
    """E, F, G, e, f, g, W and normals over a tensor grid (vectorized)."""
    Xr, Xt, Xrr, Xrt, Xtt = _stencil_grid(embed_parts, assemble, r, t, hr, ht)
    E = lorentz_inner(Xr, Xr)
    F = lorentz_inner(Xr, Xt)
    G = lorentz_inner(Xt, Xt)
    W = E * G - F * F
    raw = lorentz_cross(Xr, Xt)
    # <nu, nu> = -sign(W); |<raw, raw>| = |W|
    nu = raw / np.sqrt(np.abs(W))[..., None]
    e = lorentz_inner(Xrr, nu)
    f = lorentz_inner(Xrt, nu)
    g = lorentz_inner(Xtt, nu)
    return E, F, G, e, f, g, W, nu


def _momentum_embed_pair(spec: SurfaceSpec):
    ev = _graph_evaluator(spec)
    return ev.eval_many, lambda payload, rv, tv: _assemble(spec.cls, payload,
                                                           rv, tv)


def embed_pair(spec) -> tuple:
    """(parts, assemble) embedding pair for momentum or explicit surfaces."""
    if isinstance(spec, SurfaceSpec):
        return _momentum_embed_pair(spec)
    if isinstance(spec, ExplicitSurface):
        return (lambda rv: rv), (lambda payload, rv, tv: spec.embed(rv, tv))
    raise TypeError(f"not a surface: {spec!r}")


def fundamental_forms_numeric(spec: SurfaceSpec, r: float, t: float,
                              h: Optional[float] = None) -> FundamentalForms:
    """Fundamental forms by 4th-order finite differences of the embedding.

    Independent of the closed-form curvature path: only parametrization
    enters.  Steps default to FD_STEP * interval width in r and FD_STEP
    in t; the stencil must fit inside the r interval.
    """
    hr = h if h is not None else FD_STEP * spec.width
    ht = h if h is not None else FD_STEP
    r0, r1 = spec.r_interval
    if not (r0 <= r - 2 * hr and r + 2 * hr <= r1):
        raise DomainError(f"stencil around r={r} exits {spec.r_interval}")
    parts, asm = _momentum_embed_pair(spec)
    E, F, G, e, f, g, W, nu = _forms_arrays(parts, asm, np.array([r]),
                                            np.array([t]), hr, ht)
    W0 = float(W[0, 0])
    if abs(W0) < 1e-12:
        raise DegenerateMetric(f"|W|={abs(W0):.2e} at (r={r}, t={t})")
    return FundamentalForms(float(E[0, 0]), float(F[0, 0]), float(G[0, 0]),
                            float(e[0, 0]), float(f[0, 0]), float(g[0, 0]),
                            W0, AmbientPoint(*map(float, nu[0, 0])))


# ---------------------------------------------------------------------------
# closed-form curvatures


@dataclass(frozen=True)
class CurvatureBundle:
    """Principal curvatures along meridians/parallels plus derived scalars.

    Satisfies 2H = -eps (k_m + k_p) and K_G = -eps k_m k_p by construction.
    """

    k_m: float
    k_p: float
    H: float
    K_G: float
    kappa: float


def _effective_eps(spec: SurfaceSpec) -> int:
    forced = spec.cls.forced_epsilon
    return forced if forced is not None else spec.eps


def curvatures_closed(spec: SurfaceSpec, r: float) -> CurvatureBundle:
    """Closed-form curvatures: k_m = K'(r), k_p = K(r)/r."""
    if not spec.contains(r):
        raise DomainError(f"r={r} outside {spec.r_interval}")
    eps = _effective_eps(spec)
    k_m = deriv(spec.momentum, r)
    k_p = evaluate(spec.momentum, r) / r
    return CurvatureBundle(
        k_m=k_m, k_p=k_p,
        H=-0.5 * eps * (k_m + k_p),
        K_G=-eps * k_m * k_p,
        kappa=generatrix_curvature(spec.momentum, spec.cls, r),
    )


def first_form_weight(spec: SurfaceSpec, r: float) -> float:
    """Closed-form W = EG - F^2 in the (r, t) chart."""
    eps = _effective_eps(spec)
    cond = class_condition(spec.momentum, spec.cls, eps, r)
    if spec.cls is RotationClass.HYPERBOLIC2:
        return -r * r / cond
    if spec.cls is RotationClass.PARABOLIC:
        return eps * r * r / (cond * cond)
    return eps * r * r / cond


def causal_character(spec: SurfaceSpec, r: float) -> CausalCharacter:
    """Causal type at distance r; refuses within 1e-10 of a type change."""
    if not spec.contains(r):
        raise DomainError(f"r={r} outside {spec.r_interval}")
    eps = _effective_eps(spec)
    cond = class_condition(spec.momentum, spec.cls, eps, r)
    if abs(cond) < 1e-10:
        raise Degenerate(f"within 1e-10 of a causal-type change at r={r}")
    if spec.cls is RotationClass.HYPERBOLIC2:
        return CausalCharacter.TIMELIKE
    return (CausalCharacter.SPACELIKE if eps == 1
            else CausalCharacter.TIMELIKE)


# ---------------------------------------------------------------------------
# implicit equations


def implicit_residual(spec: SurfaceSpec, p: AmbientPoint,
                      graph: Sequence[GraphSample]) -> float:
    """Signed residual LHS - RHS of the class's implicit equation.

    Hyperbolic and elliptic classes invert the sampled graph to express
    the squared distance to the axis; the parabolic class evaluates the
    graph forward at v = x1 - x3.
    """
    x1, x2, x3 = p
    if spec.cls is RotationClass.PARABOLIC:
        v = x1 - x3
        r = np.array([s.r for s in graph])
        g = np.array([s.g for s in graph])
        if r[0] > r[-1]:
            r, g = r[::-1], g[::-1]
        if not (r[0] - 1e-9 <= v <= r[-1] + 1e-9):
            raise OutOfRange(f"v={v} outside sampled profile range")
        u = float(PchipInterpolator(r, g)(np.clip(v, r[0], r[-1])))
        return (x1 * x1 + x2 * x2 - x3 * x3) - v * u
    if spec.cls is RotationClass.HYPERBOLIC1:
        r_inv = invert_graph(graph, x1)
        return (x3 * x3 - x2 * x2) - r_inv * r_inv
    if spec.cls is RotationClass.HYPERBOLIC2:
        r_inv = invert_graph(graph, x1)
        return (x2 * x2 - x3 * x3) - r_inv * r_inv
    r_inv = invert_graph(graph, x3)
    return (x1 * x1 + x2 * x2) - r_inv * r_inv


# ---------------------------------------------------------------------------
# meshes


@dataclass(frozen=True)
class Mesh:
    vertices: list[AmbientPoint]
    faces: list[tuple[int, int, int]]


def default_t_range(cls: RotationClass) -> tuple[float, float]:
    if cls is RotationClass.ELLIPTIC:
        return (0.0, 2.0 * math.pi)
    return (-3.0, 3.0)


def _t_samples(cls: RotationClass, nt: int,
               t_range: Optional[Sequence[float]]) -> np.ndarray:
    if t_range is not None:
        return np.linspace(float(t_range[0]), float(t_range[1]), nt)
    t0, t1 = default_t_range(cls)
    if cls is RotationClass.ELLIPTIC:
        # half-open seam: no duplicated vertices at t = 2*pi
        return t0 + (t1 - t0) * np.arange(nt) / nt
    return np.linspace(t0, t1, nt)


def mesh(spec: SurfaceSpec, nr: int, nt: int,
         t_range: Optional[Sequence[float]] = None) -> Mesh:
    """Structured triangle mesh over r_interval x t_range.

    Vertices appear in row-major (r-major) order; each grid quad splits
    into two consistently oriented triangles.
    """
    if nr < 2 or nt < 2:
        raise ValueError("need nr >= 2 and nt >= 2")
    r0, r1 = spec.r_interval
    rs = np.linspace(r0, r1, nr)
    ts = _t_samples(spec.cls, nt, t_range)
    X = embed_grid(spec, rs, ts)
    if not np.all(np.isfinite(X)):
        raise DomainError("non-finite vertex in mesh")
    vertices = [AmbientPoint(*map(float, X[i, j]))
                for i in range(nr) for j in range(nt)]
    faces = []
    for i in range(nr - 1):
        for j in range(nt - 1):
            v00 = i * nt + j
            v10 = (i + 1) * nt + j
            v11 = (i + 1) * nt + j + 1
            v01 = i * nt + j + 1
            faces.append((v00, v10, v11))
            faces.append((v00, v11, v01))
    return Mesh(vertices, faces)


def write_obj(m: Mesh, stream: TextIO) -> None:
    """Wavefront OBJ: v/f records, 1-based indices, 9 significant digits."""
    for v in m.vertices:
        stream.write(f"v {v.x1:.9g} {v.x2:.9g} {v.x3:.9g}\n")
    for a, b, c in m.faces:
        stream.write(f"f {a + 1} {b + 1} {c + 1}\n")


def curvature_table_csv(spec: SurfaceSpec, nr: int, nt: int,
                        stream: TextIO,
                        t_range: Optional[Sequence[float]] = None) -> None:
    """CSV table r,t,k_m,k_p,H,K_G,W over the mesh grid."""
    rs = np.linspace(spec.r_interval[0], spec.r_interval[1], nr)
    ts = _t_samples(spec.cls, nt, t_range)
    stream.write("r,t,k_m,k_p,H,K_G,W\n")
    for r in rs:
        bundle = curvatures_closed(spec, float(r))
        W = first_form_weight(spec, float(r))
        for t in ts:
            stream.write(f"{r:.17g},{t:.17g},{bundle.k_m:.17g},"
                         f"{bundle.k_p:.17g},{bundle.H:.17g},"
                         f"{bundle.K_G:.17g},{W:.17g}\n")


# ---------------------------------------------------------------------------
# JSON wire format


def surface_to_json(spec: SurfaceSpec) -> dict:
    return {
        "class": spec.cls.value,
        "epsilon": int(spec.eps),
        "momentum": momentum_to_json(spec.momentum),
        "r_interval": [spec.r_interval[0], spec.r_interval[1]],
        "anchor": spec.anchor,
    }


def surface_from_json(data: dict) -> SurfaceSpec:
    try:
        cls = RotationClass(data["class"])
        eps = int(data["epsilon"])
        mom = momentum_from_json(data["momentum"])
        r_interval = (float(data["r_interval"][0]), float(data["r_interval"][1]))
        anchor = float(data.get("anchor", 0.0))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad surface spec: {exc}") from exc
    return SurfaceSpec(cls=cls, eps=eps, momentum=mom,
                       r_interval=r_interval, anchor=anchor)
