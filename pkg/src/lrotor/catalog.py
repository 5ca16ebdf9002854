"""Registry of named surfaces: every closed-form family in one place.

Groups: the axis-orthogonal planes, the three right cylinders (explicit
parametrizations; their profile coordinate is constant so they fall
outside the momentum framework), the rotational cones (constant momentum),
the non-flat umbilics (K = r/R), the zero-mean-curvature catenoids and the
two Enneper-type parabolic surfaces (K = a/r), the Hopf family
(K = (r/a)^q) over every admissible class and causal sign, the branches of
the quadratic family (K = r/(mu + c r)), and the sixteen quadrics of
revolution (K = r/sqrt(mu + c r^2)).

Intervals are chosen inside each momentum's validity domain; anchors pin
the axis translation so that the implicit equations hold exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .momentum import (Constant, InverseLinear, Linear, Power,
                       QuadraticFamily, RotationClass, Zero,
                       validity_domain)
from .quadrics import (FAMILIES, QuadricSpec, momentum_of,
                       profile_graph_exact, quadric_implicit_parts,
                       weingarten_coefficient)
from .surface import CausalCharacter, ExplicitSurface, SurfaceSpec
from .weingarten import (Cubic, LinearProportional, MERIDIAN_FLAT, Quadratic,
                         WeingartenRelation, ZeroMeanCurvature)

__all__ = ["CatalogEntry", "build_catalog", "get_entry", "catalog_keys",
           "quadric_piece"]

H1 = RotationClass.HYPERBOLIC1
H2 = RotationClass.HYPERBOLIC2
ELL = RotationClass.ELLIPTIC
PAR = RotationClass.PARABOLIC


@dataclass(frozen=True)
class CatalogEntry:
    """One named surface with its paired relation and implicit equation.

    ``implicit`` maps coordinate arrays (x1, x2, x3) to (residual, scale);
    entries without a closed implicit equation leave it None.
    """

    key: str
    group: str
    surface: object  # SurfaceSpec | ExplicitSurface
    relation: Optional[WeingartenRelation]
    description: str
    implicit: Optional[Callable] = None
    quadric: Optional[QuadricSpec] = None

    @property
    def is_explicit(self) -> bool:
        return isinstance(self.surface, ExplicitSurface)


def _entry(key, group, surface, relation, description, implicit=None,
           quadric=None):
    return CatalogEntry(key=key, group=group, surface=surface,
                        relation=relation, description=description,
                        implicit=implicit, quadric=quadric)


# ---------------------------------------------------------------------------
# implicit-equation helpers (residual, scale = 1 + |LHS|)


def _implicit(lhs_fn, rhs_fn):
    def check(x1, x2, x3):
        lhs = lhs_fn(x1, x2, x3)
        return lhs - rhs_fn(x1, x2, x3), 1.0 + np.abs(lhs)
    return check


def _minkowski_norm(x1, x2, x3):
    return x1 * x1 + x2 * x2 - x3 * x3


# ---------------------------------------------------------------------------
# cylinders


def _cylinders(radius: float = 1.25) -> list[CatalogEntry]:
    r0 = radius

    def lorentzian(rv, tv):
        X = np.empty((len(rv), len(tv), 3))
        X[..., 0] = r0 * np.cos(tv)[None, :]
        X[..., 1] = r0 * np.sin(tv)[None, :]
        X[..., 2] = np.asarray(rv)[:, None]
        return X

    def hyper_timelike(rv, tv):
        X = np.empty((len(rv), len(tv), 3))
        X[..., 0] = np.asarray(rv)[:, None]
        X[..., 1] = r0 * np.cosh(tv)[None, :]
        X[..., 2] = r0 * np.sinh(tv)[None, :]
        return X

    def hyper_spacelike(rv, tv):
        X = np.empty((len(rv), len(tv), 3))
        X[..., 0] = np.asarray(rv)[:, None]
        X[..., 1] = r0 * np.sinh(tv)[None, :]
        X[..., 2] = r0 * np.cosh(tv)[None, :]
        return X

    zero = lambda rs: np.zeros_like(np.asarray(rs, dtype=float))
    inv = lambda rs: np.full_like(np.asarray(rs, dtype=float), 1.0 / r0)

    defs = [
        ("cylinder-lorentzian", lorentzian, ELL, CausalCharacter.TIMELIKE,
         _implicit(lambda x1, x2, x3: x1 * x1 + x2 * x2,
                   lambda x1, x2, x3: r0 * r0),
         f"x1^2+x2^2={r0}^2 (timelike axis x3)"),
        ("cylinder-hyperbolic-timelike", hyper_timelike, H2,
         CausalCharacter.TIMELIKE,
         _implicit(lambda x1, x2, x3: x2 * x2 - x3 * x3,
                   lambda x1, x2, x3: r0 * r0),
         f"x2^2-x3^2={r0}^2 (spacelike axis x1)"),
        ("cylinder-hyperbolic-spacelike", hyper_spacelike, H1,
         CausalCharacter.SPACELIKE,
         _implicit(lambda x1, x2, x3: x3 * x3 - x2 * x2,
                   lambda x1, x2, x3: r0 * r0),
         f"x3^2-x2^2={r0}^2 (spacelike axis x1)"),
    ]
    entries = []
    for key, embed, cls_like, causal, implicit, desc in defs:
        xs = ExplicitSurface(name=key, embed=embed, r_interval=(-1.0, 1.0),
                             cls_like=cls_like, expected_k_m=zero,
                             expected_k_p=inv, causal=causal,
                             implicit=implicit)
        entries.append(_entry(key, "cylinders", xs, MERIDIAN_FLAT,
                              f"right cylinder, {desc}; curvatures "
                              f"{{0, 1/{r0}}}", implicit))
    return entries


# ---------------------------------------------------------------------------
# momentum-generated groups


def _planes() -> list[CatalogEntry]:
    z0 = 0.75
    rng = (0.5, 2.5)
    return [
        _entry("plane-elliptic", "planes",
               SurfaceSpec(ELL, 1, Zero(), rng, z0), MERIDIAN_FLAT,
               f"spacelike plane x3={z0}: K = 0",
               _implicit(lambda x1, x2, x3: x3, lambda x1, x2, x3: z0)),
        _entry("plane-hyperbolic1", "planes",
               SurfaceSpec(H1, -1, Zero(), rng, z0), MERIDIAN_FLAT,
               f"timelike plane x1={z0}: K = 0",
               _implicit(lambda x1, x2, x3: x1, lambda x1, x2, x3: z0)),
        _entry("plane-hyperbolic2", "planes",
               SurfaceSpec(H2, -1, Zero(), rng, z0), MERIDIAN_FLAT,
               f"timelike plane x1={z0}: K = 0",
               _implicit(lambda x1, x2, x3: x1, lambda x1, x2, x3: z0)),
    ]


def _cones() -> list[CatalogEntry]:
    """The rotational cones: one per class and causal sign (Table of
    constant momenta).  Anchors put the apex at the origin so the implicit
    quadratic cone equations hold."""
    phi0 = 0.8
    theta0 = math.pi / 3.0
    entries = []

    def cone(key, cls, eps, k0, rng, slope, implicit, desc):
        r0 = rng[0]
        anchor = slope * r0
        spec = SurfaceSpec(cls, eps, Constant(k0), rng, anchor)
        entries.append(_entry(key, "cones", spec, MERIDIAN_FLAT, desc,
                              implicit))

    ch, sh = math.cosh(phi0), math.sinh(phi0)
    # profile x = K r / sqrt(K^2 - eps); squared slope of the implicit cone
    cone("cone-hyperbolic1-spacelike", H1, 1, ch, (0.5, 2.5), ch / sh,
         _implicit(lambda x1, x2, x3: x3 * x3 - x2 * x2,
                   lambda x1, x2, x3: (sh / ch) ** 2 * x1 * x1),
         f"x3^2-x2^2=tanh^2({phi0}) x1^2: K = cosh({phi0})")
    cone("cone-hyperbolic1-timelike", H1, -1, sh, (0.5, 2.5), sh / ch,
         _implicit(lambda x1, x2, x3: x3 * x3 - x2 * x2,
                   lambda x1, x2, x3: (ch / sh) ** 2 * x1 * x1),
         f"x3^2-x2^2=coth^2({phi0}) x1^2: K = sinh({phi0})")
    c0 = math.cos(theta0)
    cone("cone-hyperbolic2", H2, -1, c0, (0.5, 2.5),
         c0 / math.sin(theta0),
         _implicit(lambda x1, x2, x3: x2 * x2 - x3 * x3,
                   lambda x1, x2, x3: math.tan(theta0) ** 2 * x1 * x1),
         f"x2^2-x3^2=tan^2(pi/3) x1^2: K = cos(pi/3)")
    cone("cone-elliptic-spacelike", ELL, 1, sh, (0.5, 2.5), sh / ch,
         _implicit(lambda x1, x2, x3: x1 * x1 + x2 * x2,
                   lambda x1, x2, x3: (ch / sh) ** 2 * x3 * x3),
         f"x1^2+x2^2=coth^2({phi0}) x3^2: K = sinh({phi0})")
    cone("cone-elliptic-timelike", ELL, -1, ch, (0.5, 2.5), ch / sh,
         _implicit(lambda x1, x2, x3: x1 * x1 + x2 * x2,
                   lambda x1, x2, x3: (sh / ch) ** 2 * x3 * x3),
         f"x1^2+x2^2=tanh^2({phi0}) x3^2: K = cosh({phi0})")
    # parabolic: u = eps v / K^2 = eps e^{2 phi} v
    e2 = math.exp(0.6)
    for eps, key in ((1, "cone-parabolic-spacelike"),
                     (-1, "cone-parabolic-timelike")):
        r0 = 0.5
        spec = SurfaceSpec(PAR, eps, Constant(math.exp(-0.3)), (0.5, 2.5),
                           eps * e2 * r0)
        entries.append(_entry(
            key, "cones", spec, MERIDIAN_FLAT,
            f"x1^2+x2^2-x3^2={eps}*e^0.6 (x1-x3)^2: K = exp(-0.3)",
            _implicit(_minkowski_norm,
                      lambda x1, x2, x3, s=eps: s * e2 * (x1 - x3) ** 2)))
    return entries


def _umbilics(R: float = 1.25) -> list[CatalogEntry]:
    R2 = R * R
    rel = LinearProportional(q=1.0)

    def sphere_implicit(sign):
        return _implicit(_minkowski_norm, lambda x1, x2, x3: sign * R2)

    h1_r0 = 1.3
    ell_r0 = 0.4
    return [
        _entry("umbilic-hyperbolic1", "umbilics",
               SurfaceSpec(H1, 1, Linear(R), (h1_r0, 2.5),
                           math.sqrt(h1_r0 ** 2 - R2)), rel,
               f"hyperbolic plane <x,x>=-{R}^2: K = z/{R}",
               sphere_implicit(-1.0)),
        _entry("umbilic-hyperbolic2", "umbilics",
               SurfaceSpec(H2, -1, Linear(R), (0.3, 1.2),
                           -math.sqrt(R2 - 0.3 ** 2)), rel,
               f"de Sitter 2-space <x,x>={R}^2: K = y/{R}",
               sphere_implicit(1.0)),
        _entry("umbilic-elliptic", "umbilics",
               SurfaceSpec(ELL, 1, Linear(R), (ell_r0, 2.0),
                           math.sqrt(ell_r0 ** 2 + R2)), rel,
               f"hyperbolic plane <x,x>=-{R}^2: K = x/{R}",
               sphere_implicit(-1.0)),
        _entry("umbilic-parabolic", "umbilics",
               SurfaceSpec(PAR, 1, Linear(R), (0.5, 2.2), -R2 / 0.5), rel,
               f"hyperbolic plane <x,x>=-{R}^2: K = v/{R}",
               sphere_implicit(-1.0)),
    ]


def _zero_mean(a: float = 1.1) -> list[CatalogEntry]:
    a2 = a * a
    rel = ZeroMeanCurvature()
    mom = InverseLinear(a)

    def entry(key, cls, eps, rng, anchor, implicit, desc):
        return _entry(key, "zero-mean-curvature",
                      SurfaceSpec(cls, eps, mom, rng, anchor), rel,
                      desc, implicit)

    return [
        entry("catenoid-1", ELL, 1, (0.4, 2.2), a * math.asinh(0.4 / a),
              _implicit(lambda x1, x2, x3: x1 * x1 + x2 * x2,
                        lambda x1, x2, x3: a2 * np.sinh(x3 / a) ** 2),
              f"catenoid of first kind x1^2+x2^2={a}^2 sinh^2(x3/{a})"),
        entry("catenoid-2", H1, 1, (0.15, 1.0), a * math.asin(0.15 / a),
              _implicit(lambda x1, x2, x3: x3 * x3 - x2 * x2,
                        lambda x1, x2, x3: a2 * np.sin(x1 / a) ** 2),
              f"catenoid of second kind x3^2-x2^2={a}^2 sin^2(x1/{a})"),
        entry("catenoid-3", ELL, -1, (0.15, 1.0), a * math.asin(0.15 / a),
              _implicit(lambda x1, x2, x3: x1 * x1 + x2 * x2,
                        lambda x1, x2, x3: a2 * np.sin(x3 / a) ** 2),
              f"catenoid of third kind x1^2+x2^2={a}^2 sin^2(x3/{a})"),
        entry("catenoid-4", H1, -1, (0.4, 2.2), a * math.asinh(0.4 / a),
              _implicit(lambda x1, x2, x3: x3 * x3 - x2 * x2,
                        lambda x1, x2, x3: a2 * np.sinh(x1 / a) ** 2),
              f"catenoid of fourth kind x3^2-x2^2={a}^2 sinh^2(x1/{a})"),
        entry("catenoid-5", H2, -1, (1.2, 2.6), a * math.acosh(1.2 / a),
              _implicit(lambda x1, x2, x3: x2 * x2 - x3 * x3,
                        lambda x1, x2, x3: a2 * np.cosh(x1 / a) ** 2),
              f"catenoid of fifth kind x2^2-x3^2={a}^2 cosh^2(x1/{a})"),
        entry("enneper-2", PAR, 1, (0.5, 2.0), 0.5 ** 3 / (3 * a2),
              _implicit(_minkowski_norm,
                        lambda x1, x2, x3: (x1 - x3) ** 4 / (3 * a2)),
              f"Enneper-type x1^2+x2^2-x3^2=(x1-x3)^4/(3*{a}^2), spacelike"),
        entry("enneper-3", PAR, -1, (0.5, 2.0), -0.5 ** 3 / (3 * a2),
              _implicit(_minkowski_norm,
                        lambda x1, x2, x3: -(x1 - x3) ** 4 / (3 * a2)),
              f"Enneper-type x1^2+x2^2-x3^2=-(x1-x3)^4/(3*{a}^2), timelike"),
    ]


_HOPF_COMBOS = (
    ("hyperbolic1-spacelike", H1, 1),
    ("hyperbolic1-timelike", H1, -1),
    ("hyperbolic2", H2, -1),
    ("elliptic-spacelike", ELL, 1),
    ("elliptic-timelike", ELL, -1),
    ("parabolic-spacelike", PAR, 1),
    ("parabolic-timelike", PAR, -1),
)


def _hopf_interval(cls: RotationClass, eps: int, q: float,
                   a: float) -> tuple[float, float]:
    # validity: |K| > 1 needs r on the far side of a; |K| < 1 the near side
    outside = (a * 1.06, a * 2.2)
    inside = (a * 0.3, a * 0.94)
    anywhere = (0.5, 2.4)
    if cls is RotationClass.HYPERBOLIC1 and eps == 1:
        return outside if q > 0 else inside
    if cls is RotationClass.ELLIPTIC and eps == -1:
        return outside if q > 0 else inside
    if cls is RotationClass.HYPERBOLIC2:
        return inside if q > 0 else outside
    return anywhere


def _hopf(a: float = 1.2) -> list[CatalogEntry]:
    entries = []
    for q in (-2.0, -1.0, 0.5, 1.0, 2.0):
        for tag, cls, eps in _HOPF_COMBOS:
            rng = _hopf_interval(cls, eps, q, a)
            spec = SurfaceSpec(cls, eps, Power(q=q, a=a), rng, 0.0)
            entries.append(_entry(
                f"hopf-{tag}-q{q:g}", "hopf", spec, LinearProportional(q=q),
                f"Hopf surface K=(r/{a})^{q:g}, {tag}"))
    return entries


def _quadratic_branches(mu: float = 1.0) -> list[CatalogEntry]:
    """Branches of K = r/(mu + c r); negative c realizes (via reflection)
    the branches whose normalized-c domains sit at negative r."""
    rel = Quadratic(mu=mu)
    defs = [
        ("quadratic-h1-spacelike-c0.5", H1, 1, 0.5, (2.1, 3.4)),
        ("quadratic-h1-spacelike-c-1", H1, 1, -1.0, (0.55, 0.9)),
        ("quadratic-h1-spacelike-c-2", H1, 1, -2.0, (0.345, 0.47)),
        ("quadratic-h1-timelike-c1", H1, -1, 1.0, (0.5, 2.0)),
        ("quadratic-h2-c0.5", H2, -1, 0.5, (0.3, 1.35)),
        ("quadratic-h2-c1", H2, -1, 1.0, (0.5, 2.0)),
        ("quadratic-h2-c2", H2, -1, 2.0, (0.5, 2.0)),
        ("quadratic-elliptic-spacelike-c1", ELL, 1, 1.0, (0.5, 2.0)),
        ("quadratic-elliptic-timelike-c0.5", ELL, -1, 0.5, (2.1, 3.4)),
        ("quadratic-elliptic-timelike-c-1", ELL, -1, -1.0, (0.55, 0.9)),
        ("quadratic-elliptic-timelike-c-2", ELL, -1, -2.0, (0.345, 0.47)),
        ("quadratic-parabolic-spacelike-c1", PAR, 1, 1.0, (0.5, 2.0)),
        ("quadratic-parabolic-timelike-c1", PAR, -1, 1.0, (0.5, 2.0)),
    ]
    return [
        _entry(key, "quadratic",
               SurfaceSpec(cls, eps, QuadraticFamily(mu=mu, c=c), rng, 0.0),
               rel, f"K=r/({mu:g}{c:+g} r), {cls.value} eps={eps:+d}")
        for key, cls, eps, c, rng in defs
    ]


# ---------------------------------------------------------------------------
# quadrics


_QUADRIC_DEFAULTS = dict(a=1.0, b=0.7, d=1.0, alpha=1.0, beta=0.8)
_QUADRIC_EPS = {
    "I-a": 1, "I-b": 1, "I-c": -1, "I-d": 1,
    "II-a": -1, "II-b": -1, "II-c": -1, "II-d": -1,
    "III-a": 1, "III-b": 1, "III-c": 1, "III-d": 1,
    "IV-a": -1, "IV-b": 1, "IV-c": 1, "IV-d": 1,
}


def default_quadric(family: str) -> QuadricSpec:
    kw = {"eps": _QUADRIC_EPS[family]}
    if family in ("I-d", "II-d", "III-d"):
        kw["d"] = _QUADRIC_DEFAULTS["d"]
    elif family.startswith("IV"):
        kw["alpha"] = _QUADRIC_DEFAULTS["alpha"]
        kw["beta"] = _QUADRIC_DEFAULTS["beta"]
    else:
        kw["a"] = _QUADRIC_DEFAULTS["a"]
        kw["b"] = _QUADRIC_DEFAULTS["b"]
    return QuadricSpec(family, **kw)


def quadric_piece(q: QuadricSpec, pad: float = 0.05) -> SurfaceSpec:
    """A surface piece of the quadric: first validity interval, anchored
    on the canonical quadric via the closed-form profile graph."""
    mom = momentum_of(q)
    lo, hi = validity_domain(mom, q.cls, q.eps)[0]
    if math.isinf(hi):
        hi = max(1.5, 2.5 * max(lo, 0.5))
    if lo < 1e-6:
        lo = 0.25 * hi
    width = hi - lo
    r0, r1 = lo + pad * width, hi - pad * width
    return SurfaceSpec(q.cls, q.eps, mom, (r0, r1),
                       profile_graph_exact(q, r0))


def _quadrics() -> list[CatalogEntry]:
    entries = []
    for family in FAMILIES:
        q = default_quadric(family)
        spec = quadric_piece(q)
        mu = weingarten_coefficient(q)
        entries.append(_entry(
            f"quadric-{family}", "quadrics", spec, Cubic(mu=mu),
            f"quadric {family}: K=r/sqrt({spec.momentum.mu:+g}"
            f"{spec.momentum.c:+g} r^2), eps={q.eps:+d}",
            implicit=lambda x1, x2, x3, qq=q: _quadric_implicit(qq, x1, x2, x3),
            quadric=q))
    return entries


def _quadric_implicit(q: QuadricSpec, x1, x2, x3):
    lhs, rhs = quadric_implicit_parts(q, x1, x2, x3)
    return lhs - rhs, 1.0 + np.abs(lhs)


# ---------------------------------------------------------------------------
# assembly


@lru_cache(maxsize=1)
def build_catalog() -> dict[str, CatalogEntry]:
    """All named surfaces, keyed; order is stable for listings."""
    entries: list[CatalogEntry] = []
    entries += _planes()
    entries += _cylinders()
    entries += _cones()
    entries += _umbilics()
    entries += _zero_mean()
    entries += _hopf()
    entries += _quadratic_branches()
    entries += _quadrics()
    out = {}
    for e in entries:
        if e.key in out:
            raise RuntimeError(f"duplicate catalog key {e.key}")
        out[e.key] = e
    return out


def get_entry(key: str) -> CatalogEntry:
    cat = build_catalog()
    if key not in cat:
        raise KeyError(f"unknown surface {key!r}; see `lrotor catalog`")
    return cat[key]


def catalog_keys() -> list[str]:
    return list(build_catalog().keys())
