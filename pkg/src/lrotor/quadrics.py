"""Quadric surfaces of revolution and the cubic-relation classifier.

Sixteen canonical families, four per rotation class, labelled "I-a" ...
"IV-d": (a) ellipsoid-like, (b)/(c) hyperboloid-like, (d) paraboloid-like
(the parabolic class IV instead varies the sign pattern of its hyperbola
profile).  Each family's profile momentum satisfies K^2 = r^2/(mu + c r^2),
i.e. the cubic relation k_m = mu k_p^3, and conversely every (mu, c) pair
admissible for a class lands on exactly one family; ``classify_cubic`` is
that bijection, with c = 0 collapsing to the totally umbilical surfaces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from .errors import Degenerate, DomainError, Inadmissible
from .momentum import CubicFamily, RotationClass, check_causal_sign

__all__ = [
    "QuadricSpec", "UmbilicMarker", "PlaneMarker", "CausalRegion",
    "FAMILIES", "rotation_class_of", "momentum_squared",
    "weingarten_coefficient", "cubic_parameters", "momentum_of",
    "profile_graph_exact", "classify_cubic", "quadric_implicit_residual",
    "causal_region", "classification_to_json",
]

FAMILIES = ("I-a", "I-b", "I-c", "I-d",
            "II-a", "II-b", "II-c", "II-d",
            "III-a", "III-b", "III-c", "III-d",
            "IV-a", "IV-b", "IV-c", "IV-d")

# boundary c-values (paraboloid branches, umbilics) are matched to this
BOUNDARY_TOL = 1e-12


class CausalRegion(Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    ALWAYS_SPACELIKE = "always_spacelike"
    ALWAYS_TIMELIKE = "always_timelike"


@dataclass(frozen=True)
class UmbilicMarker:
    """c = 0 outcome: the totally umbilical surface of radius R."""

    R: float


@dataclass(frozen=True)
class PlaneMarker:
    """The trivial K = 0 solution of the cubic relation (planes)."""


_AB = {"I-a", "I-b", "I-c", "II-a", "II-b", "II-c",
       "III-a", "III-b", "III-c"}
_D = {"I-d", "II-d", "III-d"}
_AL = {"IV-a", "IV-b", "IV-c", "IV-d"}


def rotation_class_of(family: str) -> RotationClass:
    block = family.split("-")[0]
    return {"I": RotationClass.HYPERBOLIC1, "II": RotationClass.HYPERBOLIC2,
            "III": RotationClass.ELLIPTIC, "IV": RotationClass.PARABOLIC}[block]


@dataclass(frozen=True)
class QuadricSpec:
    """One canonical quadric of revolution with its shape parameters.

    (a, b) for the ellipsoid/hyperboloid families, d for paraboloids,
    (alpha, beta) for the parabolic-class families.  ``eps`` selects the
    causal branch where the family admits both (IV-a forces -1, IV-c +1,
    class II is always timelike).
    """

    family: str
    a: Optional[float] = None
    b: Optional[float] = None
    d: Optional[float] = None
    alpha: Optional[float] = None
    beta: Optional[float] = None
    eps: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        check_causal_sign(self.eps)
        if self.family in _AB:
            if not (self.a and self.b and self.a > 0 and self.b > 0):
                raise ValueError(f"{self.family} needs a > 0 and b > 0")
        elif self.family in _D:
            if not (self.d and self.d > 0):
                raise ValueError(f"{self.family} needs d > 0")
        else:
            if not (self.alpha and self.alpha > 0):
                raise ValueError(f"{self.family} needs alpha > 0")
            if self.beta is None or self.beta < 0:
                raise ValueError(f"{self.family} needs beta >= 0")
        forced = {"IV-a": -1, "IV-c": 1}.get(self.family)
        if self.family.split("-")[0] == "II":
            forced = -1
        if forced is not None and self.eps != forced:
            object.__setattr__(self, "eps", forced)

    @property
    def cls(self) -> RotationClass:
        return rotation_class_of(self.family)


# ---------------------------------------------------------------------------
# per-family formulas


def momentum_squared(q: QuadricSpec, r: float) -> float:
    """K(r)^2 of the family's profile curve; DomainError when nonpositive."""
    eps = q.eps
    fam = q.family
    r2 = r * r
    if fam in _AB:
        a2, b2 = q.a * q.a, q.b * q.b
        num = b2 * r2
        den = {
            "I-a": (a2 + b2) * r2 - a2 * a2,
            "I-b": (b2 - a2) * r2 + a2 * a2,
            "I-c": (b2 - a2) * r2 - a2 * a2,
            "II-a": (b2 - a2) * r2 + a2 * a2,
            "II-b": (a2 + b2) * r2 - a2 * a2,
            "II-c": (a2 + b2) * r2 + a2 * a2,
            "III-a": a2 * a2 - (a2 + b2) * r2,
            "III-b": (a2 - b2) * r2 - a2 * a2,
            "III-c": a2 * a2 + (a2 - b2) * r2,
        }[fam]
        sign = 1.0 if fam.split("-")[0] == "II" else float(eps)
        value = sign * num / den if den != 0.0 else math.inf
    elif fam in _D:
        d2 = q.d * q.d
        den = {"I-d": r2 - d2, "II-d": r2 + d2, "III-d": d2 - r2}[fam]
        sign = 1.0 if fam == "II-d" else float(eps)
        value = sign * r2 / den if den != 0.0 else math.inf
    else:
        al2, be2 = q.alpha ** 2, q.beta ** 2
        den = {"IV-a": -(al2 + be2 * r2), "IV-b": be2 * r2 - al2,
               "IV-c": al2 + be2 * r2, "IV-d": al2 - be2 * r2}[fam]
        value = eps * r2 / den if den != 0.0 else math.inf
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(
            f"K^2 = {value} not positive for {fam} at r={r} (eps={eps:+d})")
    return value


def cubic_parameters(q: QuadricSpec) -> tuple[float, float]:
    """(mu, c) with K(r) = r / sqrt(mu + c r^2) for this family."""
    eps = float(q.eps)
    fam = q.family
    if fam in _AB:
        a2, b2 = q.a * q.a, q.b * q.b
        mu_mag = a2 * a2 / b2
        if fam == "I-a":
            return (-eps * mu_mag, eps * (a2 + b2) / b2)
        if fam == "I-b":
            return (eps * mu_mag, eps * (b2 - a2) / b2)
        if fam == "I-c":
            return (-eps * mu_mag, eps * (b2 - a2) / b2)
        if fam == "II-a":
            return (mu_mag, (b2 - a2) / b2)
        if fam == "II-b":
            return (-mu_mag, (a2 + b2) / b2)
        if fam == "II-c":
            return (mu_mag, (a2 + b2) / b2)
        if fam == "III-a":
            return (eps * mu_mag, -eps * (a2 + b2) / b2)
        if fam == "III-b":
            return (-eps * mu_mag, eps * (a2 - b2) / b2)
        return (eps * mu_mag, eps * (a2 - b2) / b2)  # III-c
    if fam in _D:
        d2 = q.d * q.d
        return {"I-d": (-eps * d2, eps),
                "II-d": (d2, 1.0),
                "III-d": (eps * d2, -eps)}[fam]
    al2, be2 = q.alpha ** 2, q.beta ** 2
    return {"IV-a": (-eps * al2, -eps * be2),
            "IV-b": (-eps * al2, eps * be2),
            "IV-c": (eps * al2, eps * be2),
            "IV-d": (eps * al2, -eps * be2)}[q.family]


def weingarten_coefficient(q: QuadricSpec) -> float:
    """Signed mu in k_m = mu k_p^3 (equals the mu of the momentum family)."""
    return cubic_parameters(q)[0]


def momentum_of(q: QuadricSpec) -> CubicFamily:
    mu, c = cubic_parameters(q)
    return CubicFamily(mu=mu, c=c)


def profile_graph_exact(q: QuadricSpec, r: float) -> float:
    """Closed-form profile graph value, oriented like the quadrature.

    Anchoring a reconstructed surface at any point of this graph puts its
    mesh exactly on the canonical quadric.
    """
    fam = q.family
    if fam in _AB:
        a, b = q.a, q.b
        if fam in ("I-a", "II-a", "III-a"):
            if abs(r) > a:
                raise DomainError(f"|r| > a on {fam}")
            return -(b / a) * math.sqrt(a * a - r * r)
        if fam in ("I-b", "II-b", "III-b"):
            if abs(r) < a:
                raise DomainError(f"|r| < a on {fam}")
            return (b / a) * math.sqrt(r * r - a * a)
        return (b / a) * math.sqrt(r * r + a * a)
    if fam in _D:
        return r * r / (2.0 * q.d)
    al2, be2 = q.alpha ** 2, q.beta ** 2
    if r == 0.0:
        raise DomainError("parabolic profile needs v != 0")
    return {"IV-a": al2 / r - be2 * r,
            "IV-b": al2 / r + be2 * r,
            "IV-c": -al2 / r + be2 * r,
            "IV-d": -al2 / r - be2 * r}[fam]


def quadric_implicit_parts(q: QuadricSpec, x1, x2, x3):
    """(LHS, RHS) of the family's canonical equation; array-friendly."""
    x1, x2, x3 = (np.asarray(v, dtype=np.float64) for v in (x1, x2, x3))
    fam = q.family
    if fam in _AB:
        a2, b2 = q.a * q.a, q.b * q.b
        forms = {
            "I-a": x1 * x1 / b2 - x2 * x2 / a2 + x3 * x3 / a2,
            "I-b": -x1 * x1 / b2 - x2 * x2 / a2 + x3 * x3 / a2,
            "I-c": x1 * x1 / b2 + x2 * x2 / a2 - x3 * x3 / a2,
            "II-a": x1 * x1 / b2 + x2 * x2 / a2 - x3 * x3 / a2,
            "II-b": -x1 * x1 / b2 + x2 * x2 / a2 - x3 * x3 / a2,
            "II-c": x1 * x1 / b2 - x2 * x2 / a2 + x3 * x3 / a2,
            "III-a": x1 * x1 / a2 + x2 * x2 / a2 + x3 * x3 / b2,
            "III-b": x1 * x1 / a2 + x2 * x2 / a2 - x3 * x3 / b2,
            "III-c": -x1 * x1 / a2 - x2 * x2 / a2 + x3 * x3 / b2,
        }
        return forms[fam], np.ones_like(forms[fam])
    if fam in _D:
        two_d = 2.0 * q.d
        if fam == "I-d":
            return x3 * x3 - x2 * x2, two_d * x1
        if fam == "II-d":
            return x2 * x2 - x3 * x3, two_d * x1
        return x1 * x1 + x2 * x2, two_d * x3
    al2, be2 = q.alpha ** 2, q.beta ** 2
    core = x1 * x1 + x2 * x2 - x3 * x3
    w = (x1 - x3) ** 2
    rhs = {"IV-a": al2 - be2 * w, "IV-b": al2 + be2 * w,
           "IV-c": -al2 + be2 * w, "IV-d": -al2 - be2 * w}[fam]
    return core, rhs


def quadric_implicit_residual(q: QuadricSpec, p) -> float:
    """LHS - RHS of the family's canonical equation at an ambient point."""
    lhs, rhs = quadric_implicit_parts(q, p[0], p[1], p[2])
    return float(lhs - rhs)


def causal_region(q: QuadricSpec, r: float) -> CausalRegion:
    """Causal type of the surface over the parallel at distance r.

    Families that are spacelike or timelike outright return the
    unconditional tags; the others classify r against the family's
    threshold and refuse exactly on it.
    """
    fam = q.family
    r2 = r * r

    def split(threshold2, above_spacelike):
        scale = max(1.0, abs(threshold2))
        if abs(r2 - threshold2) <= 1e-12 * scale:
            raise Degenerate(f"r={r} on the causal boundary of {fam}")
        above = r2 > threshold2
        if above == above_spacelike:
            return CausalRegion.SPACELIKE
        return CausalRegion.TIMELIKE

    if fam.split("-")[0] == "II" or fam == "IV-a":
        return CausalRegion.ALWAYS_TIMELIKE
    if fam == "IV-c":
        return CausalRegion.ALWAYS_SPACELIKE
    if fam in _AB:
        a2, b2 = q.a * q.a, q.b * q.b
        a4 = a2 * a2
        if fam == "I-a":
            return split(a4 / (a2 + b2), True)
        if fam == "I-b":
            if a2 <= b2:
                return CausalRegion.ALWAYS_SPACELIKE
            return split(a4 / (a2 - b2), False)
        if fam == "I-c":
            if b2 <= a2:
                return CausalRegion.ALWAYS_TIMELIKE
            return split(a4 / (b2 - a2), True)
        if fam == "III-a":
            return split(a4 / (a2 + b2), False)
        if fam == "III-b":
            if a2 <= b2:
                return CausalRegion.ALWAYS_TIMELIKE
            return split(a4 / (a2 - b2), True)
        # III-c
        if a2 >= b2:
            return CausalRegion.ALWAYS_SPACELIKE
        return split(a4 / (b2 - a2), False)
    if fam == "I-d":
        return split(q.d * q.d, True)
    if fam == "III-d":
        return split(q.d * q.d, False)
    # IV-b / IV-d
    if not q.beta:
        return (CausalRegion.ALWAYS_TIMELIKE if fam == "IV-b"
                else CausalRegion.ALWAYS_SPACELIKE)
    thr = (q.alpha / q.beta) ** 2
    return split(thr, fam == "IV-b")


# ---------------------------------------------------------------------------
# classification (the cubic-relation bijection)


def classify_cubic(mu: float, c: float, eps: int, cls: RotationClass,
                   boundary_tol: float = BOUNDARY_TOL
                   ) -> Union[QuadricSpec, UmbilicMarker]:
    """Map a momentum family K = r/sqrt(mu + c r^2) to its quadric.

    Inverse of ``cubic_parameters``: recovers the family tag and shape
    parameters for the given rotation class and causal sign.  c = 0 (to
    ``boundary_tol``) yields the umbilic marker; pairs whose momentum has
    no validity domain in the class raise Inadmissible.
    """
    if mu == 0.0:
        raise ValueError("mu must be nonzero")
    eps = check_causal_sign(eps)
    if cls is RotationClass.HYPERBOLIC2:
        eps = -1

    if abs(c) <= boundary_tol:
        if mu <= 0.0:
            raise Inadmissible("c = 0 needs mu > 0 for a real momentum")
        return UmbilicMarker(R=math.sqrt(mu))

    em, ec = eps * mu, eps * c

    if cls is RotationClass.HYPERBOLIC1:
        if em < 0.0:
            if ec > 1.0 + boundary_tol:
                a2 = -em / (ec - 1.0)
                return QuadricSpec("I-a", a=math.sqrt(a2),
                                   b=math.sqrt(a2 * a2 / -em), eps=eps)
            if ec < 1.0 - boundary_tol:
                a2 = -em / (1.0 - ec)
                return QuadricSpec("I-c", a=math.sqrt(a2),
                                   b=math.sqrt(a2 * a2 / -em), eps=eps)
            return QuadricSpec("I-d", d=math.sqrt(-em), eps=eps)
        if ec < 1.0 - boundary_tol:
            a2 = em / (1.0 - ec)
            return QuadricSpec("I-b", a=math.sqrt(a2),
                               b=math.sqrt(a2 * a2 / em), eps=eps)
        raise Inadmissible(
            f"hyperbolic-1 with eps*mu={em} > 0 requires eps*c < 1, got {ec}")

    if cls is RotationClass.HYPERBOLIC2:
        if mu > 0.0:
            if c < 1.0 - boundary_tol:
                a2 = mu / (1.0 - c)
                return QuadricSpec("II-a", a=math.sqrt(a2),
                                   b=math.sqrt(a2 * a2 / mu), eps=-1)
            if c > 1.0 + boundary_tol:
                a2 = mu / (c - 1.0)
                return QuadricSpec("II-c", a=math.sqrt(a2),
                                   b=math.sqrt(a2 * a2 / mu), eps=-1)
            return QuadricSpec("II-d", d=math.sqrt(mu), eps=-1)
        if c > 1.0 + boundary_tol:
            a2 = -mu / (c - 1.0)
            return QuadricSpec("II-b", a=math.sqrt(a2),
                               b=math.sqrt(a2 * a2 / -mu), eps=-1)
        raise Inadmissible(
            f"hyperbolic-2 with mu={mu} < 0 requires c > 1, got {c}")

    if cls is RotationClass.ELLIPTIC:
        if em > 0.0:
            if ec < -1.0 - boundary_tol:
                a2 = em / -(1.0 + ec)
                return QuadricSpec("III-a", a=math.sqrt(a2),
                                   b=math.sqrt(a2 * a2 / em), eps=eps)
            if ec > -1.0 + boundary_tol:
                a2 = em / (1.0 + ec)
                return QuadricSpec("III-c", a=math.sqrt(a2),
                                   b=math.sqrt(a2 * a2 / em), eps=eps)
            return QuadricSpec("III-d", d=math.sqrt(em), eps=eps)
        if ec > -1.0 + boundary_tol:
            a2 = -em / (1.0 + ec)
            return QuadricSpec("III-b", a=math.sqrt(a2),
                               b=math.sqrt(a2 * a2 / -em), eps=eps)
        raise Inadmissible(
            f"elliptic with eps*mu={em} < 0 requires eps*c > -1, got {ec}")

    # parabolic: momentum needs mu > 0 or c > 0, and K > 0 holds for v > 0
    if mu < 0.0 and c < 0.0:
        raise Inadmissible("parabolic momentum needs mu > 0 or c > 0")
    if em < 0.0 and ec < 0.0:
        return QuadricSpec("IV-a", alpha=math.sqrt(-em), beta=math.sqrt(-ec),
                           eps=eps)
    if em < 0.0 and ec > 0.0:
        return QuadricSpec("IV-b", alpha=math.sqrt(-em), beta=math.sqrt(ec),
                           eps=eps)
    if em > 0.0 and ec > 0.0:
        return QuadricSpec("IV-c", alpha=math.sqrt(em), beta=math.sqrt(ec),
                           eps=eps)
    return QuadricSpec("IV-d", alpha=math.sqrt(em), beta=math.sqrt(-ec),
                       eps=eps)


def classification_to_json(result: Union[QuadricSpec, UmbilicMarker,
                                         PlaneMarker]) -> dict:
    if isinstance(result, PlaneMarker):
        return {"family": "plane"}
    if isinstance(result, UmbilicMarker):
        return {"family": "umbilic", "R": result.R}
    out = {"family": result.family}
    for name in ("a", "b", "d", "alpha", "beta"):
        value = getattr(result, name)
        if value is not None:
            out[name] = float(value)
    out["epsilon"] = int(result.eps)
    return out
