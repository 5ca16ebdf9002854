"""Kernel backend selection.

The compiled extension is preferred when present; ``LROTOR_FORCE_FALLBACK=1``
pins the NumPy implementation (used by the benchmark and backend-parity
tests).  Both expose the same functions and constants.
"""

import os

from . import _fallback

if os.environ.get("LROTOR_FORCE_FALLBACK") == "1":
    _impl = _fallback
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _fallback

BACKEND = _impl.BACKEND

ZERO = _fallback.ZERO
CONSTANT = _fallback.CONSTANT
LINEAR = _fallback.LINEAR
INVERSE_LINEAR = _fallback.INVERSE_LINEAR
POWER = _fallback.POWER
QUADRATIC = _fallback.QUADRATIC
CUBIC = _fallback.CUBIC

H1 = _fallback.H1
H2 = _fallback.H2
ELL = _fallback.ELL
PAR = _fallback.PAR

momentum_values = _impl.momentum_values
momentum_derivs = _impl.momentum_derivs
graph_transform = _impl.graph_transform
arc_transform = _impl.arc_transform
graph_integrand = _impl.graph_integrand
arc_integrand = _impl.arc_integrand
