# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: elementwise momentum and integrand evaluation.

Shares its encoding with ``_fallback.py`` (momentum codes 0..6, class
codes 0..3, NaN for out-of-domain points).
"""

from libc.math cimport sqrt, pow, NAN

import numpy as np

BACKEND = "compiled"

ZERO, CONSTANT, LINEAR, INVERSE_LINEAR, POWER, QUADRATIC, CUBIC = range(7)
H1, H2, ELL, PAR = range(4)


cdef inline double _mom(int code, double p1, double p2, double r) nogil:
    cdef double den, rad
    if code == 0:      # zero
        return 0.0
    elif code == 1:    # constant
        return p1
    elif code == 2:    # linear
        return r / p1
    elif code == 3:    # inverse linear
        if r == 0.0:
            return NAN
        return p1 / r
    elif code == 4:    # power
        if r <= 0.0:
            return NAN
        return pow(r / p2, p1)
    elif code == 5:    # quadratic family
        den = p1 + p2 * r
        if den == 0.0:
            return NAN
        return r / den
    elif code == 6:    # cubic family
        rad = p1 + p2 * r * r
        if rad <= 0.0:
            return NAN
        return r / sqrt(rad)
    return NAN


cdef inline double _dmom(int code, double p1, double p2, double r) nogil:
    cdef double den, rad
    if code == 0 or code == 1:
        return 0.0
    elif code == 2:
        return 1.0 / p1
    elif code == 3:
        if r == 0.0:
            return NAN
        return -p1 / (r * r)
    elif code == 4:
        if r <= 0.0:
            return NAN
        return (p1 / p2) * pow(r / p2, p1 - 1.0)
    elif code == 5:
        den = p1 + p2 * r
        if den == 0.0:
            return NAN
        return p1 / (den * den)
    elif code == 6:
        rad = p1 + p2 * r * r
        if rad <= 0.0:
            return NAN
        return p1 / (rad * sqrt(rad))
    return NAN


cdef inline double _graph(int cls, double eps, double k) nogil:
    cdef double rad
    if cls == 0:
        rad = k * k - eps
    elif cls == 1:
        rad = 1.0 - k * k
    elif cls == 2:
        rad = k * k + eps
    else:
        if k > 0.0:
            return eps / (k * k)
        return NAN
    if rad > 0.0:
        return k / sqrt(rad)
    return NAN


cdef inline double _arc(int cls, double eps, double k) nogil:
    cdef double rad
    if cls == 0:
        rad = k * k - eps
    elif cls == 1:
        rad = 1.0 - k * k
    elif cls == 2:
        rad = k * k + eps
    else:
        if k > 0.0:
            return 1.0 / k
        return NAN
    if rad > 0.0:
        return 1.0 / sqrt(rad)
    return NAN


def momentum_values(int code, double p1, double p2, r):
    rr = np.ascontiguousarray(r, dtype=np.float64).ravel()
    out = np.empty_like(rr)
    cdef double[::1] rv = rr
    cdef double[::1] ov = out
    cdef Py_ssize_t i, n = rv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _mom(code, p1, p2, rv[i])
    return out.reshape(np.shape(r))


def momentum_derivs(int code, double p1, double p2, r):
    rr = np.ascontiguousarray(r, dtype=np.float64).ravel()
    out = np.empty_like(rr)
    cdef double[::1] rv = rr
    cdef double[::1] ov = out
    cdef Py_ssize_t i, n = rv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _dmom(code, p1, p2, rv[i])
    return out.reshape(np.shape(r))


def graph_transform(int cls, double eps, k):
    kk = np.ascontiguousarray(k, dtype=np.float64).ravel()
    out = np.empty_like(kk)
    cdef double[::1] kv = kk
    cdef double[::1] ov = out
    cdef Py_ssize_t i, n = kv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _graph(cls, eps, kv[i])
    return out.reshape(np.shape(k))


def arc_transform(int cls, double eps, k):
    kk = np.ascontiguousarray(k, dtype=np.float64).ravel()
    out = np.empty_like(kk)
    cdef double[::1] kv = kk
    cdef double[::1] ov = out
    cdef Py_ssize_t i, n = kv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _arc(cls, eps, kv[i])
    return out.reshape(np.shape(k))


def graph_integrand(int cls, double eps, int code, double p1, double p2, r):
    rr = np.ascontiguousarray(r, dtype=np.float64).ravel()
    out = np.empty_like(rr)
    cdef double[::1] rv = rr
    cdef double[::1] ov = out
    cdef Py_ssize_t i, n = rv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _graph(cls, eps, _mom(code, p1, p2, rv[i]))
    return out.reshape(np.shape(r))


def arc_integrand(int cls, double eps, int code, double p1, double p2, r):
    rr = np.ascontiguousarray(r, dtype=np.float64).ravel()
    out = np.empty_like(rr)
    cdef double[::1] rv = rr
    cdef double[::1] ov = out
    cdef Py_ssize_t i, n = rv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _arc(cls, eps, _mom(code, p1, p2, rv[i]))
    return out.reshape(np.shape(r))
