import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrotor.errors import DomainError, EmptyDomain
from lrotor.momentum import (Constant, CubicFamily, Custom, InverseLinear,
                             Linear, Power, QuadraticFamily, RotationClass,
                             Zero, class_condition, deriv, evaluate,
                             frame_angle, generatrix_curvature,
                             momentum_from_json, momentum_to_json,
                             validity_domain)

H1 = RotationClass.HYPERBOLIC1
H2 = RotationClass.HYPERBOLIC2
ELL = RotationClass.ELLIPTIC
PAR = RotationClass.PARABOLIC

CATALOG_SAMPLES = [
    (Zero(), 3.0),
    (Constant(1.5), 0.7),
    (Linear(2.0), 1.3),
    (InverseLinear(1.0), 0.8),
    (Power(q=2.0, a=1.5), 1.1),
    (Power(q=-0.5, a=1.0), 2.0),
    (QuadraticFamily(mu=1.0, c=1.0), 1.7),
    (QuadraticFamily(mu=2.0, c=-0.5), 1.2),
    (CubicFamily(mu=1.0, c=-2.0), 0.4),
    (CubicFamily(mu=-1.0, c=2.0), 1.5),
]


class TestEvaluate:
    def test_linear(self):
        assert evaluate(Linear(2.0), 1.0) == 0.5

    def test_zero(self):
        assert evaluate(Zero(), 3.0) == 0.0

    def test_cubic_family(self):
        # r / sqrt(mu + c r^2) at r=0.5, mu=1, c=-2
        expected = 0.5 / math.sqrt(0.5)
        assert evaluate(CubicFamily(1.0, -2.0), 0.5) == pytest.approx(
            expected, abs=1e-15)
        assert expected == pytest.approx(0.7071067811865476, abs=1e-15)

    def test_outside_algebraic_domain(self):
        with pytest.raises(DomainError):
            evaluate(CubicFamily(1.0, -2.0), 1.0)  # 1 - 2 < 0
        with pytest.raises(DomainError):
            evaluate(QuadraticFamily(1.0, -1.0), 1.0)  # pole
        with pytest.raises(DomainError):
            evaluate(InverseLinear(1.0), 0.0)

    def test_negative_r_where_defined(self):
        # reflected profile branches need evaluation at negative r
        assert evaluate(QuadraticFamily(1.0, 1.0), -0.75) == pytest.approx(
            -0.75 / 0.25)


class TestDeriv:
    def test_linear_is_constant(self):
        assert deriv(Linear(2.0), 7.0) == 0.5

    def test_inverse_linear(self):
        assert deriv(InverseLinear(1.0), 2.0) == -0.25

    def test_quadratic_family_analytic_vs_difference(self):
        spec = QuadraticFamily(1.0, 1.0)
        assert deriv(spec, 1.0) == pytest.approx(0.25, abs=1e-15)
        h = 1e-5
        fd = (evaluate(spec, 1 + h) - evaluate(spec, 1 - h)) / (2 * h)
        assert deriv(spec, 1.0) == pytest.approx(fd, abs=1e-8)

    @pytest.mark.parametrize("spec,r", CATALOG_SAMPLES)
    def test_matches_central_difference(self, spec, r):
        h = 1e-5
        fd = (evaluate(spec, r - 2 * h) - 8 * evaluate(spec, r - h)
              + 8 * evaluate(spec, r + h) - evaluate(spec, r + 2 * h)) / (12 * h)
        d = deriv(spec, r)
        assert abs(d - fd) <= 1e-7 * (1 + abs(d))

    def test_custom_without_derivative_uses_difference(self):
        spec = Custom(evaluator=lambda r: r ** 3)
        assert deriv(spec, 2.0) == pytest.approx(12.0, rel=1e-9)

    def test_custom_with_derivative(self):
        spec = Custom(evaluator=lambda r: r ** 3,
                      derivative=lambda r: 3 * r * r)
        assert deriv(spec, 2.0) == 12.0


@settings(max_examples=40, deadline=None)
@given(r=st.floats(min_value=0.2, max_value=4.0),
       idx=st.integers(min_value=0, max_value=len(CATALOG_SAMPLES) - 1))
def test_derivative_property(r, idx):
    spec, _ = CATALOG_SAMPLES[idx]
    try:
        d = deriv(spec, r)
        h = 1e-5
        fd = (evaluate(spec, r - 2 * h) - 8 * evaluate(spec, r - h)
              + 8 * evaluate(spec, r + h)
              - evaluate(spec, r + 2 * h)) / (12 * h)
    except DomainError:
        return
    assert abs(d - fd) <= 1e-7 * (1 + abs(d))


class TestValidityDomain:
    def test_zero_elliptic_spacelike_is_halfline(self):
        (lo, hi), = validity_domain(Zero(), ELL, 1)
        assert lo == pytest.approx(0.0, abs=1e-9)
        assert math.isinf(hi)

    def test_zero_hyperbolic1_spacelike_empty(self):
        with pytest.raises(EmptyDomain):
            validity_domain(Zero(), H1, 1)

    def test_cubic_family_boundary(self):
        (lo, hi), = validity_domain(CubicFamily(1.0, -2.0), ELL, 1)
        assert lo == pytest.approx(0.0, abs=1e-9)
        assert hi == pytest.approx(1 / math.sqrt(2), abs=1e-12)

    def test_hopf_outside_window(self):
        (lo, hi), = validity_domain(Power(q=2.0, a=1.2), H1, 1)
        assert lo == pytest.approx(1.2, abs=1e-10)
        assert math.isinf(hi)

    @pytest.mark.parametrize("spec,cls,eps", [
        (CubicFamily(1.0, -2.0), ELL, 1),
        (Power(q=2.0, a=1.2), H1, 1),
        (InverseLinear(1.1), H2, -1),
        (QuadraticFamily(1.0, -1.0), H1, 1),
    ])
    def test_condition_holds_inside_and_fails_outside(self, spec, cls, eps):
        intervals = validity_domain(spec, cls, eps)
        for lo, hi in intervals:
            mid = 0.5 * (lo + min(hi, lo + 10.0))
            assert class_condition(spec, cls, eps, mid) > 0
            for boundary, outside in ((lo, lo - 1e-9), (hi, hi + 1e-9)):
                if boundary <= 0 or math.isinf(boundary):
                    continue
                try:
                    assert class_condition(spec, cls, eps, outside) <= 1e-8
                except DomainError:
                    pass  # algebraic boundary

    def test_hyperbolic2_forces_timelike(self):
        # the eps argument is overridden for this class
        a = validity_domain(InverseLinear(1.0), H2, 1)
        b = validity_domain(InverseLinear(1.0), H2, -1)
        assert a == b


class TestGeneratrixCurvature:
    def test_elliptic_sign(self):
        assert generatrix_curvature(InverseLinear(1.0), ELL, 2.0) == -0.25

    def test_parabolic_sign(self):
        assert generatrix_curvature(InverseLinear(1.0), PAR, 2.0) == 0.25

    @pytest.mark.parametrize("cls", [H1, H2, ELL, PAR])
    def test_constant_momentum_is_geodesic(self, cls):
        assert generatrix_curvature(Constant(1.5), cls, 2.0) == 0.0

    @pytest.mark.parametrize("spec,r", CATALOG_SAMPLES)
    def test_sign_map_exact(self, spec, r):
        # hyperbolic-2 flips the sign of K' exactly
        assert generatrix_curvature(spec, H2, r) + deriv(spec, r) == 0.0
        assert generatrix_curvature(spec, H1, r) == deriv(spec, r)


class TestFrameAngle:
    def test_euclidean_angle(self):
        k0 = math.sqrt(2) / 2
        assert frame_angle(Constant(k0), H2, -1, 1.0) == pytest.approx(
            math.pi / 4, abs=1e-12)

    def test_elliptic_spacelike_zero(self):
        assert frame_angle(Zero(), ELL, 1, 1.0) == 0.0

    def test_hyperbolic1_boundary(self):
        # K = cosh(angle) applies for the spacelike profile; K = 1 is the
        # domain boundary and gives angle 0
        assert frame_angle(Constant(1.0), H1, 1, 1.0) == 0.0

    def test_errors(self):
        with pytest.raises(DomainError):
            frame_angle(Constant(1.5), H2, -1, 1.0)  # |K| > 1
        with pytest.raises(DomainError):
            frame_angle(Constant(0.5), H1, 1, 1.0)  # K < 1 for cosh
        with pytest.raises(DomainError):
            frame_angle(Zero(), PAR, 1, 1.0)  # K <= 0 for exp

    def test_parabolic_angle(self):
        assert frame_angle(Constant(math.exp(-0.3)), PAR, 1, 1.0) == \
            pytest.approx(0.3, abs=1e-14)


def test_power_q1_equals_linear():
    lin = Linear(1.7)
    pw = Power(q=1.0, a=1.7)
    for r in np.linspace(0.1, 5.0, 57):
        assert evaluate(pw, float(r)) == evaluate(lin, float(r))


class TestJson:
    @pytest.mark.parametrize("spec", [s for s, _ in CATALOG_SAMPLES])
    def test_round_trip(self, spec):
        again = momentum_from_json(momentum_to_json(spec))
        assert again == spec

    def test_wire_format(self):
        data = momentum_to_json(CubicFamily(1.0, -2.0))
        assert data == {"variant": "cubic_family", "mu": 1.0, "c": -2.0}

    def test_custom_not_serializable(self):
        with pytest.raises(TypeError):
            momentum_to_json(Custom(evaluator=lambda r: r))

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            momentum_from_json({"variant": "nope"})


class TestValidation:
    def test_parameter_checks(self):
        with pytest.raises(ValueError):
            Linear(0.0)
        with pytest.raises(ValueError):
            Power(q=0.0, a=1.0)
        with pytest.raises(ValueError):
            QuadraticFamily(mu=0.0, c=1.0)
        with pytest.raises(ValueError):
            InverseLinear(-1.0)
