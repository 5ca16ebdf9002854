import math

import numpy as np
import pytest

from lrotor.errors import DomainExit, UnsolvableForDerivative
from lrotor.momentum import (CubicFamily, InverseLinear, Linear, Power,
                             QuadraticFamily, RotationClass,
                             evaluate_array, graph_integrand_array)
from lrotor.quadrature import generatrix_graph
from lrotor.surface import SurfaceSpec
from lrotor.weingarten import (Cubic, CustomRelation, LinearProportional,
                               MERIDIAN_FLAT, Quadratic, SolvedMomentum,
                               ZeroMeanCurvature, closed_form_momentum,
                               hopf_generatrix, ode_rhs, parse_relation,
                               phi, quadratic_graph_closed, relation_label,
                               relation_residual, solve_ode)

H1 = RotationClass.HYPERBOLIC1
H2 = RotationClass.HYPERBOLIC2
ELL = RotationClass.ELLIPTIC
PAR = RotationClass.PARABOLIC


class TestOdeRhs:
    def test_linear(self):
        assert ode_rhs(LinearProportional(2.0), 1.0, 3.0) == 6.0

    def test_cubic(self):
        assert ode_rhs(Cubic(1.0), 2.0, 2.0) == 1.0

    def test_zero_mean(self):
        assert ode_rhs(ZeroMeanCurvature(), 4.0, 2.0) == -0.5

    def test_custom_needs_rhs(self):
        rel = CustomRelation(phi_fn=lambda km, kp: km * km - kp)
        with pytest.raises(UnsolvableForDerivative):
            ode_rhs(rel, 1.0, 1.0)


class TestSolveOde:
    def test_power_solution(self):
        s = solve_ode(LinearProportional(2.0), 1.0, 1.0, 2.0, tol=1e-8)
        assert isinstance(s, SolvedMomentum)
        assert s.status == "reached"
        assert s.evaluator(2.0) == pytest.approx(4.0, abs=1e-8)

    def test_quadratic_solution(self):
        # K(1) = 1/2 fixes c = 1 in K = r/(1 + c r)
        s = solve_ode(Quadratic(1.0), 1.0, 0.5, 2.0, tol=1e-8)
        assert s.evaluator(2.0) == pytest.approx(2.0 / 3.0, abs=1e-8)

    def test_cubic_solution(self):
        # K(1) = 1/sqrt(2) fixes c = 1 in K = r/sqrt(1 + c r^2)
        s = solve_ode(Cubic(1.0), 1.0, 1 / math.sqrt(2), 2.0, tol=1e-8)
        assert s.evaluator(2.0) == pytest.approx(2 / math.sqrt(5), abs=1e-8)

    def test_dense_output_and_derivative(self):
        s = solve_ode(Quadratic(1.0), 1.0, 0.5, 2.0, tol=1e-10)
        for r in np.linspace(1.0, 2.0, 41):
            k_true = r / (1.0 + r)
            assert s.evaluator(float(r)) == pytest.approx(k_true, abs=1e-9)
            assert s.derivative(float(r)) == pytest.approx(
                1.0 / (1.0 + r) ** 2, abs=1e-7)

    @pytest.mark.parametrize("rel,closed", [
        (LinearProportional(2.0), lambda r, r0, k0: k0 * (r / r0) ** 2),
        (LinearProportional(-0.5), lambda r, r0, k0: k0 * (r / r0) ** -0.5),
        (Quadratic(1.0),
         lambda r, r0, k0: r / (1.0 + (r0 / k0 - 1.0) / r0 * r)),
        (Cubic(1.0),
         lambda r, r0, k0: r / math.sqrt(1.0 + (r0 * r0 / (k0 * k0) - 1.0)
                                         / (r0 * r0) * r * r)),
    ])
    def test_matches_closed_form_random_ics(self, rel, closed):
        rng = np.random.default_rng(42)
        tol = 1e-8
        for _ in range(5):
            r0 = float(rng.uniform(0.8, 1.4))
            k0 = float(rng.uniform(0.3, 0.9))
            s = solve_ode(rel, r0, k0, r0 + 1.0, tol=tol)
            grid = np.linspace(r0, r0 + 1.0, 101)
            err = max(abs(s.evaluator(float(r)) - closed(float(r), r0, k0))
                      for r in grid)
            assert err <= 10 * tol

    def test_domain_exit_flagged(self):
        # K = r/2 crosses the Euclidean-profile bound K = 1 at r = 2
        s = solve_ode(LinearProportional(1.0), 1.0, 0.5, 3.0, tol=1e-10,
                      rotation_class=H2, eps=-1)
        assert s.status == "domain_exit"
        assert s.boundary_r == pytest.approx(2.0, abs=1e-8)
        assert s.rs[-1] == pytest.approx(2.0, abs=1e-8)

    def test_initially_outside_raises(self):
        with pytest.raises(DomainExit):
            solve_ode(LinearProportional(1.0), 1.0, 2.0, 3.0,
                      rotation_class=H2, eps=-1)

    def test_backward_integration(self):
        s = solve_ode(LinearProportional(2.0), 2.0, 4.0, 1.0, tol=1e-9)
        assert s.evaluator(1.0) == pytest.approx(1.0, abs=1e-8)


class TestClosedFormMomentum:
    def test_umbilic_case(self):
        assert closed_form_momentum(LinearProportional(1.0), 2.0) == Linear(2.0)

    def test_zero_mean_case(self):
        assert closed_form_momentum(LinearProportional(-1.0), 1.5) == \
            InverseLinear(1.5)
        assert closed_form_momentum(ZeroMeanCurvature(), 1.5) == \
            InverseLinear(1.5)

    def test_quadratic_degenerate(self):
        assert closed_form_momentum(Quadratic(2.0), 0.0) == Linear(2.0)

    def test_families(self):
        assert closed_form_momentum(Quadratic(1.0), 0.5) == \
            QuadraticFamily(1.0, 0.5)
        assert closed_form_momentum(Cubic(-1.0), 2.0) == CubicFamily(-1.0, 2.0)
        assert closed_form_momentum(LinearProportional(2.0), 1.2) == \
            Power(2.0, 1.2)


class TestRelationResidual:
    def test_catenoid_zero_mean(self):
        spec = SurfaceSpec(ELL, 1, InverseLinear(1.0), (0.5, 2.5),
                           math.asinh(0.5))
        assert abs(relation_residual(ZeroMeanCurvature(), spec, 1.5)) <= 1e-14

    def test_quadric_cubic_relation(self):
        # spacelike piece of the first hyperbolic ellipsoid with a = b = 1:
        # mu = -eps a^4/b^2 = -1, c = 2
        spec = SurfaceSpec(H1, 1, CubicFamily(-1.0, 2.0), (0.75, 0.95), 0.0)
        for r in (0.78, 0.85, 0.93):
            assert abs(relation_residual(Cubic(-1.0), spec, r)) <= 1e-12

    def test_umbilic_against_wrong_relation(self):
        R = 2.0
        spec = SurfaceSpec(ELL, 1, Linear(R), (0.5, 2.0),
                           math.sqrt(0.25 + R * R))
        res = relation_residual(LinearProportional(3.0), spec, 1.0)
        assert abs(res) == pytest.approx(2.0 / R, abs=1e-14)

    @pytest.mark.parametrize("q", [-2.0, -1.0, 0.5, 1.0, 2.0])
    def test_power_satisfies_proportional_relation(self, q):
        spec = SurfaceSpec(ELL, 1, Power(q=q, a=1.2), (0.5, 2.4), 0.0)
        for r in np.linspace(0.6, 2.3, 9):
            assert abs(relation_residual(LinearProportional(q), spec,
                                         float(r))) <= 1e-12


class TestHopfGeneratrix:
    def test_elliptic_timelike_at_zero(self):
        assert hopf_generatrix(1.0, 1.5, "III-T", -1, 0.0) == \
            pytest.approx((1.5, 0.0))

    def test_parabolic_log_branch(self):
        assert hopf_generatrix(0.5, 2.0, "IV", 1, 1.0) == \
            pytest.approx((0.0, 1.0))

    def test_domain_errors(self):
        import lrotor.errors as errors
        with pytest.raises(errors.DomainError):
            hopf_generatrix(1.0, 1.0, "I-T", -1, -0.5)
        with pytest.raises(errors.DomainError):
            hopf_generatrix(1.0, 1.0, "II", -1, 2.0)

    @staticmethod
    def _momentum_of_curve(family, q, a, t0, lorentzian, graph_first):
        """Numeric momentum of the profile curve via axis-speed ratio."""
        h = 1e-5
        pts = [hopf_generatrix(q, a, family, 1 if family != "I-T" else -1, t)
               for t in (t0 - h, t0 + h)]
        (g0, r0), (g1, r1) = (pts[0], pts[1])
        if not graph_first:
            (r0, g0), (r1, g1) = (pts[0], pts[1])
        dg = (g1 - g0) / (2 * h)
        dr = (r1 - r0) / (2 * h)
        speed2 = dg * dg - dr * dr if lorentzian else dg * dg + dr * dr
        radius = 0.5 * (r0 + r1)
        return abs(dg) / math.sqrt(abs(speed2)), radius

    @pytest.mark.parametrize("family,graph_first,lorentzian", [
        ("I-T", True, True), ("I-S", True, True),
        ("III-T", False, True), ("III-S", False, True),
        ("II", True, False),
    ])
    @pytest.mark.parametrize("q", [-2.0, 0.5, 2.0])
    def test_momentum_is_power_law(self, family, graph_first, lorentzian, q):
        a = 1.3
        for t0 in (0.4, 0.9):
            k, radius = self._momentum_of_curve(family, q, a, t0,
                                                lorentzian, graph_first)
            assert k == pytest.approx((radius / a) ** q, rel=1e-5)

    def test_catenoid_from_hopf(self):
        # III-S with q = -1 carries momentum (r/a)^(-1) = a/r
        a = 1.0
        for t0 in (0.6, 1.1):
            k, radius = self._momentum_of_curve("III-S", -1.0, a, t0,
                                                True, False)
            assert k == pytest.approx(a / radius, rel=1e-6)

    def test_parabolic_momentum_from_graph_slope(self):
        # u'(v) = eps/K^2
        q, a = 2.0, 1.1
        h = 1e-6
        for v in (0.7, 1.4):
            u0, _ = hopf_generatrix(q, a, "IV", 1, v - h)
            u1, _ = hopf_generatrix(q, a, "IV", 1, v + h)
            k2 = 1.0 / ((u1 - u0) / (2 * h))
            assert math.sqrt(abs(k2)) == pytest.approx((v / a) ** q, rel=1e-6)


QUADRATIC_BRANCHES = [
    # cls, eps, mu, c, interval with mu + c r > 0
    (H1, 1, 1.0, 0.5, (2.1, 3.4)),
    (H1, 1, 1.0, -1.0, (0.55, 0.95)),
    (H1, 1, 1.0, -2.0, (0.345, 0.49)),
    (H1, -1, 1.0, 1.0, (0.5, 2.0)),
    (H2, -1, 1.0, 0.5, (0.3, 1.35)),
    (H2, -1, 1.0, 1.0, (0.5, 2.0)),
    (H2, -1, 1.0, 2.0, (0.5, 2.0)),
    (ELL, 1, 1.0, 1.0, (0.5, 2.0)),
    (ELL, -1, 1.0, 0.5, (2.1, 3.4)),
    (ELL, -1, 1.0, -1.0, (0.55, 0.95)),
    (ELL, -1, 1.0, -2.0, (0.345, 0.49)),
    (PAR, 1, 1.0, 1.0, (0.5, 2.0)),
    (PAR, -1, 1.0, 1.0, (0.5, 2.0)),
]


class TestQuadraticGraphs:
    @pytest.mark.parametrize("cls,eps,mu,c,interval", QUADRATIC_BRANCHES)
    def test_closed_graph_differentiates_to_integrand(self, cls, eps, mu, c,
                                                      interval):
        mom = QuadraticFamily(mu, c)
        rs = np.linspace(interval[0] + 0.01, interval[1] - 0.01, 20)
        h = 1e-6
        for r in rs:
            fd = (quadratic_graph_closed(cls, eps, mu, c, r + h)
                  - quadratic_graph_closed(cls, eps, mu, c, r - h)) / (2 * h)
            direct = float(graph_integrand_array(mom, cls, eps,
                                                 np.array([r]))[0])
            assert fd == pytest.approx(direct, rel=1e-6, abs=1e-6)

    @pytest.mark.parametrize("cls,eps,mu,c,interval", QUADRATIC_BRANCHES)
    def test_closed_graph_matches_quadrature(self, cls, eps, mu, c, interval):
        mom = QuadraticFamily(mu, c)
        samples = generatrix_graph(mom, cls, eps, interval, 65, 0.0)
        base = quadratic_graph_closed(cls, eps, mu, c, samples[0].r)
        for p in samples:
            closed = quadratic_graph_closed(cls, eps, mu, c, p.r) - base
            assert p.g == pytest.approx(closed, abs=1e-7)

    def test_antisymmetry_in_momentum(self):
        rs = np.linspace(0.2, 3.0, 40)
        a = evaluate_array(QuadraticFamily(1.0, 0.5), rs)
        b = evaluate_array(QuadraticFamily(-1.0, -0.5), rs)
        assert np.array_equal(a, -b)


class TestRelationStrings:
    @pytest.mark.parametrize("text,rel", [
        ("linear:q=2", LinearProportional(2.0)),
        ("quadratic:mu=1", Quadratic(1.0)),
        ("cubic:mu=-1", Cubic(-1.0)),
        ("H0", ZeroMeanCurvature()),
    ])
    def test_parse_and_label(self, text, rel):
        assert parse_relation(text) == rel
        assert parse_relation(relation_label(rel)) == rel

    def test_km0(self):
        rel = parse_relation("km0")
        assert rel is MERIDIAN_FLAT
        assert phi(rel, 0.0, 5.0) == 0.0

    def test_bad_syntax(self):
        with pytest.raises(ValueError):
            parse_relation("linear:2")
        with pytest.raises(ValueError):
            parse_relation("frobnicate:mu=1")
