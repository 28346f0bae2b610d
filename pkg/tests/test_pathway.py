import math
import random

import pytest
from scipy.integrate import quad as scipy_quad

from bsfrac import (
    FunctionKind,
    PathwayDensityParams,
    PathwayParams,
    PreconditionError,
    Regime,
    pathway_bs_closed_form,
    pathway_density,
    pathway_norm_const,
    pathway_power_image,
    pathway_quadrature,
)

import oracles

SIMPLE = PathwayParams(1.0, 1.0, 0.0)
GENERIC = PathwayParams(0.7, 1.3, 0.4)


def termwise_oracle(params, sigma, nu, lam, x, n_terms=60):
    total = 0.0
    for n in range(n_terms):
        c = oracles.kernel_series_coeff(nu, n)
        img = pathway_power_image(params, sigma + n)
        total += c * lam ** n * img.prefactor * x ** img.power_of_x
    return total


class TestOperator:
    def test_simple_monomial(self):
        r = pathway_quadrature(SIMPLE, FunctionKind.monomial(1.0), 2.0)
        assert math.isclose(r.value, 2.0, rel_tol=1e-13)

    def test_quadratic_weight(self):
        params = PathwayParams(2.0, 1.0, 0.0)
        r = pathway_quadrature(params, FunctionKind.monomial(2.0), 1.0)
        assert math.isclose(r.value, 1.0 / 12.0, rel_tol=1e-12)

    def test_power_image_simple_is_exact(self):
        img = pathway_power_image(SIMPLE, 1.0)
        assert img.prefactor == 0.5
        assert img.power_of_x == 2.0
        x = 1.7
        assert img.value_at(x).value == 0.5 * x ** 2.0

    def test_power_image_quadratic(self):
        img = pathway_power_image(PathwayParams(2.0, 1.0, 0.0), 2.0)
        assert img.prefactor == 1.0 / 12.0
        assert img.power_of_x == 4.0

    def test_power_image_matches_quadrature(self):
        img = pathway_power_image(GENERIC, 1.6)
        for x in (0.5, 1.0, 2.0):
            want = pathway_quadrature(GENERIC, FunctionKind.monomial(1.6), x)
            assert math.isclose(img.value_at(x).value, want.value, rel_tol=1e-9)

    def test_closed_form_matches_quadrature(self):
        kind = FunctionKind.bs_kernel(1.1, 0.25, 0.5)
        img = pathway_bs_closed_form(GENERIC, kind)
        got = img.value_at(1.0).value
        want = pathway_quadrature(GENERIC, kind, 1.0)
        assert math.isclose(got, want.value, rel_tol=1e-8)

    def test_closed_form_matches_termwise_oracle(self):
        kind = FunctionKind.bs_kernel(1.1, 0.25, 0.5)
        img = pathway_bs_closed_form(GENERIC, kind)
        for x in (0.6, 1.0, 1.9):
            got = img.value_at(x).value
            want = termwise_oracle(GENERIC, 1.1, 0.25, 0.5, x)
            assert math.isclose(got, want, rel_tol=1e-10)

    def test_zero_scale_reduces_to_power_image(self):
        kind = FunctionKind.bs_kernel(1.1, 0.25, 0.0)
        img = pathway_bs_closed_form(GENERIC, kind)
        r = img.value_at(1.4)
        assert r.terms_used == 1
        assert r.abs_error_est == 0.0
        want = pathway_power_image(GENERIC, 1.1).value_at(1.4)
        assert math.isclose(r.value, want.value, rel_tol=1e-15)

    def test_exponential_case(self):
        img = pathway_bs_closed_form(SIMPLE, FunctionKind.exp_kernel(1.0))
        r = img.value_at(1.0)
        assert math.isclose(r.value, oracles.E_MINUS_2, rel_tol=1e-12)
        q = pathway_quadrature(SIMPLE, FunctionKind.exp_kernel(1.0), 1.0)
        assert math.isclose(q.value, oracles.E_MINUS_2, rel_tol=1e-11)

    def test_expm1_case_matches_quadrature(self):
        kind = FunctionKind.expm1_over_t(1.2)
        img = pathway_bs_closed_form(GENERIC, kind)
        q = pathway_quadrature(GENERIC, kind, 0.8)
        assert math.isclose(img.value_at(0.8).value, q.value, rel_tol=1e-9)

    def test_wright_delta_always_zero(self):
        from bsfrac import wright_delta
        kind = FunctionKind.bs_kernel(1.1, 0.25, 0.5)
        img = pathway_bs_closed_form(GENERIC, kind)
        assert wright_delta(img.spec) == 0.0

    def test_parameter_validation(self):
        with pytest.raises(PreconditionError):
            PathwayParams(1.0, -1.0, 0.0)
        with pytest.raises(PreconditionError):
            PathwayParams(1.0, 1.0, 1.2)
        with pytest.raises(PreconditionError):
            PathwayParams(-2.0, 1.0, 0.0)  # eta/(1-alpha) = -2
        with pytest.raises(PreconditionError):
            pathway_power_image(SIMPLE, 0.0)


class TestDensity:
    def test_triangular(self):
        dp = PathwayDensityParams(1.0, 1.0, 1.0, 1.0, 0.0)
        assert dp.regime is Regime.SUB
        assert pathway_norm_const(dp) == 1.0
        assert pathway_density(dp, 0.5) == 0.5
        assert pathway_density(dp, 1.5) == 0.0
        assert dp.support_radius == 1.0

    def test_cauchy(self):
        dp = PathwayDensityParams(1.0, 2.0, 1.0, 1.0, 2.0)
        assert dp.regime is Regime.SUPER
        c = pathway_norm_const(dp)
        assert math.isclose(c, 1.0 / math.pi, rel_tol=1e-14)
        assert math.isclose(pathway_density(dp, 0.0), 1.0 / math.pi, rel_tol=1e-14)
        assert math.isclose(pathway_density(dp, 1.0), 1.0 / (2.0 * math.pi), rel_tol=1e-13)

    def test_standard_normal(self):
        dp = PathwayDensityParams(1.0, 2.0, 0.5, 1.0, 1.0)
        assert dp.regime is Regime.LIMIT
        c = pathway_norm_const(dp)
        assert math.isclose(c, 1.0 / math.sqrt(2.0 * math.pi), rel_tol=1e-14)
        assert math.isclose(pathway_density(dp, 1.0),
                            math.exp(-0.5) / math.sqrt(2.0 * math.pi), rel_tol=1e-13)

    def test_quadratic_beta_constant(self):
        dp = PathwayDensityParams(2.0, 1.0, 2.0, 1.0, 0.0)
        assert pathway_norm_const(dp) == 6.0
        total, _ = scipy_quad(lambda x: pathway_density(dp, x), -1.0, 1.0)
        assert abs(total - 1.0) <= 1e-9

    def test_super_existence_condition(self):
        with pytest.raises(PreconditionError):
            pathway_norm_const(PathwayDensityParams(3.0, 1.0, 1.0, 1.0, 2.0))

    @pytest.mark.parametrize("seed", range(6))
    def test_normalization_random_admissible(self, seed):
        rng = random.Random(1000 + seed)
        regime = ("sub", "super", "limit")[seed % 3]
        if regime == "sub":
            dp = PathwayDensityParams(rng.uniform(0.6, 2.5), rng.uniform(0.6, 2.5),
                                      rng.uniform(0.2, 2.0), rng.uniform(0.5, 2.0),
                                      rng.uniform(-1.0, 0.8))
            lim = dp.support_radius
            total, _ = scipy_quad(lambda x: pathway_density(dp, x), -lim, lim,
                                  points=[0.0], limit=200)
        else:
            while True:
                gamma_shape = rng.uniform(0.6, 2.0)
                delta = rng.uniform(0.8, 2.2)
                a = rng.uniform(0.5, 2.0)
                if regime == "limit":
                    beta = rng.uniform(0.5, 2.0)
                    alpha = 1.0
                    dp = PathwayDensityParams(gamma_shape, delta, beta, a, alpha)
                    break
                alpha = rng.uniform(1.2, 2.5)
                beta = rng.uniform(0.5, 3.0)
                if beta / (alpha - 1.0) - gamma_shape / delta > 0.2:
                    dp = PathwayDensityParams(gamma_shape, delta, beta, a, alpha)
                    break
            total, _ = scipy_quad(lambda x: pathway_density(dp, x), 0.0, math.inf,
                                  limit=200)
            total *= 2.0
        assert abs(total - 1.0) <= 1e-6
