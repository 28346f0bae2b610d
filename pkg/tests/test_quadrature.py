import math

import pytest

from bsfrac import QuadratureError, exp_sinh, tanh_sinh


def test_polynomial():
    r = tanh_sinh(lambda t, da, db: t, 0.0, 3.0)
    assert math.isclose(r.value, 4.5, rel_tol=1e-14)
    assert r.converged


def test_beta_function_with_both_endpoints_singular():
    r = tanh_sinh(lambda t, da, db: da ** -0.5 * db ** -0.5, 0.0, 1.0, tol=1e-13)
    assert math.isclose(r.value, math.pi, rel_tol=1e-13)


def test_one_sided_singularity():
    # int_0^1 t^(-0.9) dt = 10
    r = tanh_sinh(lambda t, da, db: da ** -0.9, 0.0, 1.0, tol=1e-12)
    assert math.isclose(r.value, 10.0, rel_tol=1e-11)


def test_shifted_interval_distances():
    # int_2^5 (5-t)^(-1/2) dt = 2 sqrt(3)
    r = tanh_sinh(lambda t, da, db: db ** -0.5, 2.0, 5.0)
    assert math.isclose(r.value, 2.0 * math.sqrt(3.0), rel_tol=1e-12)


def test_error_estimate_is_bound():
    r = tanh_sinh(lambda t, da, db: math.exp(t), 0.0, 1.0, tol=1e-11)
    assert abs(r.value - (math.e - 1.0)) <= max(r.abs_error_est, 1e-14)


def test_exp_sinh_power_tail():
    r = exp_sinh(lambda t, d: t ** -2.0, 1.0, 1.0)
    assert math.isclose(r.value, 1.0, rel_tol=1e-13)


def test_exp_sinh_endpoint_singularity():
    # int_x^inf (t-x)^(-1/2) t^(-2) dt at x=1: pi/2
    r = exp_sinh(lambda t, d: d ** -0.5 * t ** -2.0, 1.0, 1.0, tol=1e-12)
    assert math.isclose(r.value, math.pi / 2.0, rel_tol=1e-11)


def test_exp_sinh_exponential_decay():
    r = exp_sinh(lambda t, d: math.exp(-t), 0.5, 0.5)
    assert math.isclose(r.value, math.exp(-0.5), rel_tol=1e-12)


def test_stall_raises():
    # decay too slow for the node window: the estimate cannot reach tol
    with pytest.raises(QuadratureError):
        tanh_sinh(lambda t, da, db: da ** -0.9999, 0.0, 1.0, tol=1e-10, max_levels=4)


def test_invalid_interval():
    with pytest.raises(ValueError):
        tanh_sinh(lambda t, da, db: 1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        exp_sinh(lambda t, d: 1.0, 1.0, 0.0)


def test_determinism():
    f = lambda t, da, db: da ** -0.3 * db ** -0.2 * math.cos(t)
    a = tanh_sinh(f, 0.0, 2.0)
    b = tanh_sinh(f, 0.0, 2.0)
    assert a == b
