"""Marichev-Saigo-Maeda left/right fractional integral operators.

Three independent routes are provided for every image:

* closed-form power images (``msm_power_image``),
* closed-form Wright-series images of the Bessel-Struve kernel and its
  special cases (``msm_bs_closed_form``), assembled termwise from the
  power images,
* direct double-exponential quadrature of the defining integrals in the
  F3-collapse regimes (``msm_quadrature``).

The right-hand kernel carries the Appell arguments in the order
``(1 - x/t, 1 - t/x)``: of the two conventions in circulation this is
the one consistent with the right-hand power-image gamma ratio and its
validity conditions, which the quadrature route confirms numerically.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import DomainUnsupportedError, PreconditionError
from .gammacore import gamma_ratio, ln_gamma_signed
from .quadrature import exp_sinh, tanh_sinh
from .series import TERM_CAP, SeriesEval
from .wright import WrightSpec, wright_eval

_HALF_LN_PI = 0.5723649429247001


class Side(enum.Enum):
    """Operator orientation: LEFT integrates over (0, x), RIGHT over (x, inf)."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class MsmParams:
    """The five operator parameters; gamma must be positive."""

    alpha: float
    alpha_prime: float
    beta: float
    beta_prime: float
    gamma: float

    def __post_init__(self):
        if not self.gamma > 0.0:
            raise PreconditionError(f"gamma must be positive, got {self.gamma!r}")


_SPECIAL_NU = {
    "exp": -0.5,
    "expm1_over_t": 0.5,
    "i0_plus_l0": 0.0,
    "two_i1_plus_two_l1_over_t": 1.0,
}


@dataclass(frozen=True)
class FunctionKind:
    """Integrand family t^(rho-1) * f(t) fed to an operator.

    ``monomial`` has no kernel factor; ``bs`` is the Bessel-Struve kernel
    of order nu with argument scale lam; the named special cases pin nu
    to -1/2, 1/2, 0, 1 with lam = 1 (exponential and Bessel/Struve
    combinations respectively).
    """

    family: str
    rho: float
    nu: float = 0.0
    lam: float = 1.0

    def __post_init__(self):
        if self.family not in ("monomial", "bs") and self.family not in _SPECIAL_NU:
            raise ValueError(f"unknown integrand family {self.family!r}")
        if self.family == "bs" and not self.nu > -1.0:
            raise ValueError(f"kernel order must exceed -1, got {self.nu!r}")
        if self.family in _SPECIAL_NU:
            object.__setattr__(self, "nu", _SPECIAL_NU[self.family])
            object.__setattr__(self, "lam", 1.0)

    @classmethod
    def monomial(cls, rho: float) -> "FunctionKind":
        return cls("monomial", rho)

    @classmethod
    def bs_kernel(cls, rho: float, nu: float, lam: float = 1.0) -> "FunctionKind":
        return cls("bs", rho, nu, lam)

    @classmethod
    def exp_kernel(cls, rho: float) -> "FunctionKind":
        return cls("exp", rho)

    @classmethod
    def expm1_over_t(cls, rho: float) -> "FunctionKind":
        return cls("expm1_over_t", rho)

    @classmethod
    def i0_plus_l0(cls, rho: float) -> "FunctionKind":
        return cls("i0_plus_l0", rho)

    @classmethod
    def two_i1_plus_two_l1_over_t(cls, rho: float) -> "FunctionKind":
        return cls("two_i1_plus_two_l1_over_t", rho)


@dataclass(frozen=True)
class ClosedFormImage:
    """prefactor * x**power_of_x * Psi(argument_scale * x**(+-1)).

    The Wright argument uses x for left images and 1/x for right ones
    (``inverse_argument``).  An empty spec with zero scale reduces to the
    plain power term.
    """

    prefactor: float
    power_of_x: float
    spec: WrightSpec
    argument_scale: float
    inverse_argument: bool = False

    def value_at(self, x: float, tol: float = 1e-14,
                 term_cap: int = TERM_CAP) -> SeriesEval:
        if not x > 0.0:
            raise ValueError("images are defined for x > 0")
        arg = self.argument_scale * (1.0 / x if self.inverse_argument else x)
        w = wright_eval(self.spec, arg, tol, term_cap)
        scale = self.prefactor * x ** self.power_of_x
        return SeriesEval(scale * w.value, abs(scale) * w.abs_error_est,
                          w.terms_used, w.converged)


def _left_condition(p: MsmParams, rho: float) -> float:
    return max(0.0, p.alpha + p.alpha_prime + p.beta - p.gamma,
               p.alpha_prime - p.beta_prime)


def _right_condition(p: MsmParams, rho: float) -> float:
    return 1.0 + min(-p.beta, p.alpha + p.alpha_prime - p.gamma,
                     p.alpha + p.beta_prime - p.gamma)


def msm_power_image(side: Side, params: MsmParams, rho: float) -> ClosedFormImage:
    """Closed-form image of t^(rho-1) under the chosen operator."""
    p = params
    if side is Side.LEFT:
        bound = _left_condition(p, rho)
        if not rho > bound:
            raise PreconditionError(
                f"left power image needs rho > {bound!r}, got {rho!r}")
        pref = gamma_ratio(
            (rho, rho + p.gamma - p.alpha - p.alpha_prime - p.beta,
             rho + p.beta_prime - p.alpha_prime),
            (rho + p.beta_prime, rho + p.gamma - p.alpha - p.alpha_prime,
             rho + p.gamma - p.alpha_prime - p.beta))
    else:
        bound = _right_condition(p, rho)
        if not rho < bound:
            raise PreconditionError(
                f"right power image needs rho < {bound!r}, got {rho!r}")
        pref = gamma_ratio(
            (1.0 - rho - p.beta, 1.0 - rho + p.alpha + p.alpha_prime - p.gamma,
             1.0 - rho + p.alpha + p.beta_prime - p.gamma),
            (1.0 - rho, 1.0 - rho + p.alpha + p.alpha_prime + p.beta_prime - p.gamma,
             1.0 - rho + p.alpha - p.beta))
    power = rho + p.gamma - p.alpha - p.alpha_prime - 1.0
    return ClosedFormImage(pref, power, WrightSpec((), ()), 0.0,
                           inverse_argument=(side is Side.RIGHT))


def msm_bs_closed_form(side: Side, params: MsmParams, kind: FunctionKind,
                       lam: float | None = None) -> ClosedFormImage:
    """Wright-series image of t^(rho-1) S_nu(lam*t) (left) or
    t^(rho-1) S_nu(lam/t) (right), assembled termwise from the power
    images applied to the kernel series.

    Special kinds delegate with nu fixed at -1/2, 1/2, 0 or 1; they are
    never separate formulas.
    """
    if kind.family == "monomial":
        raise ValueError("monomial images come from msm_power_image")
    p = params
    rho = kind.rho
    nu = kind.nu
    if lam is None:
        lam = kind.lam
    if side is Side.LEFT:
        bound = _left_condition(p, rho)
        if not rho > bound:  # shift rho+n only strengthens the margin
            raise PreconditionError(
                f"left image needs rho > {bound!r}, got {rho!r}")
        upper = ((0.5, 0.5), (rho, 1.0),
                 (rho + p.gamma - p.alpha - p.alpha_prime - p.beta, 1.0),
                 (rho + p.beta_prime - p.alpha_prime, 1.0))
        lower = ((nu + 1.0, 0.5), (rho + p.beta_prime, 1.0),
                 (rho + p.gamma - p.alpha - p.alpha_prime, 1.0),
                 (rho + p.gamma - p.alpha_prime - p.beta, 1.0))
    else:
        bound = _right_condition(p, rho)
        if not rho < bound:  # shift rho-n only strengthens the margin
            raise PreconditionError(
                f"right image needs rho < {bound!r}, got {rho!r}")
        upper = ((0.5, 0.5), (1.0 - rho - p.beta, 1.0),
                 (1.0 - rho + p.alpha + p.alpha_prime - p.gamma, 1.0),
                 (1.0 - rho + p.alpha + p.beta_prime - p.gamma, 1.0))
        lower = ((nu + 1.0, 0.5), (1.0 - rho, 1.0),
                 (1.0 - rho + p.alpha + p.alpha_prime + p.beta_prime - p.gamma, 1.0),
                 (1.0 - rho + p.alpha - p.beta, 1.0))
    lg = ln_gamma_signed(nu + 1.0)
    pref = lg.sign * math.exp(lg.log_abs - _HALF_LN_PI)
    power = rho + p.gamma - p.alpha - p.alpha_prime - 1.0
    return ClosedFormImage(pref, power, WrightSpec(upper, lower), lam,
                           inverse_argument=(side is Side.RIGHT))


def _kernel_value(kind: FunctionKind, u: float) -> float:
    value, _, _, _ = kernels.bs_series(kind.nu, u, 1e-15, TERM_CAP)
    return value


def msm_quadrature(side: Side, params: MsmParams, kind: FunctionKind,
                   x: float, tol: float = 1e-10) -> SeriesEval:
    """Direct double-exponential quadrature of the defining integral.

    Requires an F3 collapse along the whole path: alpha' = 0 or beta' = 0
    for LEFT, alpha = 0 or beta = 0 for RIGHT (the surviving 2F1 factor
    is then evaluable at every node).  Endpoint singularities are driven
    through the exact node-to-endpoint distances.
    """
    if not x > 0.0:
        raise ValueError("operators are defined for x > 0")
    p = params
    rho = kind.rho
    lam = kind.lam
    want_kernel = kind.family != "monomial"
    if side is Side.LEFT:
        if not (p.alpha_prime == 0.0 or p.beta_prime == 0.0):
            raise DomainUnsupportedError(
                "left quadrature needs alpha'=0 or beta'=0 to collapse the kernel")
        bound = _left_condition(p, rho)
        if not rho > bound:
            raise PreconditionError(
                f"left integral needs rho > {bound!r}, got {rho!r}")
        p0 = rho - p.alpha_prime - 1.0
        gm1 = p.gamma - 1.0
        a_, b_, c_ = p.alpha, p.beta, p.gamma

        def left_integrand(t, da, db):
            val = da ** p0 if p0 != 0.0 else 1.0
            if gm1 != 0.0:
                val *= db ** gm1
            val *= kernels.hyp2f1_kernel(a_, b_, c_, db / x, da / x)
            if want_kernel:
                val *= _kernel_value(kind, lam * da)
            return val

        quad = tanh_sinh(left_integrand, 0.0, x, tol=tol)
        pref = x ** (-p.alpha) / math.gamma(p.gamma)
    else:
        if not (p.alpha == 0.0 or p.beta == 0.0):
            raise DomainUnsupportedError(
                "right quadrature needs alpha=0 or beta=0 to collapse the kernel")
        bound = _right_condition(p, rho)
        if not rho < bound:
            raise PreconditionError(
                f"right integral needs rho < {bound!r}, got {rho!r}")
        p0 = rho - p.alpha - 1.0
        gm1 = p.gamma - 1.0
        a_, b_, c_ = p.alpha_prime, p.beta_prime, p.gamma

        def right_integrand(t, d):
            val = t ** p0
            if gm1 != 0.0:
                val *= d ** gm1
            val *= kernels.hyp2f1_kernel(a_, b_, c_, -d / x, 0.0)
            if want_kernel:
                val *= _kernel_value(kind, lam / t)
            return val

        quad = exp_sinh(right_integrand, x, x, tol=tol)
        pref = x ** (-p.alpha_prime) / math.gamma(p.gamma)
    return SeriesEval(pref * quad.value, abs(pref) * quad.abs_error_est,
                      quad.terms_used, quad.converged)
