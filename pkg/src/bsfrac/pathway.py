"""Pathway fractional integral operator and the pathway probability
density family.

The operator kernel is ``[1 - a(1-alpha) t / x]**(eta/(1-alpha))`` on
(0, x/(a(1-alpha))): bracketing the whole binomial (rather than only the
ratio) is the reading under which the power image below is an exact Beta
integral, and the quadrature route verifies it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import PreconditionError
from .gammacore import gamma_ratio, ln_gamma_signed
from .msm import ClosedFormImage, FunctionKind
from .quadrature import tanh_sinh
from .series import TERM_CAP, SeriesEval
from .wright import WrightSpec

_HALF_LN_PI = 0.5723649429247001


@dataclass(frozen=True)
class PathwayParams:
    """Operator parameters: scale a > 0, pathway_alpha < 1, and
    eta/(1-pathway_alpha) > -1 so the kernel stays integrable."""

    eta: float
    a: float
    pathway_alpha: float

    def __post_init__(self):
        if not self.a > 0.0:
            raise PreconditionError(f"scale a must be positive, got {self.a!r}")
        if not self.pathway_alpha < 1.0:
            raise PreconditionError(
                f"operator needs pathway_alpha < 1, got {self.pathway_alpha!r}")
        if not self.kernel_exponent > -1.0:
            raise PreconditionError(
                f"eta/(1-alpha) must exceed -1, got {self.kernel_exponent!r}")

    @property
    def kernel_exponent(self) -> float:
        return self.eta / (1.0 - self.pathway_alpha)

    @property
    def cut(self) -> float:
        """a*(1-alpha): the argument scale of the finite support."""
        return self.a * (1.0 - self.pathway_alpha)


def pathway_power_image(params: PathwayParams, beta_exp: float) -> ClosedFormImage:
    """Image of t^(beta_exp - 1): a Beta integral in closed form."""
    if not beta_exp > 0.0:
        raise PreconditionError(f"exponent must be positive, got {beta_exp!r}")
    c = params.kernel_exponent
    pref = gamma_ratio((beta_exp, 1.0 + c), (1.0 + c + beta_exp,))
    pref /= params.cut ** beta_exp
    return ClosedFormImage(pref, params.eta + beta_exp, WrightSpec((), ()), 0.0)


def pathway_bs_closed_form(params: PathwayParams, kind: FunctionKind,
                           lam: float | None = None) -> ClosedFormImage:
    """Wright-series image of t^(sigma-1) S_nu(lam*t), termwise from the
    power image; exponential special cases delegate via nu = -1/2, 1/2."""
    if kind.family == "monomial":
        raise ValueError("monomial images come from pathway_power_image")
    sigma = kind.rho
    if not sigma > 0.0:
        raise PreconditionError(f"exponent must be positive, got {sigma!r}")
    nu = kind.nu
    if lam is None:
        lam = kind.lam
    c = params.kernel_exponent
    lg_nu = ln_gamma_signed(nu + 1.0)
    lg_c = ln_gamma_signed(1.0 + c)
    pref = lg_nu.sign * lg_c.sign * math.exp(
        lg_nu.log_abs + lg_c.log_abs - _HALF_LN_PI)
    pref /= params.cut ** sigma
    spec = WrightSpec(((0.5, 0.5), (sigma, 1.0)),
                      ((nu + 1.0, 0.5), (1.0 + c + sigma, 1.0)))
    return ClosedFormImage(pref, params.eta + sigma, spec, lam / params.cut)


def pathway_quadrature(params: PathwayParams, kind: FunctionKind, x: float,
                       tol: float = 1e-11) -> SeriesEval:
    """Direct tanh-sinh quadrature of the pathway integral at x > 0."""
    if not x > 0.0:
        raise ValueError("the operator is defined for x > 0")
    sigma = kind.rho
    if not sigma > 0.0:
        raise PreconditionError(f"exponent must be positive, got {sigma!r}")
    upper = x / params.cut
    c = params.kernel_exponent
    p0 = sigma - 1.0
    lam = kind.lam
    want_kernel = kind.family != "monomial"

    def integrand(t, da, db):
        val = da ** p0 if p0 != 0.0 else 1.0
        if c != 0.0:
            val *= (db / upper) ** c
        if want_kernel:
            kv, _, _, _ = kernels.bs_series(kind.nu, lam * da, 1e-15, TERM_CAP)
            val *= kv
        return val

    quad = tanh_sinh(integrand, 0.0, upper, tol=tol)
    pref = x ** params.eta
    return SeriesEval(pref * quad.value, abs(pref) * quad.abs_error_est,
                      quad.terms_used, quad.converged)


class Regime(enum.Enum):
    """Density family branch selected by the pathway parameter."""

    SUB = "sub"        # alpha < 1: finite support, extended type-1 beta
    SUPER = "super"    # alpha > 1: heavy tail, extended type-2 beta
    LIMIT = "limit"    # alpha = 1: exponential-tail limit


@dataclass(frozen=True)
class PathwayDensityParams:
    """Parameters of the symmetric pathway density in one dimension."""

    gamma_shape: float
    delta: float
    beta_shape: float
    a: float
    pathway_alpha: float

    def __post_init__(self):
        if not self.gamma_shape > 0.0:
            raise PreconditionError("gamma_shape must be positive")
        if not self.delta > 0.0:
            raise PreconditionError("delta must be positive")
        if self.beta_shape < 0.0:
            raise PreconditionError("beta_shape must be nonnegative")
        if not self.a > 0.0:
            raise PreconditionError("a must be positive")

    @property
    def regime(self) -> Regime:
        if self.pathway_alpha < 1.0:
            return Regime.SUB
        if self.pathway_alpha > 1.0:
            return Regime.SUPER
        return Regime.LIMIT

    @property
    def support_radius(self) -> float:
        """Finite-support edge in the SUB regime, +inf otherwise."""
        if self.regime is Regime.SUB:
            return (self.a * (1.0 - self.pathway_alpha)) ** (-1.0 / self.delta)
        return math.inf


def pathway_norm_const(dp: PathwayDensityParams) -> float:
    """Normalizing constant of the pathway density (three branches)."""
    gd = dp.gamma_shape / dp.delta
    if dp.regime is Regime.SUB:
        be = dp.beta_shape / (1.0 - dp.pathway_alpha)
        coef = (dp.a * (1.0 - dp.pathway_alpha)) ** gd
        return 0.5 * dp.delta * coef * gamma_ratio((gd + be + 1.0,), (gd, be + 1.0))
    if dp.regime is Regime.SUPER:
        be = dp.beta_shape / (dp.pathway_alpha - 1.0)
        if not be - gd > 0.0:
            raise PreconditionError(
                f"type-2 branch needs beta/(alpha-1) - gamma/delta > 0, "
                f"got {be - gd!r}")
        coef = (dp.a * (dp.pathway_alpha - 1.0)) ** gd
        return 0.5 * dp.delta * coef * gamma_ratio((be,), (gd, be - gd))
    if not dp.beta_shape > 0.0:
        raise PreconditionError("the limit branch needs beta_shape > 0")
    return 0.5 * dp.delta * (dp.a * dp.beta_shape) ** gd / math.gamma(gd)


def pathway_density(dp: PathwayDensityParams, x: float) -> float:
    """Density value at x; zero outside the SUB-regime support."""
    c = pathway_norm_const(dp)
    ax = abs(x)
    if ax == 0.0:
        if dp.gamma_shape == 1.0:
            return c
        return 0.0 if dp.gamma_shape > 1.0 else math.inf
    if dp.regime is Regime.SUB:
        base = 1.0 - dp.a * (1.0 - dp.pathway_alpha) * ax ** dp.delta
        if base <= 0.0:
            return 0.0
        expo = dp.beta_shape / (1.0 - dp.pathway_alpha)
        return c * ax ** (dp.gamma_shape - 1.0) * base ** expo
    la = math.log(ax)
    if dp.regime is Regime.SUPER:
        k = dp.a * (dp.pathway_alpha - 1.0)
        be = dp.beta_shape / (dp.pathway_alpha - 1.0)
        if la > 200.0:
            # far tail: the +1 in the base is negligible; work in logs so
            # the power prefactor and the tail cannot overflow separately
            log_f = math.log(c) + (dp.gamma_shape - 1.0) * la - be * (math.log(k) + dp.delta * la)
            return math.exp(log_f) if log_f > -745.0 else 0.0
        tail = (1.0 + k * ax ** dp.delta) ** -be
        if tail == 0.0:
            return 0.0
        return c * ax ** (dp.gamma_shape - 1.0) * tail
    if la > 200.0:
        return 0.0  # exponential tail underflows beyond any power prefactor
    tail = math.exp(-dp.a * dp.beta_shape * ax ** dp.delta)
    if tail == 0.0:
        return 0.0
    return c * ax ** (dp.gamma_shape - 1.0) * tail
