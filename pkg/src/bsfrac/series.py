"""Series evaluation of the Bessel-Struve kernel, Bessel and Struve
functions, Gauss 2F1, and Appell F3 on its series/collapse domains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import DomainError, DomainUnsupportedError, PoleError
from .gammacore import is_pole

DEFAULT_TOL = 1e-14
TERM_CAP = 10_000


@dataclass(frozen=True)
class SeriesEval:
    """A series value with a truncation-error bound.

    ``abs_error_est`` bounds the discarded tail; when ``converged`` is
    true it does not exceed ``tol * |value|`` for the requested relative
    tolerance.  Identical inputs always produce bit-identical results.
    """

    value: float
    abs_error_est: float
    terms_used: int
    converged: bool


@dataclass(frozen=True)
class F3Args:
    """Parameters and arguments of an Appell F3 evaluation."""

    alpha: float
    alpha_prime: float
    beta: float
    beta_prime: float
    gamma: float
    x: float
    y: float

    def __post_init__(self):
        if is_pole(self.gamma):
            raise PoleError(f"F3 lower parameter gamma={self.gamma!r} at a pole")

    def collapses_y(self) -> bool:
        return self.alpha_prime == 0.0 or self.beta_prime == 0.0

    def collapses_x(self) -> bool:
        return self.alpha == 0.0 or self.beta == 0.0

    def in_series_domain(self) -> bool:
        return abs(self.x) < 1.0 and abs(self.y) < 1.0


def bessel_struve_kernel(nu: float, u: float, tol: float = DEFAULT_TOL,
                         term_cap: int = TERM_CAP) -> SeriesEval:
    """Bessel-Struve kernel S_nu(u), entire in u, for nu > -1.

    Power series with coefficients
    ``Gamma(nu+1) Gamma((n+1)/2) / (sqrt(pi) n! Gamma(n/2+nu+1))``;
    u = 0 returns exactly 1.  Negative u is summed with compensated
    (double-double) arithmetic to survive the alternating cancellation.
    """
    if nu <= -1.0:
        raise DomainError(f"kernel order must satisfy nu > -1, got {nu!r}")
    if not math.isfinite(u):
        raise DomainError("kernel argument must be finite")
    value, err, terms, ok = kernels.bs_series(nu, u, tol, term_cap)
    # the compensated-sum residual can dominate far beyond the guarantee
    # range; never report convergence the estimate does not support
    converged = bool(ok) and err <= tol * max(abs(value), 5e-324)
    return SeriesEval(value, err, terms, converged)


def bessel_first_kind(v: float, z: float, modified: bool = False,
                      tol: float = DEFAULT_TOL, term_cap: int = TERM_CAP) -> SeriesEval:
    """J_v(z) (or I_v(z) when modified) by direct series; v > -1, z >= 0."""
    if v <= -1.0:
        raise DomainError(f"order must satisfy v > -1, got {v!r}")
    if z < 0.0 or not math.isfinite(z):
        raise DomainError("argument must be finite and nonnegative")
    if z == 0.0:
        if v == 0.0:
            return SeriesEval(1.0, 0.0, 1, True)
        value = 0.0 if v > 0.0 else math.inf
        return SeriesEval(value, 0.0, 1, True)
    value, err, terms, ok = kernels.bessel_series(v, z, int(modified), tol, term_cap)
    return SeriesEval(value, err, terms, bool(ok))


def struve(v: float, z: float, modified: bool = False,
           tol: float = DEFAULT_TOL, term_cap: int = TERM_CAP) -> SeriesEval:
    """H_v(z) (or L_v(z) when modified) by direct series; v > -3/2, z >= 0."""
    if v <= -1.5:
        raise DomainError(f"order must satisfy v > -3/2, got {v!r}")
    if z < 0.0 or not math.isfinite(z):
        raise DomainError("argument must be finite and nonnegative")
    if z == 0.0:
        if v > -1.0:
            return SeriesEval(0.0, 0.0, 1, True)
        if v == -1.0:
            # prefactor power hits zero: only the k=0 term survives
            value = 1.0 / (math.gamma(1.5) * math.gamma(0.5))
            return SeriesEval(value, 0.0, 1, True)
        return SeriesEval(math.inf, 0.0, 1, True)
    value, err, terms, ok = kernels.struve_series(v, z, int(modified), tol, term_cap)
    return SeriesEval(value, err, terms, bool(ok))


def gauss_2f1(a: float, b: float, c: float, z: float,
              tol: float = DEFAULT_TOL, term_cap: int = TERM_CAP) -> SeriesEval:
    """Gauss hypergeometric 2F1(a, b; c; z) for z < 1.

    Direct series on [0, 1); the Pfaff transform z -> z/(z-1) maps
    negative arguments into (0, 1).  c must stay off the gamma poles.
    """
    if is_pole(c):
        raise PoleError(f"lower parameter c={c!r} at a pole")
    if z >= 1.0 or not math.isfinite(z):
        raise DomainError(f"argument must satisfy z < 1, got {z!r}")
    if z < 0.0:
        inner = gauss_2f1(a, c - b, c, z / (z - 1.0), tol, term_cap)
        scale = (1.0 - z) ** (-a)
        return SeriesEval(scale * inner.value, abs(scale) * inner.abs_error_est,
                          inner.terms_used, inner.converged)
    value, err, terms, ok = kernels.hyp2f1_series(a, b, c, z, tol, term_cap)
    return SeriesEval(value, err, terms, bool(ok))


def appell_f3(args: F3Args, tol: float = DEFAULT_TOL,
              term_cap: int = TERM_CAP) -> SeriesEval:
    """Appell F3 via its double series or a 2F1 parameter collapse.

    A zero alpha'/beta' kills the y sum (result is 2F1 in x), a zero
    alpha/beta kills the x sum.  Outside both the collapse cases and the
    |x|,|y| < 1 series domain evaluation is refused: any consumer needs
    the termwise-lemma route instead of a silent continuation.
    """
    if args.collapses_y():
        return gauss_2f1(args.alpha, args.beta, args.gamma, args.x, tol, term_cap)
    if args.collapses_x():
        return gauss_2f1(args.alpha_prime, args.beta_prime, args.gamma, args.y,
                         tol, term_cap)
    if not args.in_series_domain():
        raise DomainUnsupportedError(
            f"F3 arguments x={args.x!r}, y={args.y!r} outside the series domain "
            "and no parameter collapse applies")
    value, err, terms, ok = kernels.f3_series(
        args.alpha, args.alpha_prime, args.beta, args.beta_prime, args.gamma,
        args.x, args.y, tol, term_cap)
    return SeriesEval(value, err, terms, bool(ok))
