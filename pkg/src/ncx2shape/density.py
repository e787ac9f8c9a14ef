"""Noncentral chi-squared density and its first three log-density derivatives.

Two evaluation routes are kept deliberately separate:

* the Poisson mixture of central chi-squared densities (series route), with
  a provable absolute truncation bound, and
* the closed form built on log-scaled modified Bessel functions (Bessel
  route), which is the production path.

The routes share no special-function code beyond ``math``; comparing them is
therefore a genuine cross-check and the oracle layer only ever touches the
series route.

Derivatives of the log density use the Bessel-ratio closed forms; finite
differences live in :mod:`ncx2shape.oracle` and never run in production.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .bessel import bessel_ratio, log_bessel_i
from .errors import ConvergenceError, DomainError, InternalConsistencyError

_LOG2 = math.log(2.0)

# Noncentrality below this is treated as exactly zero: the Bessel closed
# form is singular in shape at lambda = 0, so everything routes to the
# central formulas there.
LAMBDA_ZERO = 1e-300

# Agreement demanded of the two closed forms of the second derivative.
D2_CONSISTENCY_TOL = 1e-9

_SERIES_MAX_TERMS = 200_000
_REL_TAIL_EPS = 1e-16


@dataclass(frozen=True)
class Params:
    """Degrees of freedom and noncentrality of a noncentral chi-squared law.

    Requires nu > 0 and lam >= 0, both finite.
    """

    nu: float
    lam: float

    def __post_init__(self):
        nu, lam = float(self.nu), float(self.lam)
        if math.isnan(nu) or math.isinf(nu) or nu <= 0.0:
            raise DomainError(f"degrees of freedom must be finite and > 0, got {self.nu}")
        if math.isnan(lam) or math.isinf(lam) or lam < 0.0:
            raise DomainError(f"noncentrality must be finite and >= 0, got {self.lam}")
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "lam", lam)


@dataclass(frozen=True)
class LogDensityDerivatives:
    """Log density l(x) and its first three derivatives at one point."""

    x: float
    l: float
    d1: float
    d2: float
    d3: float


def _check_x(x: float) -> None:
    if math.isnan(x) or x <= 0.0:
        raise DomainError(f"evaluation point must be > 0, got {x}")


def _log_central(nu: float, x: float) -> float:
    return (0.5 * nu - 1.0) * math.log(0.5 * x) - 0.5 * x - _LOG2 - math.lgamma(0.5 * nu)


def central_density(nu: float, x: float) -> float:
    """Central chi-squared density with nu > 0 degrees of freedom.

    Computed in log space and exponentiated, so x deep in the tail or close
    to the x^(nu/2 - 1) singularity poses no overflow problem.
    """
    if math.isnan(nu) or nu <= 0.0:
        raise DomainError(f"degrees of freedom must be > 0, got {nu}")
    _check_x(x)
    return math.exp(_log_central(nu, x))


def _central_peak(m: float) -> float:
    """Peak value of the central density with m > 2 degrees of freedom.

    Decreasing in m, which makes it a uniform-in-x bound on every mixture
    term beyond a given index.
    """
    half = 0.5 * (m - 2.0)
    return math.exp(-half + (0.5 * m - 1.0) * math.log(half) - _LOG2 - math.lgamma(0.5 * m))


def density_series_info(p: Params, x: float, tol: float = 1e-12) -> tuple[float, int]:
    """Poisson-mixture density value together with the truncation index K.

    Terms are accumulated until the remaining Poisson tail mass times a
    uniform bound on the remaining central densities drops below ``tol``
    (absolute error guarantee) and the current term is below machine noise
    relative to the running sum (relative accuracy near the far tail).
    """
    _check_x(x)
    if not tol > 0.0:
        raise DomainError(f"tolerance must be > 0, got {tol}")
    nu, lam = p.nu, p.lam
    if lam < LAMBDA_ZERO:
        return math.exp(_log_central(nu, x)), 0
    half = 0.5 * lam
    log_half = math.log(half)
    log_w = -half  # log Poisson(k; lam/2) weight, k = 0
    total = 0.0
    cum_weight = 0.0
    prev_term = math.inf
    k = 0
    while k < _SERIES_MAX_TERMS:
        term = math.exp(log_w + _log_central(nu + 2.0 * k, x))
        total += term
        cum_weight += math.exp(log_w)
        m_next = nu + 2.0 * (k + 1)
        tail = max(0.0, 1.0 - cum_weight)
        if (
            m_next > 2.0
            and tail * _central_peak(m_next) < tol
            and term <= prev_term
            and (term == 0.0 or term < _REL_TAIL_EPS * total)
        ):
            return total, k
        prev_term = term
        k += 1
        log_w += log_half - math.log(k)
    raise ConvergenceError(f"mixture series not truncated after {k} terms at x={x}")


def density_series(p: Params, x: float, tol: float = 1e-12) -> float:
    """Density by the Poisson mixture of central chi-squared densities."""
    return density_series_info(p, x, tol)[0]


def density_series_grid(p: Params, xs, tol: float = 1e-12) -> np.ndarray:
    """Vectorised mixture density over an array of evaluation points.

    Same lineage and truncation rule as :func:`density_series`; one shared
    truncation index is used for the whole grid, so the result is a smooth
    (finitely parameterised) function of x with no noise-induced wiggles.
    """
    xs = np.asarray(xs, dtype=float)
    if xs.size == 0 or np.any(~np.isfinite(xs)) or np.any(xs <= 0.0):
        raise DomainError("grid points must be finite and > 0")
    if not tol > 0.0:
        raise DomainError(f"tolerance must be > 0, got {tol}")
    nu, lam = p.nu, p.lam
    log_half_x = np.log(0.5 * xs)

    def log_central_vec(m: float) -> np.ndarray:
        return (0.5 * m - 1.0) * log_half_x - 0.5 * xs - _LOG2 - gammaln(0.5 * m)

    if lam < LAMBDA_ZERO:
        return np.exp(log_central_vec(nu))
    half = 0.5 * lam
    log_half = math.log(half)
    log_w = -half
    total = np.zeros_like(xs)
    cum_weight = 0.0
    prev_term = np.full_like(xs, np.inf)
    k = 0
    while k < _SERIES_MAX_TERMS:
        term = np.exp(log_w + log_central_vec(nu + 2.0 * k))
        total += term
        cum_weight += math.exp(log_w)
        m_next = nu + 2.0 * (k + 1)
        tail = max(0.0, 1.0 - cum_weight)
        if m_next > 2.0 and tail * _central_peak(m_next) < tol and np.all(term <= prev_term):
            rel = term / np.maximum(total, 1e-300)
            if np.all((term == 0.0) | (rel < _REL_TAIL_EPS)):
                return total
        prev_term = term
        k += 1
        log_w += log_half - math.log(k)
    raise ConvergenceError(f"mixture series not truncated after {k} terms on grid")


def log_density(p: Params, x: float) -> float:
    """log of the noncentral chi-squared density, composed in log space."""
    _check_x(x)
    nu, lam = p.nu, p.lam
    if lam < LAMBDA_ZERO:
        return _log_central(nu, x)
    t = math.sqrt(lam * x)
    return (
        -0.5 * (x + lam)
        + 0.25 * (nu - 2.0) * (math.log(x) - math.log(lam))
        + log_bessel_i(0.5 * (nu - 2.0), t)
        - _LOG2
    )


def density_bessel(p: Params, x: float) -> float:
    """Density by the closed Bessel form, stable for large x and lambda.

    A noncentrality below ``LAMBDA_ZERO`` routes to the central density,
    where the closed form degenerates.
    """
    return math.exp(log_density(p, x))


def log_density_d1(p: Params, x: float) -> float:
    """First derivative of the log density.

    l'(x) = -1/2 + (nu - 2)/(2x) + sqrt(lam)/(2 sqrt(x)) r_{nu/2}(sqrt(lam x)),
    reducing to the central expression when lambda is zero.
    """
    _check_x(x)
    nu, lam = p.nu, p.lam
    if lam < LAMBDA_ZERO:
        return -0.5 + (nu - 2.0) / (2.0 * x)
    t = math.sqrt(lam * x)
    return -0.5 + (nu - 2.0) / (2.0 * x) + math.sqrt(lam) / (2.0 * math.sqrt(x)) * bessel_ratio(0.5 * nu, t)


def log_density_d2(p: Params, x: float) -> float:
    """Second derivative of the log density, with a built-in self-test.

    The returned value uses the ratio-substituted form

        (2-nu)/(2x^2) + lam/(4x) - nu sqrt(lam)/(4 x^1.5) r - lam/(4x) r^2

    with r = r_{nu/2}(sqrt(lam x)) from the continued-fraction route.  The
    same quantity is then rebuilt through the slope form

        (lam+nu-4)/(4x) - 1/4 - l'(x) (l'(x) + 1 - (nu-4)/(2x))

    where l' is assembled from the independent log-Bessel route for r.  The
    two forms coincide algebraically, so any disagreement beyond rounding
    signals a defect in the Bessel layer and raises
    :class:`InternalConsistencyError`.

    In the strongly noncentral regime lam/x >> 1 the slope form cancels its
    leading O(lam/(4x)) terms down to an O(1) result, so the comparison
    carries a conditioning-aware absolute floor on top of the 1e-9 relative
    tolerance; a real ratio defect overshoots that floor by orders of
    magnitude.
    """
    _check_x(x)
    nu, lam = p.nu, p.lam
    if lam < LAMBDA_ZERO:
        return (2.0 - nu) / (2.0 * x * x)
    t = math.sqrt(lam * x)
    mu = 0.5 * nu
    sqrt_x = math.sqrt(x)
    r = bessel_ratio(mu, t)
    form_ratio = (
        (2.0 - nu) / (2.0 * x * x)
        + lam / (4.0 * x)
        - nu * math.sqrt(lam) / (4.0 * x * sqrt_x) * r
        - lam / (4.0 * x) * r * r
    )
    # independent route: rebuild the ratio from log I values
    r_log = math.exp(log_bessel_i(mu, t) - log_bessel_i(mu - 1.0, t))
    d1 = -0.5 + (nu - 2.0) / (2.0 * x) + math.sqrt(lam) / (2.0 * sqrt_x) * r_log
    form_slope = (lam + nu - 4.0) / (4.0 * x) - 0.25 - d1 * (d1 + 1.0 - (nu - 4.0) / (2.0 * x))
    gap = abs(form_ratio - form_slope)
    conditioning = (
        abs(lam + nu - 4.0) / (4.0 * x)
        + 0.25
        + d1 * d1
        + abs(d1) * (1.0 + abs(nu - 4.0) / (2.0 * x))
    )
    tolerance = D2_CONSISTENCY_TOL * max(1.0, abs(form_ratio), abs(form_slope))
    tolerance += 2.2e-16 * conditioning * (64.0 + 4.0 * t)
    if gap > tolerance:
        raise InternalConsistencyError(
            f"second-derivative forms disagree at nu={nu}, lam={lam}, x={x}: "
            f"{form_ratio!r} vs {form_slope!r}"
        )
    return form_ratio


def log_density_d3(p: Params, x: float) -> float:
    """Third derivative of the log density via the closed form

        l''' = -(lam+nu-4 + 2(nu-4) l') / (4x^2) - l'' (2 l' + 1 - (nu-4)/(2x)).

    The identity also reproduces the central third derivative at lambda = 0
    once l' and l'' take their central reductions.
    """
    _check_x(x)
    nu, lam = p.nu, p.lam
    d1 = log_density_d1(p, x)
    d2 = log_density_d2(p, x)
    return -(lam + nu - 4.0 + 2.0 * (nu - 4.0) * d1) / (4.0 * x * x) - d2 * (
        2.0 * d1 + 1.0 - (nu - 4.0) / (2.0 * x)
    )


def log_density_derivatives(p: Params, x: float) -> LogDensityDerivatives:
    """Bundle l, l', l'', l''' at one evaluation point."""
    return LogDensityDerivatives(
        x=x,
        l=log_density(p, x),
        d1=log_density_d1(p, x),
        d2=log_density_d2(p, x),
        d3=log_density_d3(p, x),
    )
