"""Shape classification of the noncentral chi-squared density.

For nu >= 2 the density is log-concave.  For 0 < nu < 2 there is a critical
noncentrality separating two regimes: the density is decreasing for
lam <= critical and bimodal (one mode at zero, one interior) above it.  The
critical value is the unique zero of a scalar indicator built from the
Bessel ratio, and the zero is bracketed and bisected here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .bessel import bessel_ratio
from .density import Params, log_density_d2
from .errors import BracketError, ConvergenceError, DomainError

DEFAULT_TOL = 1e-8

# Critical noncentrality at nu = 2, the endpoint of the sub-two regime.
# Decreasing and log-concave overlap exactly there.
CRITICAL_LAMBDA_AT_2 = 2.0

_INFLECTION_REL_TOL = 1e-10


@dataclass(frozen=True)
class CriticalLambda:
    """Critical noncentrality for 0 < nu < 2, with solver metadata.

    ``bracket`` is the initial sign-changing interval handed to bisection;
    ``iterations`` counts the bisection steps to reach width < ``tol``.
    """

    nu: float
    lambda_nu: float
    bracket: tuple[float, float]
    tol: float
    iterations: int


@dataclass(frozen=True)
class ShapeReport:
    """Four-way shape flags for one parameter pair.

    ``critical_lambda`` is populated exactly when 0 < nu <= 2.  At nu = 2
    the decreasing and log-concave categories overlap for lam <= 2.
    """

    params: Params
    log_concave: bool
    decreasing: bool
    bimodal: bool
    convex_then_concave: bool
    critical_lambda: float | None


def criticality_indicator(nu: float, lam: float) -> float:
    """Scalar whose sign separates decreasing from bimodal, for 0 < nu < 2.

    With t = sqrt(lam (lam + nu - 4)) the indicator is

        r_{nu/2}(t) - (lam - 2) / t,

    defined for lam > 4 - nu.  It is negative below the critical
    noncentrality and positive above it, crossing zero exactly once.
    """
    if math.isnan(nu) or not 0.0 < nu < 2.0:
        raise DomainError(f"indicator requires 0 < nu < 2, got {nu}")
    if math.isnan(lam) or lam <= 4.0 - nu:
        raise DomainError(f"indicator requires lam > 4 - nu = {4.0 - nu}, got {lam}")
    t = math.sqrt(lam * (lam + nu - 4.0))
    return bessel_ratio(0.5 * nu, t) - (lam - 2.0) / t


@lru_cache(maxsize=None)
def _critical_lambda_cached(nu: float, tol: float) -> CriticalLambda:
    edge = 4.0 - nu
    # The indicator falls to -inf at the domain edge; shrink the offset until
    # a negative value is seen.  Near nu = 2 the root sits within ~1e-3 of
    # the edge, so several shrink steps can be needed.
    delta = 1e-2
    while criticality_indicator(nu, edge + delta) >= 0.0:
        delta *= 0.1
        if delta < 1e-14:
            raise BracketError(f"no negative indicator value found near lam = {edge}")
    lo = edge + delta
    hi = max(8.0, edge + 1.0)
    while criticality_indicator(nu, hi) <= 0.0:
        hi *= 2.0
        if hi > 1e9:
            raise BracketError(f"no positive indicator value found up to lam = {hi}")
    bracket = (lo, hi)
    iterations = 0
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if criticality_indicator(nu, mid) < 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
        if iterations > 20_000:
            raise ConvergenceError(f"bisection stalled for critical noncentrality at nu={nu}")
    return CriticalLambda(
        nu=nu, lambda_nu=0.5 * (lo + hi), bracket=bracket, tol=tol, iterations=iterations
    )


def critical_lambda(nu: float, tol: float = DEFAULT_TOL) -> CriticalLambda:
    """Critical noncentrality for 0 < nu < 2, by guarded bisection.

    The single sign change of :func:`criticality_indicator` makes bisection
    globally convergent.  Results are cached per (nu, tol) for the life of
    the process; the cache is thread-safe and semantically invisible.

    Values near the endpoints converge slowly in nu (the critical value
    approaches 4 as nu drops to 0 and 2 as nu rises to 2) but are still
    computed directly, with no asymptotic shortcut.
    """
    if math.isnan(nu) or not 0.0 < nu < 2.0:
        raise DomainError(f"critical noncentrality is defined for 0 < nu < 2, got {nu}")
    if math.isnan(tol) or tol <= 0.0:
        raise DomainError(f"tolerance must be > 0, got {tol}")
    return _critical_lambda_cached(float(nu), float(tol))


def classify(p: Params, tol: float = DEFAULT_TOL) -> ShapeReport:
    """Classify the density shape for one parameter pair.

    * log-concave exactly when nu >= 2,
    * log-convex then log-concave exactly when nu < 2 and lam > 0,
    * for nu <= 2: decreasing when lam is at most the critical value
      (taken as 2 at nu = 2), bimodal above it (nu < 2 only).
    """
    nu, lam = p.nu, p.lam
    log_concave = nu >= 2.0
    convex_then_concave = nu < 2.0 and lam > 0.0
    crit: float | None
    if nu > 2.0:
        decreasing = False
        bimodal = False
        crit = None
    elif nu == 2.0:
        crit = CRITICAL_LAMBDA_AT_2
        decreasing = lam <= crit
        bimodal = False
    else:
        crit = critical_lambda(nu, tol).lambda_nu
        decreasing = lam <= crit
        bimodal = lam > crit
    return ShapeReport(
        params=p,
        log_concave=log_concave,
        decreasing=decreasing,
        bimodal=bimodal,
        convex_then_concave=convex_then_concave,
        critical_lambda=crit,
    )


def inflection_point(p: Params) -> float:
    """Unique zero of the log-density second derivative, for 0 < nu < 2, lam > 0.

    The second derivative is positive for small x and negative for large x
    with a single sign change, so the bracket search (shrink the left end
    until positive, grow the right end until negative) cannot fail unless a
    lower layer is broken.
    """
    nu, lam = p.nu, p.lam
    if not 0.0 < nu < 2.0:
        raise DomainError(f"inflection point requires 0 < nu < 2, got nu={nu}")
    if lam <= 0.0:
        raise DomainError("inflection point requires lam > 0")
    hi = max(1.0, lam + nu)
    while log_density_d2(p, hi) >= 0.0:
        hi *= 2.0
        if hi > 1e15:
            raise BracketError("no log-concave region found at large x")
    lo = min(1.0, 0.5 * hi)
    while log_density_d2(p, lo) <= 0.0:
        lo *= 0.25
        if lo < 1e-280:
            raise BracketError("no log-convex region found at small x")
    while hi - lo > _INFLECTION_REL_TOL * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if log_density_d2(p, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
