"""Fisher information of the scale parameter, by four routes.

For the zero-mean generalized normal family with even integer shape beta the
information about theta is exactly beta/theta^2.  That closed form is
cross-checked here against three independent numerical routes:

  * quad_score_variance:  I = integral of score(x)^2 f(x) dx
  * quad_neg_hessian:     I = -integral of d2 log f(x) * f(x) dx
  * mc_score_variance:    sample mean of score^2 over simulated draws

The score and second derivative are

    score(x)      = -1/theta + beta |x|^beta / theta^(beta+1)
    d2 log f(x)   =  1/theta^2 - beta (beta+1) |x|^beta / theta^(beta+2)

computed below with |x/theta|^beta factored out for range safety.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distribution import GenNormParams, _check_finite_x, _pdf_arr, require_even_shape, sample
from .quadrature import QuadResult, integrate_decaying

__all__ = [
    "METHODS",
    "FisherEstimate",
    "score",
    "d2_log_pdf",
    "fisher_closed_form",
    "fisher_quad_score_variance",
    "fisher_quad_neg_hessian",
    "fisher_mc_score_variance",
    "fisher_beta_sweep",
    "expected_score_quad",
]

METHODS = frozenset(
    {"closed_form", "quad_score_variance", "quad_neg_hessian", "mc_score_variance"}
)


@dataclass(frozen=True)
class FisherEstimate:
    """One estimate of I(theta): value, producing method, and an error bound.

    error_estimate is the quadrature error bound or the Monte Carlo standard
    error; exactly 0.0 for the closed form.
    """

    value: float
    method: str
    error_estimate: float

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {sorted(METHODS)}, got {self.method!r}")
        if not (self.value >= 0.0 and math.isfinite(self.value)):
            raise ValueError(f"value must be finite and >= 0, got {self.value!r}")
        if not (self.error_estimate >= 0.0 and math.isfinite(self.error_estimate)):
            raise ValueError(
                f"error_estimate must be finite and >= 0, got {self.error_estimate!r}"
            )


def score(params: GenNormParams, x) -> float:
    """d/dtheta of log f at x: -1/theta + beta*|x|^beta/theta^(beta+1).

    Zero exactly at |x| = theta / beta**(1/beta), negative below, positive above.
    """
    xf = _check_finite_x(x)
    z = abs(xf) / params.theta
    try:
        power = z**params.beta
    except OverflowError:
        power = math.inf
    return (params.beta * power - 1.0) / params.theta


def d2_log_pdf(params: GenNormParams, x) -> float:
    """Second theta-derivative of log f: 1/theta^2 - beta(beta+1)|x|^beta/theta^(beta+2)."""
    xf = _check_finite_x(x)
    z = abs(xf) / params.theta
    try:
        power = z**params.beta
    except OverflowError:
        power = math.inf
    return (1.0 - params.beta * (params.beta + 1.0) * power) / params.theta**2


def _score_arr(params: GenNormParams, x: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        power = np.abs(x / params.theta) ** params.beta
    return (params.beta * power - 1.0) / params.theta


def _neg_d2_arr(params: GenNormParams, x: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        power = np.abs(x / params.theta) ** params.beta
    return (params.beta * (params.beta + 1.0) * power - 1.0) / params.theta**2


def fisher_closed_form(params: GenNormParams) -> FisherEstimate:
    """I(theta) = beta/theta^2, valid for positive even integer beta only.

    Non-even shapes are rejected rather than extrapolated; the quadrature
    and Monte Carlo routes below remain available for any beta > 0.
    """
    b = require_even_shape(params.beta)
    return FisherEstimate(value=b / params.theta**2, method="closed_form", error_estimate=0.0)


def _check_tol(tol: float) -> float:
    tf = float(tol)
    if not (0.0 < tf <= 1e-2):
        raise ValueError(f"tol must be in (0, 1e-2], got {tol!r}")
    return tf


def fisher_quad_score_variance(
    params: GenNormParams, tol: float = 1e-9, max_level: int = 22
) -> FisherEstimate:
    """Variance-of-score route: quadrature of score^2 * pdf over the real line.

    tol is relative; the reported error_estimate is at most tol*value.
    Non-convergence within max_level refinements raises QuadratureError
    carrying the partial value.
    """
    tf = _check_tol(tol)
    res = integrate_decaying(
        lambda x: _score_arr(params, x) ** 2 * _pdf_arr(params, x),
        params.theta,
        params.beta,
        abs_tol=0.0,
        rel_tol=tf,
        max_level=max_level,
    )
    return FisherEstimate(res.value, "quad_score_variance", res.error_estimate)


def fisher_quad_neg_hessian(
    params: GenNormParams, tol: float = 1e-9, max_level: int = 22
) -> FisherEstimate:
    """Negative-expected-Hessian route: quadrature of -d2_log_pdf * pdf."""
    tf = _check_tol(tol)
    res = integrate_decaying(
        lambda x: _neg_d2_arr(params, x) * _pdf_arr(params, x),
        params.theta,
        params.beta,
        abs_tol=0.0,
        rel_tol=tf,
        max_level=max_level,
    )
    return FisherEstimate(res.value, "quad_neg_hessian", res.error_estimate)


def fisher_mc_score_variance(params: GenNormParams, n: int, seed: int) -> FisherEstimate:
    """Monte Carlo route: mean of score^2 over n simulated draws.

    error_estimate is the standard error of that mean (unbiased sample
    standard deviation over sqrt(n)).  Deterministic given seed.
    """
    if not isinstance(n, int) or n < 100:
        raise ValueError(f"n must be an integer >= 100, got {n!r}")
    draws = sample(params, n, seed)
    sq = _score_arr(params, draws) ** 2
    value = float(sq.mean())
    stderr = float(sq.std(ddof=1)) / math.sqrt(n)
    return FisherEstimate(value, "mc_score_variance", stderr)


def expected_score_quad(params: GenNormParams, abs_tol: float = 1e-11) -> QuadResult:
    """Quadrature of score * pdf over the real line (the zero-mean identity)."""
    return integrate_decaying(
        lambda x: _score_arr(params, x) * _pdf_arr(params, x),
        params.theta,
        params.beta,
        abs_tol=abs_tol,
        rel_tol=0.0,
    )


def fisher_beta_sweep(
    theta: float, betas, tol: float = 1e-9
) -> list[tuple[int, float, float]]:
    """Closed-form vs quadrature Fisher information along a sweep of even shapes.

    Returns one (beta, closed_form value, quad_score_variance value) triple
    per entry; along an increasing sweep the values grow without bound
    (linearly in beta at fixed theta).
    """
    betas = list(betas)
    if not betas:
        raise ValueError("betas must be a nonempty sequence of positive even integers")
    out = []
    for b in betas:
        params = GenNormParams(theta=theta, beta=float(require_even_shape(b)))
        closed = fisher_closed_form(params)
        quad = fisher_quad_score_variance(params, tol=tol)
        out.append((int(params.beta), closed.value, quad.value))
    return out
