"""Maximum-likelihood estimation of theta and the Cramer-Rao experiment.

With beta known, the sample score has a unique root in closed form:

    theta_hat = ((beta/n) * sum |x_i|^beta) ** (1/beta)

The experiment harness repeats estimation over many independent trials and
compares the empirical variance of theta_hat against the Cramer-Rao lower
bound theta^2/(n*beta), whose information term is the closed-form
beta/theta^2.  The efficiency ratio tends to 1 from below the band edges as
n grows; at n = 10^4 and 1000 trials it sits well inside [0.9, 1.1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distribution import GenNormParams, require_even_shape, sample

__all__ = [
    "DegenerateDataError",
    "ExperimentConfig",
    "EstimationReport",
    "mle_theta",
    "run_crlb_experiment",
    "trial_seed",
]


class DegenerateDataError(ValueError):
    """Samples admit no interior likelihood maximum (all zero)."""


@dataclass(frozen=True)
class ExperimentConfig:
    """One cell of the CRLB experiment grid.

    trials must be at least 3 so the jackknife delete-one variances
    (divisor trials - 2) are defined.
    """

    beta: int
    theta_true: float
    n: int
    trials: int
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "beta", require_even_shape(self.beta))
        theta = float(self.theta_true)
        if not math.isfinite(theta) or theta <= 0.0:
            raise ValueError(f"theta_true must be positive and finite, got {self.theta_true!r}")
        object.__setattr__(self, "theta_true", theta)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be an integer >= 1, got {self.n!r}")
        if not isinstance(self.trials, int) or self.trials < 3:
            raise ValueError(f"trials must be an integer >= 3, got {self.trials!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed!r}")


@dataclass(frozen=True)
class EstimationReport:
    """Empirical estimator statistics for one config, next to the bound.

    mle_variance is the unbiased (ddof=1) variance across trials;
    variance_stderr is its jackknife standard error; crlb is exactly
    theta_true**2 / (n * beta); efficiency = crlb / mle_variance.
    failed_trials counts degenerate-data aborts (0 in any real run).
    """

    config: ExperimentConfig
    mle_mean: float
    mle_variance: float
    crlb: float
    efficiency: float
    variance_stderr: float
    failed_trials: int = 0


def mle_theta(samples, beta) -> float:
    """The unique stationary point of the sample log-likelihood in theta.

    Closed form ((beta/n) * sum |x_i|^beta)**(1/beta); the sample score at
    the returned value vanishes to roundoff.  All-zero samples put the
    maximum at theta = 0, outside the parameter space, and raise
    DegenerateDataError.
    """
    bf = float(beta)
    if not math.isfinite(bf) or bf <= 0.0:
        raise ValueError(f"beta must be positive and finite, got {beta!r}")
    arr = np.asarray(samples, dtype=np.float64).ravel()
    if arr.size == 0:
        raise ValueError("samples must be nonempty")
    if not np.all(np.isfinite(arr)):
        raise ValueError("samples must all be finite")
    magnitudes = np.abs(arr)
    if not magnitudes.any():
        raise DegenerateDataError(
            "all samples are zero; the likelihood maximum theta=0 is outside the parameter space"
        )
    with np.errstate(over="ignore"):
        mean_power = float(np.mean(magnitudes**bf))
    theta_hat = (bf * mean_power) ** (1.0 / bf)
    if not math.isfinite(theta_hat):
        raise OverflowError("sum of |x|^beta overflowed double precision")
    return theta_hat


def trial_seed(seed: int, trial: int) -> int:
    """The documented per-trial seed split: SeedSequence(seed, spawn_key=(trial,))."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(trial,))
    return int(ss.generate_state(1, np.uint64)[0])


def run_crlb_experiment(config: ExperimentConfig) -> EstimationReport:
    """Estimate theta over config.trials independent repetitions.

    Each trial draws config.n samples seeded by trial_seed(config.seed, t),
    so trials may run in any order or in parallel without changing the
    report; the statistics below are reduced with numpy pairwise summation
    over the trial-indexed array, which is order-independent.  Degenerate
    trials are skipped and counted (never seen for n >= 10).
    """
    params = GenNormParams(theta=config.theta_true, beta=float(config.beta))
    estimates = np.full(config.trials, np.nan)
    failed = 0
    for t in range(config.trials):
        draws = sample(params, config.n, trial_seed(config.seed, t))
        try:
            estimates[t] = mle_theta(draws, config.beta)
        except DegenerateDataError:
            failed += 1
    kept = estimates[np.isfinite(estimates)]
    if kept.size < 3:
        raise DegenerateDataError(
            f"only {kept.size} of {config.trials} trials produced an estimate"
        )
    t_count = int(kept.size)
    mean = float(kept.mean())
    centered = kept - mean
    centered_ss = float(np.sum(centered * centered))
    variance = centered_ss / (t_count - 1)

    # Jackknife the variance estimator: the delete-one unbiased variances
    # have the closed form (centered_ss - d_t^2 * T/(T-1)) / (T-2).
    loo_var = (centered_ss - centered**2 * (t_count / (t_count - 1.0))) / (t_count - 2.0)
    loo_dev = loo_var - loo_var.mean()
    variance_stderr = math.sqrt((t_count - 1.0) / t_count * float(np.sum(loo_dev * loo_dev)))

    crlb = config.theta_true**2 / (config.n * config.beta)
    return EstimationReport(
        config=config,
        mle_mean=mean,
        mle_variance=variance,
        crlb=crlb,
        efficiency=crlb / variance,
        variance_stderr=variance_stderr,
        failed_trials=failed,
    )
