"""Empirical CDF and Normal-vs-Laplace goodness-of-fit comparison.

KS distance, log-likelihood, and AIC score both candidate families on
the same sample; the smaller AIC wins, ties broken toward smaller KS.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .distfit import (
    LaplaceParams,
    NormalParams,
    fit_laplace,
    fit_normal,
    laplace_cdf,
    normal_cdf,
)
from .errors import DomainError, InsufficientDataError

Params = Union[NormalParams, LaplaceParams]

MODEL_PARAMETER_COUNT = 2  # location + scale, both families


@dataclass(frozen=True)
class EcdfCurve:
    """Right-continuous step function (#points <= x) / n."""

    sorted_x: tuple[float, ...]
    steps: tuple[float, ...]

    def evaluate(self, x: float) -> float:
        return bisect.bisect_right(self.sorted_x, x) / len(self.sorted_x)

    def __call__(self, x: float) -> float:
        return self.evaluate(x)


@dataclass(frozen=True)
class FitScore:
    family: str
    params: Params
    ks_distance: float
    log_likelihood: float
    aic: float


@dataclass(frozen=True)
class GofReport:
    normal: FitScore
    laplace: FitScore
    better_fit: str


def ecdf(sample: Sequence[float]) -> EcdfCurve:
    n = len(sample)
    if n == 0:
        raise InsufficientDataError("ecdf needs a non-empty sample")
    ordered = tuple(sorted(sample))
    return EcdfCurve(sorted_x=ordered, steps=tuple((i + 1) / n for i in range(n)))


def ks_statistic(sample: Sequence[float], cdf: Callable[[float], float]) -> float:
    """sup |ECDF - F| for a continuous F, taking both one-sided gaps at
    every order statistic."""
    if len(sample) == 0:
        raise InsufficientDataError("ks statistic needs a non-empty sample")
    n = len(sample)
    distance = 0.0
    for i, x in enumerate(sorted(sample), start=1):
        f = cdf(x)
        distance = max(distance, i / n - f, f - (i - 1) / n)
    return distance


def log_likelihood(sample: Sequence[float], params: Params) -> float:
    """Sum of log densities under the given fitted family."""
    if len(sample) == 0:
        raise InsufficientDataError("log-likelihood needs a non-empty sample")
    n = len(sample)
    if isinstance(params, LaplaceParams):
        abs_dev = math.fsum(abs(x - params.mu) for x in sample)
        return -n * math.log(2.0 * params.scale) - abs_dev / params.scale
    if isinstance(params, NormalParams):
        sq_dev = math.fsum((x - params.mean) ** 2 for x in sample)
        return (
            -0.5 * n * math.log(2.0 * math.pi * params.sigma * params.sigma)
            - sq_dev / (2.0 * params.sigma * params.sigma)
        )
    raise DomainError(f"unsupported params type {type(params).__name__}")


def _aic(ll: float) -> float:
    return 2.0 * MODEL_PARAMETER_COUNT - 2.0 * ll


def compare_fits(sample: Sequence[float]) -> GofReport:
    """Fit both families and score each with KS distance, LL, and AIC."""
    if len(sample) < 4:
        raise InsufficientDataError(f"fit comparison needs n >= 4, got {len(sample)}")
    normal_params = fit_normal(sample)
    laplace_params = fit_laplace(sample)

    ll_normal = log_likelihood(sample, normal_params)
    ll_laplace = log_likelihood(sample, laplace_params)
    normal_score = FitScore(
        family="normal",
        params=normal_params,
        ks_distance=ks_statistic(sample, lambda x: normal_cdf(x, normal_params)),
        log_likelihood=ll_normal,
        aic=_aic(ll_normal),
    )
    laplace_score = FitScore(
        family="laplace",
        params=laplace_params,
        ks_distance=ks_statistic(sample, lambda x: laplace_cdf(x, laplace_params)),
        log_likelihood=ll_laplace,
        aic=_aic(ll_laplace),
    )

    if normal_score.aic != laplace_score.aic:
        better = min((normal_score, laplace_score), key=lambda s: s.aic)
    else:
        better = min((normal_score, laplace_score), key=lambda s: s.ks_distance)
    return GofReport(normal=normal_score, laplace=laplace_score, better_fit=better.family)
