"""Shapiro-Wilk test for normality.

W = (sum a_i x_(i))^2 / sum (x_i - xbar)^2, with the weight vector a
built from Blom plotting positions normalized to unit length and the
two extreme weights replaced by Royston's polynomial corrections
(Royston 1992, Statistics and Computing 2; Remark AS R94, 1995). The
p-value comes from Royston's normalizing transformation of (1 - W):
exact for n = 3, a log-transform with polynomial mean/sd in n for
4 <= n <= 11, and in ln(n) for n >= 12, referred to the upper normal
tail. Royston validated the approximation up to n = 5000; beyond that
the result is still computed but flagged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .distfit import normal_quantile
from .errors import DegenerateSampleError, InsufficientDataError

ROYSTON_MAX_VALIDATED_N = 5000

_SQRT2 = math.sqrt(2.0)

# Polynomial coefficients (ascending powers), Royston 1992 / AS R94.
_EXTREME_1 = (0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056)
_EXTREME_2 = (0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633)
_SMALL_N_MEAN = (0.5440, -0.39978, 0.025054, -6.714e-4)
_SMALL_N_LOG_SD = (1.3822, -0.77857, 0.062767, -0.0020322)
_LARGE_N_MEAN = (-1.5861, -0.31082, -0.083751, 0.0038915)
_LARGE_N_LOG_SD = (-0.4803, -0.082676, 0.0030302)
_SMALL_N_GAMMA = (-2.273, 0.459)
_TINY_P = 1e-19


@dataclass(frozen=True)
class SWResult:
    n: int
    w: float
    p_value: float
    large_n_warning: bool


def _poly(coefficients: tuple[float, ...], x: float) -> float:
    acc = 0.0
    for c in reversed(coefficients):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=128)
def _coefficients(n: int) -> tuple[float, ...]:
    if n == 3:
        root_half = math.sqrt(0.5)
        return (root_half, 0.0, -root_half)

    half = n // 2
    # Blom scores for the lower half; all negative.
    scores = [normal_quantile((i - 0.375) / (n + 0.25)) for i in range(1, half + 1)]
    norm_sq = 2.0 * math.fsum(v * v for v in scores)
    norm = math.sqrt(norm_sq)
    u = 1.0 / math.sqrt(n)

    a = [0.0] * n
    a1 = _poly(_EXTREME_1, u) - scores[0] / norm
    if n > 5:
        a2 = _poly(_EXTREME_2, u) - scores[1] / norm
        rescale_sq = (norm_sq - 2.0 * scores[0] ** 2 - 2.0 * scores[1] ** 2) / (
            1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2
        )
        a[1] = a2
        interior_start = 2
    else:
        rescale_sq = (norm_sq - 2.0 * scores[0] ** 2) / (1.0 - 2.0 * a1 * a1)
        interior_start = 1
    a[0] = a1
    rescale = math.sqrt(rescale_sq)
    for i in range(interior_start, half):
        a[i] = -scores[i] / rescale
    for i in range(half):
        a[n - 1 - i] = -a[i]
    return tuple(a)


def sw_coefficients(n: int) -> tuple[float, ...]:
    """Weight vector a for sample size n: antisymmetric, unit norm,
    positive weights on the lower order statistics."""
    if n < 3:
        raise InsufficientDataError(f"shapiro-wilk needs n >= 3, got {n}")
    return _coefficients(n)


def _p_value(n: int, w: float) -> float:
    if n == 3:
        p = (6.0 / math.pi) * (math.asin(math.sqrt(w)) - math.asin(math.sqrt(0.75)))
        return min(max(p, 0.0), 1.0)
    complement = 1.0 - w
    if complement < 1e-300:
        return 1.0
    y = math.log(complement)
    if n <= 11:
        gamma = _poly(_SMALL_N_GAMMA, float(n))
        if y >= gamma:
            return _TINY_P  # beyond the transform's support, W far below null range
        z = (-math.log(gamma - y) - _poly(_SMALL_N_MEAN, float(n))) / math.exp(
            _poly(_SMALL_N_LOG_SD, float(n))
        )
    else:
        log_n = math.log(n)
        z = (y - _poly(_LARGE_N_MEAN, log_n)) / math.exp(_poly(_LARGE_N_LOG_SD, log_n))
    return 0.5 * math.erfc(z / _SQRT2)


def shapiro_wilk(sample: Sequence[float]) -> SWResult:
    """W statistic and p-value; small p rejects normality."""
    n = len(sample)
    if n < 3:
        raise InsufficientDataError(f"shapiro-wilk needs n >= 3, got {n}")
    ordered = sorted(sample)
    mean = math.fsum(ordered) / n
    centered = [x - mean for x in ordered]
    sum_squares = math.fsum(v * v for v in centered)
    if sum_squares == 0.0:
        raise DegenerateSampleError("shapiro-wilk undefined for a zero-variance sample")
    weights = sw_coefficients(n)
    numerator_root = math.fsum(w * v for w, v in zip(weights, centered))
    w_stat = min(numerator_root * numerator_root / sum_squares, 1.0)
    return SWResult(
        n=n,
        w=w_stat,
        p_value=_p_value(n, w_stat),
        large_n_warning=n > ROYSTON_MAX_VALIDATED_N,
    )
