"""Descriptive moment statistics: skewness and excess kurtosis.

Population (biased) estimators throughout, computed two-pass: mean
first, then centered powers. Kurtosis is reported in Fisher's excess
form, zero in expectation for normal data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateSampleError, DomainError, InsufficientDataError

MAX_MOMENT_ORDER = 8


@dataclass(frozen=True)
class MomentsReport:
    n: int
    mean: float
    m2: float
    m3: float
    m4: float
    skew: float
    excess_kurtosis: float


def central_moment(sample: Sequence[float], k: int) -> float:
    """k-th central sample moment, (1/n) * sum((x - mean)^k)."""
    if not 1 <= k <= MAX_MOMENT_ORDER:
        raise DomainError(f"moment order must be in 1..{MAX_MOMENT_ORDER}, got {k}")
    n = len(sample)
    if n == 0:
        raise InsufficientDataError("central_moment needs a non-empty sample")
    mean = math.fsum(sample) / n
    return math.fsum((x - mean) ** k for x in sample) / n


def skewness(sample: Sequence[float]) -> float:
    """Standardized third central moment, m3 / m2^(3/2)."""
    if len(sample) < 3:
        raise InsufficientDataError(f"skewness needs n >= 3, got {len(sample)}")
    m2 = central_moment(sample, 2)
    if m2 == 0.0:
        raise DegenerateSampleError("skewness undefined for a zero-variance sample")
    return central_moment(sample, 3) / m2**1.5


def excess_kurtosis(sample: Sequence[float]) -> float:
    """Fisher excess kurtosis, m4 / m2^2 - 3."""
    if len(sample) < 4:
        raise InsufficientDataError(f"excess kurtosis needs n >= 4, got {len(sample)}")
    m2 = central_moment(sample, 2)
    if m2 == 0.0:
        raise DegenerateSampleError("kurtosis undefined for a zero-variance sample")
    return central_moment(sample, 4) / (m2 * m2) - 3.0


def moment_report(sample: Sequence[float]) -> MomentsReport:
    """Mean, central moments up to order 4, skew, and excess kurtosis."""
    n = len(sample)
    if n < 4:
        raise InsufficientDataError(f"moment report needs n >= 4, got {n}")
    mean = math.fsum(sample) / n
    deviations = [x - mean for x in sample]
    m2 = math.fsum(d * d for d in deviations) / n
    m3 = math.fsum(d * d * d for d in deviations) / n
    m4 = math.fsum(d * d * d * d for d in deviations) / n
    if m2 == 0.0:
        raise DegenerateSampleError("moments undefined for a zero-variance sample")
    return MomentsReport(
        n=n,
        mean=mean,
        m2=m2,
        m3=m3,
        m4=m4,
        skew=m3 / m2**1.5,
        excess_kurtosis=m4 / (m2 * m2) - 3.0,
    )
