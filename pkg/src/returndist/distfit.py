"""Normal and Laplace distribution primitives.

Density, CDF, and quantile evaluation, parameter fitting, and seeded
sampling. Everything here is self-contained: uniforms come from a
xoshiro256++ generator seeded through splitmix64, normals from the
Marsaglia polar method, Laplace variates from the inverse transform,
and the standard-normal quantile from Acklam's rational approximation
sharpened by one Halley step against the erfc-based CDF.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateFitError, DomainError, InsufficientDataError

_SQRT2 = math.sqrt(2.0)
_SQRT2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class LaplaceParams:
    """Location/scale pair for the double-exponential family."""

    mu: float
    scale: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.mu):
            raise DomainError(f"laplace mu must be finite, got {self.mu}")
        if not (math.isfinite(self.scale) and self.scale > 0.0):
            raise DomainError(f"laplace scale must be finite and > 0, got {self.scale}")


@dataclass(frozen=True)
class NormalParams:
    """Mean/standard-deviation pair for the normal family."""

    mean: float
    sigma: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.mean):
            raise DomainError(f"normal mean must be finite, got {self.mean}")
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise DomainError(f"normal sigma must be finite and > 0, got {self.sigma}")


def median(sample: Sequence[float]) -> float:
    """Middle order statistic; mean of the two middle ones for even n."""
    if len(sample) == 0:
        raise InsufficientDataError("median needs a non-empty sample")
    return float(statistics.median(sample))


def fit_laplace(sample: Sequence[float]) -> LaplaceParams:
    """ML fit: mu = sample median, scale = mean |deviation| from it."""
    n = len(sample)
    if n < 2:
        raise InsufficientDataError(f"laplace fit needs n >= 2, got {n}")
    mu = median(sample)
    scale = math.fsum(abs(x - mu) for x in sample) / n
    if scale == 0.0:
        raise DegenerateFitError("all sample values identical; laplace scale is zero")
    return LaplaceParams(mu=mu, scale=scale)


def fit_normal(sample: Sequence[float]) -> NormalParams:
    """ML fit: sample mean and population (biased) standard deviation."""
    n = len(sample)
    if n < 2:
        raise InsufficientDataError(f"normal fit needs n >= 2, got {n}")
    mean = math.fsum(sample) / n
    variance = math.fsum((x - mean) ** 2 for x in sample) / n
    if variance == 0.0:
        raise DegenerateFitError("all sample values identical; normal sigma is zero")
    return NormalParams(mean=mean, sigma=math.sqrt(variance))


def laplace_pdf(x: float, p: LaplaceParams) -> float:
    return math.exp(-abs(x - p.mu) / p.scale) / (2.0 * p.scale)


def laplace_cdf(x: float, p: LaplaceParams) -> float:
    z = (x - p.mu) / p.scale
    if z < 0.0:
        return 0.5 * math.exp(z)
    return 1.0 - 0.5 * math.exp(-z)


def laplace_quantile(q: float, p: LaplaceParams) -> float:
    """Inverse CDF: mu - scale * sgn(q - 1/2) * ln(1 - 2|q - 1/2|)."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"quantile level must be in (0, 1), got {q}")
    if q < 0.5:
        return p.mu + p.scale * math.log(2.0 * q)
    if q > 0.5:
        return p.mu - p.scale * math.log(2.0 * (1.0 - q))
    return p.mu


def normal_cdf(x: float, p: NormalParams) -> float:
    z = (x - p.mean) / p.sigma
    return 0.5 * math.erfc(-z / _SQRT2)


# Acklam's rational approximation to the standard-normal inverse CDF;
# raw absolute error ~1.15e-9, pushed to machine precision by the
# Halley refinement in normal_quantile.
_ACKLAM_A = (
    -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
    1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00,
)
_ACKLAM_B = (
    -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
    6.680131188771972e+01, -1.328068155288572e+01,
)
_ACKLAM_C = (
    -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
    -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00,
)
_ACKLAM_D = (
    7.784695709041462e-03, 3.224671290700398e-01,
    2.445134137142996e+00, 3.754408661907416e+00,
)
_ACKLAM_LOW = 0.02425


def _acklam_lower(q: float) -> float:
    a, b, c, d = _ACKLAM_A, _ACKLAM_B, _ACKLAM_C, _ACKLAM_D
    if q < _ACKLAM_LOW:
        r = math.sqrt(-2.0 * math.log(q))
        return (
            ((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]
        ) / ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0)
    u = q - 0.5
    r = u * u
    return (
        (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u
    ) / (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0)


def _refined_lower_quantile(q: float) -> float:
    # q in (0, 0.5]; here x <= 0, so erfc(-x/sqrt(2)) carries full relative
    # precision and the Halley residual is not cancellation-limited.
    x = _acklam_lower(q)
    density = math.exp(-0.5 * x * x) / _SQRT2PI
    if density > 0.0:
        err = 0.5 * math.erfc(-x / _SQRT2) - q
        u = err / density
        x -= u / (1.0 + 0.5 * x * u)
    return x


def normal_quantile(q: float) -> float:
    """Standard-normal inverse CDF, accurate to ~1e-14 on (1e-300, 1 - 1e-16)."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"quantile level must be in (0, 1), got {q}")
    # Reflect the upper half: 1 - q is exact for q >= 0.5 (Sterbenz), and
    # antisymmetry then holds exactly.
    if q > 0.5:
        return -_refined_lower_quantile(1.0 - q)
    return _refined_lower_quantile(q)


_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)), state


class Xoshiro256PlusPlus:
    """xoshiro256++ (Blackman & Vigna), state expanded from the seed with
    splitmix64. Same seed, same stream, across runs and threads; not
    cryptographic."""

    __slots__ = ("_s0", "_s1", "_s2", "_s3")

    def __init__(self, seed: int) -> None:
        state = seed & _MASK64
        words = []
        for _ in range(4):
            word, state = _splitmix64(state)
            words.append(word)
        if not any(words):
            words[0] = 1  # the all-zero state is the one fixed point
        self._s0, self._s1, self._s2, self._s3 = words

    def next_uint64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        t = (s0 + s3) & _MASK64
        result = (((t << 23) | (t >> 41)) + s0) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & _MASK64
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def next_float(self) -> float:
        """Uniform on the open interval (0, 1), 53-bit resolution."""
        return ((self.next_uint64() >> 11) + 0.5) * 2.0**-53


def sample_laplace(n: int, p: LaplaceParams, seed: int) -> list[float]:
    """n inverse-transform Laplace variates, deterministic per seed."""
    if n < 1:
        raise DomainError(f"sample size must be >= 1, got {n}")
    rng = Xoshiro256PlusPlus(seed)
    return [laplace_quantile(rng.next_float(), p) for _ in range(n)]


def sample_normal(n: int, p: NormalParams, seed: int) -> list[float]:
    """n Marsaglia-polar normal variates, deterministic per seed."""
    if n < 1:
        raise DomainError(f"sample size must be >= 1, got {n}")
    rng = Xoshiro256PlusPlus(seed)
    mean, sigma = p.mean, p.sigma
    out: list[float] = []
    while len(out) < n:
        u = 2.0 * rng.next_float() - 1.0
        v = 2.0 * rng.next_float() - 1.0
        s = u * u + v * v
        if s >= 1.0 or s == 0.0:
            continue
        factor = math.sqrt(-2.0 * math.log(s) / s)
        out.append(mean + sigma * u * factor)
        if len(out) < n:
            out.append(mean + sigma * v * factor)
    return out
