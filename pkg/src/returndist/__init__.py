"""Daily return distribution analysis: normality tests and Normal-vs-Laplace fits."""

from .distfit import (
    LaplaceParams,
    NormalParams,
    Xoshiro256PlusPlus,
    fit_laplace,
    fit_normal,
    laplace_cdf,
    laplace_pdf,
    laplace_quantile,
    median,
    normal_cdf,
    normal_quantile,
    sample_laplace,
    sample_normal,
)
from .errors import (
    DataFormatError,
    DegenerateFitError,
    DegenerateSampleError,
    DomainError,
    EmptyInputError,
    InsufficientDataError,
    ReturnDistError,
)
from .gof import EcdfCurve, FitScore, GofReport, compare_fits, ecdf, ks_statistic, log_likelihood
from .market_data import (
    PricePoint,
    PriceSeries,
    ReturnSeries,
    parse_ohlcv_csv,
    parse_return_lines,
    price_series_to_csv,
    returns_to_lines,
    simple_returns,
)
from .moments import MomentsReport, central_moment, excess_kurtosis, moment_report, skewness
from .normality import SWResult, shapiro_wilk, sw_coefficients
from .report import (
    AnalysisReport,
    HistogramData,
    analyze_returns,
    ecdf_overlay,
    histogram,
    report_from_dict,
    report_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "DataFormatError",
    "DegenerateFitError",
    "DegenerateSampleError",
    "DomainError",
    "EcdfCurve",
    "EmptyInputError",
    "FitScore",
    "GofReport",
    "HistogramData",
    "InsufficientDataError",
    "LaplaceParams",
    "MomentsReport",
    "NormalParams",
    "PricePoint",
    "PriceSeries",
    "ReturnDistError",
    "ReturnSeries",
    "SWResult",
    "Xoshiro256PlusPlus",
    "analyze_returns",
    "central_moment",
    "compare_fits",
    "ecdf",
    "ecdf_overlay",
    "excess_kurtosis",
    "fit_laplace",
    "fit_normal",
    "histogram",
    "ks_statistic",
    "laplace_cdf",
    "laplace_pdf",
    "laplace_quantile",
    "log_likelihood",
    "median",
    "moment_report",
    "normal_cdf",
    "normal_quantile",
    "parse_ohlcv_csv",
    "parse_return_lines",
    "price_series_to_csv",
    "report_from_dict",
    "report_to_dict",
    "returns_to_lines",
    "sample_laplace",
    "sample_normal",
    "shapiro_wilk",
    "simple_returns",
    "skewness",
    "sw_coefficients",
]
