"""Analysis report assembly and rendering: JSON, Markdown, CSV, SVG."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .distfit import LaplaceParams, NormalParams, laplace_cdf, normal_cdf
from .errors import DomainError, InsufficientDataError
from .gof import compare_fits, ecdf
from .moments import moment_report
from .normality import ROYSTON_MAX_VALIDATED_N, shapiro_wilk


@dataclass(frozen=True)
class AnalysisReport:
    symbol: str
    n: int
    skew: float
    excess_kurtosis: float
    shapiro_w: float
    shapiro_p: float
    normal_fit: NormalParams
    laplace_fit: LaplaceParams
    ks_normal: float
    ks_laplace: float
    log_lik_normal: float
    log_lik_laplace: float
    aic_normal: float
    aic_laplace: float
    better_fit: str
    warnings: tuple[str, ...]


@dataclass(frozen=True)
class HistogramData:
    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]
    densities: tuple[float, ...]


def analyze_returns(
    values: Sequence[float], symbol: str, warnings: Sequence[str] = ()
) -> AnalysisReport:
    """Full pipeline on a return sample: moments, Shapiro-Wilk, and the
    Normal-vs-Laplace fit comparison."""
    moments = moment_report(values)
    sw = shapiro_wilk(values)
    gof = compare_fits(values)
    all_warnings = list(warnings)
    if sw.large_n_warning:
        all_warnings.append(
            f"shapiro-wilk: n={sw.n} exceeds the validated range "
            f"(n <= {ROYSTON_MAX_VALIDATED_N}); p-value approximation untested"
        )
    return AnalysisReport(
        symbol=symbol,
        n=moments.n,
        skew=moments.skew,
        excess_kurtosis=moments.excess_kurtosis,
        shapiro_w=sw.w,
        shapiro_p=sw.p_value,
        normal_fit=gof.normal.params,
        laplace_fit=gof.laplace.params,
        ks_normal=gof.normal.ks_distance,
        ks_laplace=gof.laplace.ks_distance,
        log_lik_normal=gof.normal.log_likelihood,
        log_lik_laplace=gof.laplace.log_likelihood,
        aic_normal=gof.normal.aic,
        aic_laplace=gof.laplace.aic,
        better_fit=gof.better_fit,
        warnings=tuple(all_warnings),
    )


def report_to_dict(report: AnalysisReport) -> dict:
    return {
        "symbol": report.symbol,
        "n": report.n,
        "skew": report.skew,
        "excess_kurtosis": report.excess_kurtosis,
        "shapiro_w": report.shapiro_w,
        "shapiro_p": report.shapiro_p,
        "normal_fit": {"mean": report.normal_fit.mean, "sigma": report.normal_fit.sigma},
        "laplace_fit": {"mu": report.laplace_fit.mu, "scale": report.laplace_fit.scale},
        "ks_normal": report.ks_normal,
        "ks_laplace": report.ks_laplace,
        "log_lik_normal": report.log_lik_normal,
        "log_lik_laplace": report.log_lik_laplace,
        "aic_normal": report.aic_normal,
        "aic_laplace": report.aic_laplace,
        "better_fit": report.better_fit,
        "warnings": list(report.warnings),
    }


def report_from_dict(payload: dict) -> AnalysisReport:
    return AnalysisReport(
        symbol=payload["symbol"],
        n=payload["n"],
        skew=payload["skew"],
        excess_kurtosis=payload["excess_kurtosis"],
        shapiro_w=payload["shapiro_w"],
        shapiro_p=payload["shapiro_p"],
        normal_fit=NormalParams(**payload["normal_fit"]),
        laplace_fit=LaplaceParams(**payload["laplace_fit"]),
        ks_normal=payload["ks_normal"],
        ks_laplace=payload["ks_laplace"],
        log_lik_normal=payload["log_lik_normal"],
        log_lik_laplace=payload["log_lik_laplace"],
        aic_normal=payload["aic_normal"],
        aic_laplace=payload["aic_laplace"],
        better_fit=payload["better_fit"],
        warnings=tuple(payload["warnings"]),
    )


def render_report_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2)


def _fmt6(value: float) -> str:
    return f"{value:.6g}"


def render_report_markdown(report: AnalysisReport) -> str:
    rows = [
        ("symbol", report.symbol),
        ("n", str(report.n)),
        ("skew", _fmt6(report.skew)),
        ("excess_kurtosis", _fmt6(report.excess_kurtosis)),
        ("shapiro_w", _fmt6(report.shapiro_w)),
        ("shapiro_p", _fmt6(report.shapiro_p)),
        ("normal_mean", _fmt6(report.normal_fit.mean)),
        ("normal_sigma", _fmt6(report.normal_fit.sigma)),
        ("laplace_mu", _fmt6(report.laplace_fit.mu)),
        ("laplace_scale", _fmt6(report.laplace_fit.scale)),
        ("ks_normal", _fmt6(report.ks_normal)),
        ("ks_laplace", _fmt6(report.ks_laplace)),
        ("log_lik_normal", _fmt6(report.log_lik_normal)),
        ("log_lik_laplace", _fmt6(report.log_lik_laplace)),
        ("aic_normal", _fmt6(report.aic_normal)),
        ("aic_laplace", _fmt6(report.aic_laplace)),
        ("better_fit", report.better_fit),
    ]
    key_width = max(len(k) for k, _ in rows)
    value_width = max(max(len(v) for _, v in rows), len("value"))
    lines = [
        f"| {'metric'.ljust(key_width)} | {'value'.rjust(value_width)} |",
        f"|:{'-' * key_width}-|-{'-' * value_width}:|",
    ]
    for key, value in rows:
        lines.append(f"| {key.ljust(key_width)} | {value.rjust(value_width)} |")
    for warning in report.warnings:
        lines.append(f"- warning: {warning}")
    return "\n".join(lines)


def histogram(values: Sequence[float], bins: int) -> HistogramData:
    """Equal-width histogram over [min, max], densities integrating to 1.

    A degenerate range (all values equal) becomes a single bin of
    nominal width 1 centered on the value.
    """
    if bins < 1:
        raise DomainError(f"bin count must be >= 1, got {bins}")
    n = len(values)
    if n == 0:
        raise InsufficientDataError("histogram needs a non-empty sample")
    lo, hi = min(values), max(values)
    if lo == hi:
        edges = (lo - 0.5, lo + 0.5)
        counts = [n]
    else:
        width = (hi - lo) / bins
        edges = tuple(lo + i * width for i in range(bins)) + (hi,)
        counts = [0] * bins
        for x in values:
            index = min(int((x - lo) / width), bins - 1)
            counts[index] += 1
    densities = tuple(
        count / (n * (edges[i + 1] - edges[i])) for i, count in enumerate(counts)
    )
    return HistogramData(bin_edges=edges, counts=tuple(counts), densities=densities)


def histogram_to_dict(symbol: str, hist: HistogramData) -> dict:
    return {
        "symbol": symbol,
        "n": sum(hist.counts),
        "bin_edges": list(hist.bin_edges),
        "counts": list(hist.counts),
        "densities": list(hist.densities),
    }


def render_histogram_json(symbol: str, hist: HistogramData) -> str:
    return json.dumps(histogram_to_dict(symbol, hist), indent=2)


def ecdf_overlay(
    values: Sequence[float],
) -> tuple[list[tuple[float, float, float, float]], NormalParams, LaplaceParams]:
    """Rows (x, ecdf, normal_cdf, laplace_cdf) at each sorted value, with
    both families fitted to the sample."""
    gof = compare_fits(values)
    normal_params = gof.normal.params
    laplace_params = gof.laplace.params
    curve = ecdf(values)
    rows = [
        (x, curve.evaluate(x), normal_cdf(x, normal_params), laplace_cdf(x, laplace_params))
        for x in curve.sorted_x
    ]
    return rows, normal_params, laplace_params


def render_ecdf_csv(rows: Sequence[tuple[float, float, float, float]]) -> str:
    lines = ["x,ecdf,normal_cdf,laplace_cdf"]
    for x, e, fn, fl in rows:
        lines.append(f"{x!r},{e!r},{fn!r},{fl!r}")
    return "\n".join(lines) + "\n"


_SVG_WIDTH = 720
_SVG_HEIGHT = 480
_MARGIN_LEFT = 72
_MARGIN_RIGHT = 24
_MARGIN_TOP = 42
_MARGIN_BOTTOM = 54

_SERIES_STYLE = (
    ("empirical", "#222222"),
    ("normal fit", "#1f77b4"),
    ("laplace fit", "#d62728"),
)


def render_ecdf_svg(rows: Sequence[tuple[float, float, float, float]], symbol: str) -> str:
    """Standalone SVG: ECDF staircase plus both fitted CDF curves."""
    xs = [r[0] for r in rows]
    lo, hi = min(xs), max(xs)
    span = (hi - lo) or 1.0
    lo -= 0.02 * span
    hi += 0.02 * span

    plot_w = _SVG_WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _SVG_HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def px(x: float) -> str:
        return f"{_MARGIN_LEFT + plot_w * (x - lo) / (hi - lo):.2f}"

    def py(q: float) -> str:
        return f"{_MARGIN_TOP + plot_h * (1.0 - q):.2f}"

    # staircase for the empirical CDF
    stair = [f"{px(xs[0])},{py(0.0)}"]
    previous_level = 0.0
    for x, e, _, _ in rows:
        stair.append(f"{px(x)},{py(previous_level)}")
        stair.append(f"{px(x)},{py(e)}")
        previous_level = e
    curves = [
        " ".join(stair),
        " ".join(f"{px(x)},{py(fn)}" for x, _, fn, _ in rows),
        " ".join(f"{px(x)},{py(fl)}" for x, _, _, fl in rows),
    ]

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_WIDTH}" '
        f'height="{_SVG_HEIGHT}" viewBox="0 0 {_SVG_WIDTH} {_SVG_HEIGHT}">',
        f'<rect width="{_SVG_WIDTH}" height="{_SVG_HEIGHT}" fill="white"/>',
        f'<text x="{_SVG_WIDTH / 2:.0f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{symbol}: empirical CDF vs fitted models</text>',
    ]
    axis_color = "#444444"
    x0, y0 = _MARGIN_LEFT, _MARGIN_TOP + plot_h
    parts.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x0 + plot_w}" y2="{y0}" stroke="{axis_color}"/>'
    )
    parts.append(f'<line x1="{x0}" y1="{_MARGIN_TOP}" x2="{x0}" y2="{y0}" stroke="{axis_color}"/>')
    for k in range(5):
        x = lo + (hi - lo) * k / 4.0
        sx = px(x)
        parts.append(f'<line x1="{sx}" y1="{y0}" x2="{sx}" y2="{y0 + 5}" stroke="{axis_color}"/>')
        parts.append(
            f'<text x="{sx}" y="{y0 + 20}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{x:.4g}</text>'
        )
    for k in range(6):
        q = k / 5.0
        sy = py(q)
        parts.append(f'<line x1="{x0 - 5}" y1="{sy}" x2="{x0}" y2="{sy}" stroke="{axis_color}"/>')
        parts.append(
            f'<text x="{x0 - 9}" y="{sy}" text-anchor="end" dominant-baseline="middle" '
            f'font-family="sans-serif" font-size="11">{q:.1f}</text>'
        )
    parts.append(
        f'<text x="{x0 + plot_w / 2:.0f}" y="{_SVG_HEIGHT - 12}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">daily return</text>'
    )
    parts.append(
        f'<text x="18" y="{_MARGIN_TOP + plot_h / 2:.0f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" '
        f'transform="rotate(-90 18 {_MARGIN_TOP + plot_h / 2:.0f})">F(x)</text>'
    )
    for points, (_, color) in zip(curves, _SERIES_STYLE):
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
    legend_x = x0 + 14
    legend_y = _MARGIN_TOP + 10
    for i, (label, color) in enumerate(_SERIES_STYLE):
        ly = legend_y + 18 * i
        parts.append(
            f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 26}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{legend_x + 32}" y="{ly + 4}" font-family="sans-serif" '
            f'font-size="12">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
