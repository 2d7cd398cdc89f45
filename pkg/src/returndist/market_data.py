"""OHLCV CSV parsing and simple daily return computation."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from datetime import date
from typing import Sequence

from .errors import (
    DataFormatError,
    DomainError,
    EmptyInputError,
    InsufficientDataError,
)

OHLCV_HEADER = ("Date", "Open", "High", "Low", "Close", "Adj Close", "Volume")

PRICE_FIELDS = ("close", "adj_close")


@dataclass(frozen=True)
class PricePoint:
    date: date
    open: float
    high: float
    low: float
    close: float
    adj_close: float
    volume: int


@dataclass(frozen=True)
class PriceSeries:
    symbol: str
    points: tuple[PricePoint, ...]

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class ReturnSeries:
    """Simple daily returns, dated at the later of each price pair."""

    symbol: str
    dates: tuple[date, ...]
    values: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)


def _parse_price(raw: str, lineno: int, column: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise DataFormatError(f"line {lineno}: unparsable {column} {raw!r}") from None
    if not math.isfinite(value):
        raise DataFormatError(f"line {lineno}: non-finite {column} {raw!r}")
    if value <= 0.0:
        raise DataFormatError(f"line {lineno}: non-positive {column} {value}")
    return value


def parse_ohlcv_csv(text: str, symbol: str) -> tuple[PriceSeries, list[str]]:
    """Parse a Yahoo Finance CSV export into a date-sorted PriceSeries.

    Rows containing the literal ``null`` are skipped and reported in the
    returned warnings list. Raises DataFormatError for a bad header,
    unparsable fields, non-positive prices, or duplicate dates, and
    EmptyInputError when there are no data rows at all.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise DataFormatError("missing CSV header") from None
    if header:
        header[0] = header[0].lstrip("﻿")
    if tuple(col.strip() for col in header) != OHLCV_HEADER:
        raise DataFormatError(
            f"unknown header {','.join(header)!r}; expected {','.join(OHLCV_HEADER)!r}"
        )

    points: list[PricePoint] = []
    warnings: list[str] = []
    seen_dates: set[date] = set()
    data_rows = 0
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        data_rows += 1
        if len(row) != len(OHLCV_HEADER):
            raise DataFormatError(
                f"line {lineno}: expected {len(OHLCV_HEADER)} fields, got {len(row)}"
            )
        if any(cell.strip() == "null" for cell in row[1:]):
            warnings.append(f"line {lineno}: null field, row skipped")
            continue
        try:
            row_date = date.fromisoformat(row[0].strip())
        except ValueError:
            raise DataFormatError(f"line {lineno}: unparsable date {row[0]!r}") from None
        if row_date in seen_dates:
            raise DataFormatError(f"line {lineno}: duplicate date {row_date.isoformat()}")
        seen_dates.add(row_date)
        open_, high, low, close, adj_close = (
            _parse_price(raw, lineno, column)
            for raw, column in zip(row[1:6], ("open", "high", "low", "close", "adj close"))
        )
        try:
            volume = int(row[6].strip())
        except ValueError:
            raise DataFormatError(f"line {lineno}: unparsable volume {row[6]!r}") from None
        if volume < 0:
            raise DataFormatError(f"line {lineno}: negative volume {volume}")
        points.append(PricePoint(row_date, open_, high, low, close, adj_close, volume))

    if data_rows == 0:
        raise EmptyInputError("CSV contains no data rows")
    points.sort(key=lambda p: p.date)
    return PriceSeries(symbol=symbol, points=tuple(points)), warnings


def price_series_to_csv(series: PriceSeries) -> str:
    """Serialize a PriceSeries back to Yahoo CSV form (parse round-trips)."""
    lines = [",".join(OHLCV_HEADER)]
    for p in series.points:
        lines.append(
            f"{p.date.isoformat()},{p.open!r},{p.high!r},{p.low!r},"
            f"{p.close!r},{p.adj_close!r},{p.volume}"
        )
    return "\n".join(lines) + "\n"


def simple_returns(prices: PriceSeries, field: str = "adj_close") -> ReturnSeries:
    """Fractional price changes between consecutive points of a series."""
    if field not in PRICE_FIELDS:
        raise DomainError(f"price field must be one of {PRICE_FIELDS}, got {field!r}")
    if len(prices) < 2:
        raise InsufficientDataError(
            f"need at least 2 price points to compute returns, got {len(prices)}"
        )
    dates: list[date] = []
    values: list[float] = []
    previous = getattr(prices.points[0], field)
    for point in prices.points[1:]:
        current = getattr(point, field)
        if previous == 0.0:
            raise DomainError(f"zero price on {point.date.isoformat()} denominator")
        dates.append(point.date)
        values.append((current - previous) / previous)
        previous = current
    return ReturnSeries(symbol=prices.symbol, dates=tuple(dates), values=tuple(values))


def parse_return_lines(text: str) -> list[float]:
    """Parse the one-return-per-line format written by the sample command."""
    values: list[float] = []
    rows = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        rows += 1
        try:
            value = float(stripped)
        except ValueError:
            raise DataFormatError(f"line {lineno}: unparsable return {stripped!r}") from None
        if not math.isfinite(value):
            raise DataFormatError(f"line {lineno}: non-finite return {stripped!r}")
        values.append(value)
    if rows == 0:
        raise EmptyInputError("input contains no return values")
    return values


def returns_to_lines(values: Sequence[float]) -> str:
    """Serialize returns one value per line, full float precision."""
    return "\n".join(repr(float(v)) for v in values) + "\n"
