"""Shared helpers for building synthetic market data."""

from __future__ import annotations

from datetime import date, timedelta

from returndist.market_data import OHLCV_HEADER


def prices_from_returns(returns: list[float], start: float = 100.0) -> list[float]:
    prices = [start]
    for r in returns:
        prices.append(prices[-1] * (1.0 + r))
    return prices


def ohlcv_csv_from_prices(prices: list[float]) -> str:
    start_date = date(2012, 1, 3)
    lines = [",".join(OHLCV_HEADER)]
    for i, price in enumerate(prices):
        day = start_date + timedelta(days=i)
        lines.append(
            f"{day.isoformat()},{price!r},{price!r},{price!r},{price!r},{price!r},1000"
        )
    return "\n".join(lines) + "\n"


def ohlcv_csv_from_returns(returns: list[float], start: float = 100.0) -> str:
    return ohlcv_csv_from_prices(prices_from_returns(returns, start))
