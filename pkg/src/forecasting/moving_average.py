"""
Moving-average forecasts of demand, lead time and lead-time demand.

Histories are indexed by absolute period: element t of a series is the
observation of period t.
"""
import logging

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from src.models import ForecastConfig, OutOfHistoryError, ParameterError

logger = logging.getLogger(__name__)


def ma_demand_forecast(history: np.ndarray, t: int, cfg: ForecastConfig) -> float:
    """
    (1/n) sum_{i=1..n} D_{t-i}.

    The same value is the j-step-ahead forecast for every j >= 0.
    """
    start, stop = t - cfg.n, t
    if start < 0 or stop > len(history):
        raise OutOfHistoryError(
            f"demand forecast at t={t} needs periods {start}..{stop - 1}, "
            f"history holds 0..{len(history) - 1}"
        )
    return float(np.mean(history[start:stop]))


def ma_leadtime_forecast(lt_history: np.ndarray, t: int, cfg: ForecastConfig) -> float:
    """
    (1/m) sum_{i=1..m} L_{t-i-L_plus}.

    Only lead times at least L_plus periods old enter, so every referenced
    order has been received.
    """
    start, stop = t - cfg.m - cfg.L_plus, t - cfg.L_plus
    if start < 0 or stop > len(lt_history):
        raise OutOfHistoryError(
            f"lead-time forecast at t={t} needs periods {start}..{stop - 1}, "
            f"history holds 0..{len(lt_history) - 1}"
        )
    return float(np.mean(np.asarray(lt_history[start:stop], dtype=float)))


def ltd_forecast(demand_f: float, leadtime_f: float) -> float:
    """Lead-time demand forecast: leadtime_f * demand_f"""
    if leadtime_f < 0:
        raise ParameterError(f"lead-time forecast cannot be negative, got {leadtime_f}")
    return leadtime_f * demand_f


def lagged_moving_average(series: np.ndarray, window: int, lag: int = 0) -> np.ndarray:
    """
    out[t] = mean(series[t - lag - window : t - lag]); NaN where history is short.
    """
    values = np.asarray(series, dtype=float)
    out = np.full(len(values), np.nan)
    first = window + lag
    if first >= len(values):
        return out
    means = sliding_window_view(values, window).mean(axis=1)
    out[first:] = means[:len(values) - first]
    return out


def demand_forecast_series(demands: np.ndarray, cfg: ForecastConfig) -> np.ndarray:
    return lagged_moving_average(demands, cfg.n)


def leadtime_forecast_series(leadtimes: np.ndarray, cfg: ForecastConfig) -> np.ndarray:
    return lagged_moving_average(leadtimes, cfg.m, lag=cfg.L_plus)


def ltd_forecast_series(demands: np.ndarray, leadtimes: np.ndarray, cfg: ForecastConfig) -> np.ndarray:
    return leadtime_forecast_series(leadtimes, cfg) * demand_forecast_series(demands, cfg)
