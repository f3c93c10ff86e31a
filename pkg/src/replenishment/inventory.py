"""
Inventory statistics over a simulated trace
"""
import logging
import math
from typing import Optional

import numpy as np

from src.models import CostParams, EmptySeriesError, ParameterError, SimTrace, TraceSummary

logger = logging.getLogger(__name__)

TNS_MIN_LENGTH = 10_000


def tns_empirical(
    net_stock: np.ndarray,
    costs: CostParams,
    min_length: int = TNS_MIN_LENGTH
) -> float:
    """
    Target net stock from the b/(b+h) nearest-rank quantile of the shortfall -net_stock.

    `net_stock` is the measured window of a TNS=0 run. Under stochastic lead
    times the inventory distribution can be multi-modal, so no normal
    approximation is attempted.
    """
    shortfall = np.sort(-np.asarray(net_stock, dtype=float))
    if len(shortfall) == 0:
        raise EmptySeriesError("net-stock series is empty")
    if len(shortfall) < min_length:
        raise ParameterError(
            f"need at least {min_length} measured periods for an empirical quantile, "
            f"got {len(shortfall)}"
        )

    fractile = costs.critical_fractile
    rank = max(1, math.ceil(fractile * len(shortfall)))
    return float(shortfall[rank - 1])


def realized_leadtime_demand(demands: np.ndarray, leadtimes: np.ndarray) -> np.ndarray:
    """D^L_t = D_t + ... + D_{t+L_t-1}; NaN where the window runs past the series end"""
    D = np.asarray(demands, dtype=float)
    L = np.asarray(leadtimes, dtype=np.int64)
    if len(D) != len(L):
        raise ParameterError("demand and lead-time series differ in length")

    cumulative = np.concatenate(([0.0], np.cumsum(D)))
    start = np.arange(len(D))
    end = start + L
    out = np.full(len(D), np.nan)
    inside = end <= len(D)
    out[inside] = cumulative[end[inside]] - cumulative[start[inside]]
    return out


def forecast_error_variance(trace: SimTrace) -> float:
    """Sample variance of D^L_t - forecast over the measured window"""
    realized = realized_leadtime_demand(trace.demand, trace.lead_time)
    error = trace.window(realized - trace.ltd_forecast)
    error = error[~np.isnan(error)]
    if len(error) < 2:
        return float("nan")
    return float(np.var(error, ddof=1))


def count_crossovers(trace: SimTrace) -> int:
    """Order pairs in the measured window where the later order arrives strictly earlier"""
    arrivals = trace.window(trace.arrives_at)
    crossed = 0
    # orders more than L_plus apart can never cross
    for lag in range(1, min(trace.cfg.L_plus, len(arrivals) - 1) + 1):
        crossed += int(np.count_nonzero(arrivals[lag:] < arrivals[:-lag]))
    return crossed


def summarize_trace(trace: SimTrace, costs: Optional[CostParams] = None) -> TraceSummary:
    """Order and inventory statistics of the measured window"""
    orders = trace.window(trace.order)
    demand = trace.window(trace.demand)
    net_stock = trace.window(trace.net_stock)

    var_order = float(np.var(orders, ddof=1))
    var_demand = float(np.var(demand, ddof=1))
    if var_demand == 0.0:
        logger.warning("demand has zero variance over the measured window; ratios are undefined")
        bm_estimate = float("nan")
        ns_ratio = float("nan")
    else:
        bm_estimate = var_order / var_demand
        ns_ratio = float(np.var(net_stock, ddof=1)) / var_demand

    tns = None
    if costs is not None:
        tns = tns_empirical(net_stock - trace.tns, costs)

    summary = TraceSummary(
        periods=len(orders),
        mean_order=float(np.mean(orders)),
        var_order=var_order,
        var_demand=var_demand,
        bm_estimate=bm_estimate,
        net_stock_variance_ratio=ns_ratio,
        crossovers=count_crossovers(trace),
        forecast_error_variance=forecast_error_variance(trace),
        tns=tns
    )
    logger.info(f"Summarized {summary.periods} periods: BM estimate {summary.bm_estimate:.4f}")
    return summary
