"""
Order-up-to replenishment with forecasted lead-time demand and stochastic lead times
"""
import logging
from typing import Optional

import numpy as np

from src.forecasting import (
    demand_forecast_series,
    leadtime_forecast_series,
    ltd_forecast,
    ma_demand_forecast,
    ma_leadtime_forecast
)
from src.models import ConfigurationError, ForecastConfig, SimTrace

logger = logging.getLogger(__name__)


def _check_series(demands: np.ndarray, leadtimes: np.ndarray, cfg: ForecastConfig) -> None:
    if len(demands) != len(leadtimes):
        raise ConfigurationError(
            f"demand and lead-time series differ in length ({len(demands)} vs {len(leadtimes)})"
        )
    if len(leadtimes) and int(np.max(leadtimes)) > cfg.L_plus:
        raise ConfigurationError(
            f"lead time {int(np.max(leadtimes))} exceeds the forecast lag L_plus={cfg.L_plus}"
        )
    if len(leadtimes) and int(np.min(leadtimes)) < 0:
        raise ConfigurationError("lead times must be non-negative")


def run_out_policy(
    demands: np.ndarray,
    leadtimes: np.ndarray,
    cfg: ForecastConfig,
    tns: float = 0.0,
    burn_in: Optional[int] = None,
    initial_order: Optional[float] = None
) -> SimTrace:
    """
    Simulate the order-up-to policy q_t = D^L_t - D^L_{t-1} + D_{t-1}.

    Sequence of events: q_t is placed at the beginning of period t and is
    received during period t + L_t (crossovers allowed, same-period receipts
    summed); demand D_t is then served and net stock updated. Orders are not
    clamped at zero, so negative orders (returns) occur.

    Periods up to cfg.history_start carry pipeline-seed orders of size
    `initial_order` (default: mean demand over those periods). The initial
    net stock is set so the inventory position before each policy order
    equals S_{t-1} - D_{t-1}.
    """
    D = np.asarray(demands, dtype=float)
    L = np.asarray(leadtimes, dtype=np.int64)
    _check_series(D, L, cfg)

    T = len(D)
    t0 = cfg.history_start
    burn_in = cfg.default_burn_in if burn_in is None else burn_in
    first_measured = t0 + 1 + burn_in
    if T <= first_measured:
        raise ConfigurationError(
            f"series of {T} periods cannot cover history {t0}, burn-in {burn_in} "
            f"and a measurement window"
        )

    demand_f = demand_forecast_series(D, cfg)
    leadtime_f = leadtime_forecast_series(L, cfg)
    ltd_f = leadtime_f * demand_f

    seed_size = float(np.mean(D[:t0 + 1])) if initial_order is None else float(initial_order)
    order = np.empty(T)
    order[:t0 + 1] = seed_size
    order[t0 + 1:] = ltd_f[t0 + 1:] - ltd_f[t0:-1] + D[t0:-1]

    arrives_at = np.arange(T) + L
    received = arrives_at < T
    receipts = np.bincount(arrives_at[received], weights=order[received], minlength=T)

    # inventory position before the first policy order equals S_{t0} - D_{t0}
    target_t0 = ltd_f[t0] + tns
    initial_net_stock = target_t0 - order[:t0 + 1].sum() + D[:t0].sum()
    net_stock = initial_net_stock + np.cumsum(receipts - D)

    measured = np.zeros(T, dtype=bool)
    measured[first_measured:] = True

    logger.debug(
        f"OUT run: {T} periods, first policy order at {t0 + 1}, measuring from {first_measured}"
    )
    return SimTrace(
        demand=D,
        lead_time=L,
        demand_forecast=demand_f,
        leadtime_forecast=leadtime_f,
        ltd_forecast=ltd_f,
        order=order,
        receipts=receipts,
        net_stock=net_stock,
        measured=measured,
        tns=float(tns),
        first_policy_period=t0 + 1,
        cfg=cfg
    )


def orders_from_levels(
    demands: np.ndarray,
    leadtimes: np.ndarray,
    cfg: ForecastConfig,
    tns: float = 0.0
) -> np.ndarray:
    """
    Orders from explicit order-up-to levels S_t = D^L_t + TNS, one period at a time.

    Entries before cfg.history_start + 1 are NaN. Used to cross-check
    run_out_policy, which cancels TNS algebraically.
    """
    D = np.asarray(demands, dtype=float)
    L = np.asarray(leadtimes, dtype=np.int64)
    _check_series(D, L, cfg)

    orders = np.full(len(D), np.nan)
    previous_level = None
    for t in range(cfg.history_start, len(D)):
        level = ltd_forecast(ma_demand_forecast(D, t, cfg), ma_leadtime_forecast(L, t, cfg)) + tns
        if previous_level is not None:
            orders[t] = level - previous_level + D[t - 1]
        previous_level = level
    return orders
