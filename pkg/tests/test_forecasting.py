"""
Tests for the moving-average forecasts
"""
import numpy as np
import pytest

from src.models import DemandParams, ForecastConfig, OutOfHistoryError, ParameterError, SeededStream
from src.processes import gen_demand, gen_leadtimes, make_two_point_dist
from src.forecasting import (
    demand_forecast_series,
    lagged_moving_average,
    leadtime_forecast_series,
    ltd_forecast,
    ltd_forecast_series,
    ma_demand_forecast,
    ma_leadtime_forecast
)


def test_single_period_window_is_last_demand():
    """n = 1 forecasts D_{t-1}"""
    history = np.array([3.0, 7.0, 11.0])
    cfg = ForecastConfig(n=1, m=1, L_plus=0)
    assert ma_demand_forecast(history, 3, cfg) == 11.0
    assert ma_demand_forecast(history, 2, cfg) == 7.0


def test_demand_forecast_averages_window():
    """(10, 20, 30) with n = 3 forecasts 20"""
    cfg = ForecastConfig(n=3, m=1, L_plus=0)
    assert ma_demand_forecast(np.array([10.0, 20.0, 30.0]), 3, cfg) == pytest.approx(20.0)


def test_constant_history_forecasts_constant():
    """A constant history forecasts the constant"""
    cfg = ForecastConfig(n=4, m=1, L_plus=0)
    assert ma_demand_forecast(np.full(10, 20.0), 8, cfg) == pytest.approx(20.0)


def test_demand_forecast_is_linear():
    """Forecast of a*D1 + D2 is a*f(D1) + f(D2)"""
    rng = np.random.default_rng(0)
    first, second = rng.normal(size=20), rng.normal(size=20)
    cfg = ForecastConfig(n=5, m=1, L_plus=0)
    combined = ma_demand_forecast(2.5 * first + second, 12, cfg)
    expected = 2.5 * ma_demand_forecast(first, 12, cfg) + ma_demand_forecast(second, 12, cfg)
    assert combined == pytest.approx(expected, abs=1e-12)


def test_demand_forecast_needs_full_window():
    """t < n is out of history"""
    cfg = ForecastConfig(n=5, m=1, L_plus=0)
    with pytest.raises(OutOfHistoryError):
        ma_demand_forecast(np.ones(10), 4, cfg)
    with pytest.raises(OutOfHistoryError):
        ma_demand_forecast(np.ones(10), 11, cfg)


def test_leadtime_forecast_uses_lagged_window():
    """m = 2, L_plus = 15 averages L_{t-16} and L_{t-17}"""
    cfg = ForecastConfig(n=1, m=2, L_plus=15)
    history = np.zeros(20, dtype=int)
    history[4], history[3] = 5, 15
    assert ma_leadtime_forecast(history, 20, cfg) == pytest.approx(10.0)


def test_leadtime_forecast_without_lag():
    """m = 1, L_plus = 0 forecasts L_{t-1}"""
    cfg = ForecastConfig(n=1, m=1, L_plus=0)
    assert ma_leadtime_forecast(np.array([2, 6, 9]), 3, cfg) == 9.0


def test_leadtime_forecast_ignores_unobserved_lead_times():
    """Lead times newer than L_plus periods do not move the forecast"""
    cfg = ForecastConfig(n=1, m=3, L_plus=4)
    history = np.arange(30) % 7
    before = ma_leadtime_forecast(history, 25, cfg)
    changed = history.copy()
    changed[25 - cfg.L_plus:25] = 99
    assert ma_leadtime_forecast(changed, 25, cfg) == before


def test_leadtime_forecast_needs_full_window():
    """t - m - L_plus < 0 is out of history"""
    cfg = ForecastConfig(n=1, m=2, L_plus=15)
    with pytest.raises(OutOfHistoryError):
        ma_leadtime_forecast(np.ones(40, dtype=int), 16, cfg)


def test_ltd_forecast_is_a_product():
    """4 * 20 = 80"""
    assert ltd_forecast(20.0, 4.0) == 80.0


def test_negative_leadtime_forecast_rejected():
    """A negative lead-time forecast is a parameter error"""
    with pytest.raises(ParameterError):
        ltd_forecast(20.0, -1.0)


def test_lagged_moving_average_short_series_is_nan():
    """A series shorter than window + lag yields only NaN"""
    out = lagged_moving_average(np.ones(3), window=2, lag=2)
    assert np.all(np.isnan(out))


def test_series_forecasts_match_scalar_forecasts():
    """Vectorized forecasts equal the per-period forecasts"""
    dist = make_two_point_dist(10, 5)
    cfg = ForecastConfig(n=5, m=2, L_plus=dist.L_plus)
    stream = SeededStream(seed=3)
    D = gen_demand(DemandParams(mu_D=20, rho=0.5, sigma_D=4), 200, stream=stream)
    L = gen_leadtimes(dist, 200, stream=stream)

    demand_f = demand_forecast_series(D, cfg)
    leadtime_f = leadtime_forecast_series(L, cfg)
    ltd_f = ltd_forecast_series(D, L, cfg)

    assert np.all(np.isnan(demand_f[:cfg.n]))
    assert np.all(np.isnan(leadtime_f[:cfg.m + cfg.L_plus]))
    for t in range(cfg.history_start, len(D)):
        assert demand_f[t] == pytest.approx(ma_demand_forecast(D, t, cfg), abs=1e-12)
        assert leadtime_f[t] == pytest.approx(ma_leadtime_forecast(L, t, cfg), abs=1e-12)
        assert ltd_f[t] == pytest.approx(leadtime_f[t] * demand_f[t], abs=1e-9)


def test_ltd_forecast_is_unbiased():
    """Mean lead-time-demand forecast is mu_L * mu_D within 4 batch-mean se"""
    T = 1_000_000
    dist = make_two_point_dist(10, 5)
    cfg = ForecastConfig(n=5, m=2, L_plus=dist.L_plus)
    stream = SeededStream(seed=4)
    D = gen_demand(DemandParams(mu_D=20, rho=0.0, sigma_D=4), T, stream=stream)
    L = gen_leadtimes(dist, T, stream=stream)

    forecasts = ltd_forecast_series(D, L, cfg)[cfg.history_start:]
    batches = forecasts[:len(forecasts) // 100 * 100].reshape(100, -1).mean(axis=1)
    se = batches.std(ddof=1) / np.sqrt(len(batches))

    assert abs(forecasts.mean() - 200.0) < 4 * se
