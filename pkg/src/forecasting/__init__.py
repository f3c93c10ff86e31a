from .moving_average import (
    ma_demand_forecast,
    ma_leadtime_forecast,
    ltd_forecast,
    lagged_moving_average,
    demand_forecast_series,
    leadtime_forecast_series,
    ltd_forecast_series
)

__all__ = [
    'ma_demand_forecast',
    'ma_leadtime_forecast',
    'ltd_forecast',
    'lagged_moving_average',
    'demand_forecast_series',
    'leadtime_forecast_series',
    'ltd_forecast_series'
]
