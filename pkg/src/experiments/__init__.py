from .monte_carlo import (
    MIN_PERIODS,
    check_moments,
    simulate_replication,
    run_replications,
    estimate_bm_mc,
    estimate_from_settings
)
from .sweep import default_rho_grid, inputs_at, sweep_rho, curve_flatness
from .extrema import find_stationary_points
from .validation import (
    DEFAULT_VALIDATION_RHOS,
    two_point_factory,
    validation_grid,
    validate
)
from .export import (
    curve_to_frame,
    write_curve_csv,
    long_format_frame,
    write_long_format_csv,
    validation_to_frame,
    write_validation_csv
)

__all__ = [
    'MIN_PERIODS', 'check_moments', 'simulate_replication', 'run_replications',
    'estimate_bm_mc', 'estimate_from_settings',
    'default_rho_grid', 'inputs_at', 'sweep_rho', 'curve_flatness',
    'find_stationary_points',
    'DEFAULT_VALIDATION_RHOS', 'two_point_factory', 'validation_grid', 'validate',
    'curve_to_frame', 'write_curve_csv', 'long_format_frame', 'write_long_format_csv',
    'validation_to_frame', 'write_validation_csv'
]
