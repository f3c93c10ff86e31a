"""
Run settings and scenario presets
"""
from .settings import default_seed, default_workers, output_dir, log_level, log_file
from .presets import (
    SCENARIO_PARAMETERS,
    PRESET_WINDOWS,
    ALL_SCENARIOS,
    ALL_SCENARIOS_ALIAS,
    PRESET_MAX_MC_REL_ERROR,
    PRESET_NAMES,
    covers_all_scenarios,
    preset_windows
)

__all__ = [
    'default_seed', 'default_workers', 'output_dir', 'log_level', 'log_file',
    'SCENARIO_PARAMETERS', 'PRESET_WINDOWS', 'ALL_SCENARIOS', 'ALL_SCENARIOS_ALIAS', 'PRESET_MAX_MC_REL_ERROR',
    'PRESET_NAMES', 'covers_all_scenarios', 'preset_windows'
]
