"""
Numerical scenarios: mu_D = 20, sigma_D = 4, mu_L = 10, sigma_L = 5 with four (n, m) pairs
per lead-time window, each drawn as a bullwhip curve over rho
"""
from typing import Dict, List, Optional, Tuple

# Shared parameters of every scenario
SCENARIO_PARAMETERS = {
    "mu_D": 20.0,
    "sigma_D": 4.0,
    "mu_L": 10.0,
    "sigma_L": 5.0,
}

# Preset name -> (n, m)
PRESET_WINDOWS: Dict[str, Tuple[int, int]] = {
    "fig3": (5, 2),
    "fig4": (6, 2),
    "fig5": (15, 2),
    "fig6": (16, 2),
    "fig7": (5, 20),
    "fig8": (6, 20),
    "fig9": (21, 20),
    "fig10": (22, 20),
}

# runs every scenario above; "all" is accepted as an alias
ALL_SCENARIOS = "paper"
ALL_SCENARIOS_ALIAS = "all"

# Simulated BM must land within this relative error of the closed form in preset scenarios
PRESET_MAX_MC_REL_ERROR = 0.03

PRESET_NAMES: List[str] = list(PRESET_WINDOWS) + [ALL_SCENARIOS, ALL_SCENARIOS_ALIAS]


def covers_all_scenarios(name: Optional[str]) -> bool:
    return name in (ALL_SCENARIOS, ALL_SCENARIOS_ALIAS)


def preset_windows(name: str) -> List[Tuple[int, int]]:
    """(n, m) pairs covered by a preset"""
    if covers_all_scenarios(name):
        return list(PRESET_WINDOWS.values())
    if name not in PRESET_WINDOWS:
        raise KeyError(f"unknown preset '{name}', expected one of {PRESET_NAMES}")
    return [PRESET_WINDOWS[name]]
