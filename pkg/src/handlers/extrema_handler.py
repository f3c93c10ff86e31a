"""
Stationary point handler
"""
import logging
from typing import Any, Dict

from config.run_config import RunConfig
from src.analytics import stationary_point_conditions
from src.experiments import find_stationary_points

logger = logging.getLogger(__name__)


class ExtremaHandler:
    """Locate interior extrema of BM(rho) and report the sufficient conditions"""

    def run(self, config: RunConfig) -> Dict[str, Any]:
        try:
            scenarios = []
            for inputs in config.scenarios(rho=0.0):
                points = find_stationary_points(inputs, config.region)
                scenarios.append({
                    "scenario": config.scenario_label(inputs.n, inputs.m),
                    "n": inputs.n,
                    "m": inputs.m,
                    "points": [p.model_dump() for p in points],
                    "conditions": stationary_point_conditions(inputs).model_dump(),
                })

            found = sum(len(s["points"]) for s in scenarios)
            return {
                "operation": "extrema",
                "data": {"scenarios": scenarios, "region": list(config.region)},
                "message": f"Found {found} stationary points in {len(scenarios)} scenarios"
            }
        except Exception as e:
            logger.error(f"Error locating stationary points: {e}")
            raise
