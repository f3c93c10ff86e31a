"""
Rho sweep handler
"""
import logging
import os
from typing import Any, Dict

from config.run_config import RunConfig
from src.experiments import curve_flatness, default_rho_grid, sweep_rho, write_curve_csv, write_long_format_csv
from src.models import SweepSpec

logger = logging.getLogger(__name__)


class SweepHandler:
    """Bullwhip curves over rho for every scenario in the config"""

    def run(self, config: RunConfig) -> Dict[str, Any]:
        try:
            grid = config.rho_grid or default_rho_grid(config.grid_points)
            mc = config.mc_settings() if config.monte_carlo else None
            dist = config.leadtime_dist() if config.leadtime_pmf is not None else None

            curves = {}
            flatness = {}
            paths = []
            for base in config.scenarios(rho=0.0):
                label = config.scenario_label(base.n, base.m)
                spec = SweepSpec(
                    rho_grid=grid,
                    base=base,
                    mc=mc,
                    hold_sigma_D_constant=config.hold_sigma_D_constant,
                    leadtime_dist=dist
                )
                points = sweep_rho(spec)
                curves[label] = points
                flatness[label] = curve_flatness(points)

                path = os.path.join(config.output_dir, f"curve_{label}.csv")
                if config.output and len(config.windows()) == 1:
                    path = config.output
                write_curve_csv(points, path, config.header_lines())
                paths.append(str(path))

            long_path = os.path.join(config.output_dir, "curves_long.csv")
            write_long_format_csv(curves, long_path, config.header_lines())

            logger.info(f"Swept {len(curves)} scenarios over {len(grid)} rho values")
            return {
                "operation": "sweep",
                "data": {
                    "curves": {label: [p.model_dump() for p in points] for label, points in curves.items()},
                    "flatness": flatness,
                    "paths": paths + [long_path],
                },
                "message": f"Wrote {len(paths)} curve files"
            }
        except Exception as e:
            logger.error(f"Error running sweep: {e}")
            raise
