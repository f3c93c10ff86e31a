"""
Validation handler
"""
import logging
import os
from typing import Any, Dict

from config.run_config import RunConfig
from src.experiments import DEFAULT_VALIDATION_RHOS, two_point_factory, validate, validation_grid, write_validation_csv
from src.models import BmInputs, LeadTimeDist

logger = logging.getLogger(__name__)


class ValidationHandler:
    """Closed form vs appendix path vs Monte Carlo over every scenario and rho"""

    def run(self, config: RunConfig) -> Dict[str, Any]:
        try:
            rhos = config.rho_grid or list(DEFAULT_VALIDATION_RHOS)
            grid = validation_grid(config.scenarios(rho=0.0), rhos)

            if config.leadtime_pmf is not None:
                explicit = config.leadtime_dist()

                def dist_factory(_: BmInputs) -> LeadTimeDist:
                    return explicit
            else:
                dist_factory = two_point_factory

            report = validate(
                grid,
                dist_factory,
                mc=config.mc_settings(),
                z_threshold=config.z_threshold,
                max_mc_rel_error=config.max_mc_rel_error
            )

            path = config.output or os.path.join(config.output_dir, "validation.csv")
            write_validation_csv(report, path, config.header_lines())

            if not report.passed:
                logger.warning(f"{len(report.failures)} of {len(report.rows)} validation rows failed")
            return {
                "operation": "validate",
                "data": {
                    "passed": report.passed,
                    "rows": [row.model_dump() for row in report.rows],
                    "path": str(path),
                },
                "message": f"{len(report.rows) - len(report.failures)}/{len(report.rows)} rows passed"
            }
        except Exception as e:
            logger.error(f"Error running validation: {e}")
            raise
