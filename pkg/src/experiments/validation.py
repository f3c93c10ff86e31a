"""
Analytic vs appendix vs Monte Carlo agreement report
"""
import logging
import math
from typing import Callable, List, Optional, Sequence

from src.analytics import bm_analytic, var_q_appendix
from src.experiments.monte_carlo import estimate_from_settings
from src.models import BmInputs, LeadTimeDist, McSettings, ValidationReport, ValidationRow
from src.processes import make_two_point_dist

logger = logging.getLogger(__name__)

DEFAULT_VALIDATION_RHOS = (-0.9, -0.5, 0.0, 0.5, 0.9)
DEFAULT_Z_THRESHOLD = 4.0
DEFAULT_DUAL_PATH_TOLERANCE = 1e-10

DistFactory = Callable[[BmInputs], LeadTimeDist]


def two_point_factory(inputs: BmInputs) -> LeadTimeDist:
    return make_two_point_dist(inputs.mu_L, math.sqrt(inputs.sigma_L2))


def validation_grid(scenarios: Sequence[BmInputs], rhos: Sequence[float] = DEFAULT_VALIDATION_RHOS) -> List[BmInputs]:
    """Every scenario at every rho"""
    return [scenario.at_rho(rho) for scenario in scenarios for rho in rhos]


def validate(
    grid: Sequence[BmInputs],
    dist_factory: DistFactory = two_point_factory,
    mc: Optional[McSettings] = None,
    z_threshold: float = DEFAULT_Z_THRESHOLD,
    rel_tol: float = DEFAULT_DUAL_PATH_TOLERANCE,
    max_mc_rel_error: Optional[float] = None
) -> ValidationReport:
    """
    A row passes when the appendix path matches the closed form within rel_tol
    and, with Monte Carlo, |z| <= z_threshold (and the relative error stays
    under max_mc_rel_error when given).
    """
    rows = []
    for index, inputs in enumerate(grid):
        analytic = bm_analytic(inputs).value
        appendix = var_q_appendix(inputs) / inputs.sigma_D ** 2
        dual_error = abs(appendix / analytic - 1.0)
        passed = dual_error <= rel_tol

        bm_mc = se = z_score = mc_error = None
        if mc is not None:
            estimate = estimate_from_settings(
                inputs, dist_factory(inputs), mc, stream_offset=index * mc.replications
            )
            bm_mc, se = estimate.bm_mc, estimate.se
            z_score = (bm_mc - analytic) / se
            mc_error = abs(bm_mc / analytic - 1.0)
            passed = passed and abs(z_score) <= z_threshold
            if max_mc_rel_error is not None:
                passed = passed and mc_error <= max_mc_rel_error

        row = ValidationRow(
            rho=inputs.rho,
            n=inputs.n,
            m=inputs.m,
            bm_analytic=analytic,
            bm_appendix=appendix,
            dual_path_rel_error=dual_error,
            bm_mc=bm_mc,
            bm_mc_se=se,
            z_score=z_score,
            mc_rel_error=mc_error,
            passed=passed
        )
        if not passed:
            logger.warning(f"Validation failed at rho={row.rho:g}, n={row.n}, m={row.m}: {row}")
        rows.append(row)

    report = ValidationReport(rows=rows, z_threshold=z_threshold, dual_path_tolerance=rel_tol)
    logger.info(f"Validation: {len(rows) - len(report.failures)}/{len(rows)} rows passed")
    return report
