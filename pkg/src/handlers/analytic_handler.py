"""
Closed-form bullwhip handler
"""
import logging
from typing import Any, Dict

from config.run_config import RunConfig
from src.analytics import (
    appendix_terms,
    bm_analytic,
    bm_limit_rho,
    special_cases,
    stationary_point_conditions
)
from src.models import BmInputs, DemandParams, DomainError

logger = logging.getLogger(__name__)


class AnalyticHandler:
    """Evaluate the bullwhip measure and its special cases for one scenario"""

    def run(self, config: RunConfig) -> Dict[str, Any]:
        try:
            if config.limit is not None:
                return self.limit(config)
            if not -1.0 < config.rho < 1.0:
                which = "rho1" if config.rho > 0 else "rho-1"
                raise DomainError(
                    f"rho={config.rho:g} is outside (-1, 1); use --limit {which} for the boundary value"
                )

            inputs = config.bm_inputs()
            result = bm_analytic(inputs)
            terms = appendix_terms(inputs)

            logger.info(f"BM at rho={inputs.rho:g}, n={inputs.n}, m={inputs.m}: {result.value:.6f}")
            return {
                "operation": "analytic",
                "data": {
                    "inputs": inputs.model_dump(),
                    "bm": result.value,
                    "method": result.method.value,
                    "components": list(result.components),
                    "bm_appendix": terms.var_q / terms.sigma_D2,
                    "special_cases": special_cases(inputs),
                    "conditions": stationary_point_conditions(inputs).model_dump(),
                },
                "message": f"BM = {result.value:.6g}"
            }
        except Exception as e:
            logger.error(f"Error evaluating bullwhip measure: {e}")
            raise

    def limit(self, config: RunConfig) -> Dict[str, Any]:
        """rho -> +-1 limit; the limits do not depend on the configured rho"""
        mu_L, sigma_L2 = config.leadtime_moments()
        inputs = BmInputs(
            demand=DemandParams(mu_D=config.mu_D, rho=0.0, sigma_D=config.sigma_D),
            mu_L=mu_L,
            sigma_L2=sigma_L2,
            n=config.n,
            m=config.m
        )
        value = bm_limit_rho(inputs, config.limit)
        logger.info(f"BM limit {config.limit} for n={inputs.n}, m={inputs.m}: {value:.6f}")
        return {
            "operation": "analytic_limit",
            "data": {"limit": config.limit, "bm": value, "n": inputs.n, "m": inputs.m},
            "message": f"BM ({config.limit}) = {value:.6g}"
        }
