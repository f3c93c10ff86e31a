from .bullwhip import (
    RHO_SEAM,
    check_rho,
    one_minus_rho_pow,
    bm_components,
    bm_analytic,
    bm_constant_leadtime,
    bm_limit_n_inf,
    bm_limit_m_inf,
    bm_limit_nm_inf,
    bm_n1,
    bm_n1_slope,
    bm_iid,
    dbm_drho_at_zero,
    bm_rho_to_1,
    bm_rho_to_minus1_general,
    bm_rho_to_minus1_even,
    bm_rho_to_minus1_odd,
    bm_rho_to_minus1,
    bm_limit_rho,
    stationary_point_conditions,
    special_cases
)
from .appendix import (
    MAX_ENUMERATION_WINDOW,
    var_E_q_given_L,
    expected_C1_sq,
    sum_expected_C2k_sq,
    var_q_appendix,
    appendix_terms,
    enumerate_appendix_moments
)

__all__ = [
    'RHO_SEAM', 'check_rho', 'one_minus_rho_pow', 'bm_components', 'bm_analytic',
    'bm_constant_leadtime', 'bm_limit_n_inf', 'bm_limit_m_inf', 'bm_limit_nm_inf',
    'bm_n1', 'bm_n1_slope', 'bm_iid', 'dbm_drho_at_zero', 'bm_rho_to_1',
    'bm_rho_to_minus1_general', 'bm_rho_to_minus1_even', 'bm_rho_to_minus1_odd',
    'bm_rho_to_minus1', 'bm_limit_rho', 'stationary_point_conditions', 'special_cases',
    'MAX_ENUMERATION_WINDOW', 'var_E_q_given_L', 'expected_C1_sq', 'sum_expected_C2k_sq',
    'var_q_appendix', 'appendix_terms', 'enumerate_appendix_moments'
]
