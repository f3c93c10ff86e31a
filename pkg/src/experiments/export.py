"""
CSV export of curves and validation reports
"""
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence, Union

import pandas as pd

from src.models import BmCurvePoint, TraceColumns, ValidationReport
from src.utils.csv_writer import write_frame

LONG_FORMAT_COLUMNS = ["scenario", TraceColumns.RHO, TraceColumns.N, TraceColumns.M, "series", "value", "se"]


def curve_to_frame(points: Sequence[BmCurvePoint]) -> pd.DataFrame:
    rows = [
        {
            TraceColumns.RHO: p.rho,
            TraceColumns.N: p.n,
            TraceColumns.M: p.m,
            TraceColumns.BM_ANALYTIC: p.bm_analytic,
            TraceColumns.BM_APPENDIX: p.bm_appendix,
            TraceColumns.BM_MC: p.bm_mc,
            TraceColumns.BM_MC_SE: p.bm_mc_se,
            TraceColumns.Z_SCORE: p.z_score,
        }
        for p in points
    ]
    return pd.DataFrame(rows, columns=TraceColumns.CURVE)


def write_curve_csv(
    points: Sequence[BmCurvePoint],
    path: Union[str, Path],
    header: Optional[Iterable[str]] = None
) -> Path:
    return write_frame(curve_to_frame(points), path, header)


def long_format_frame(curves: Mapping[str, Sequence[BmCurvePoint]]) -> pd.DataFrame:
    """
    One row per (scenario, rho, series) for plotting tools.

    Series are the closed form, its three summands and, where present, the
    Monte Carlo estimate with its standard error.
    """
    rows = []
    for scenario, points in curves.items():
        for p in points:
            base = {"scenario": scenario, TraceColumns.RHO: p.rho, TraceColumns.N: p.n, TraceColumns.M: p.m}
            series = {
                "analytic": p.bm_analytic,
                "leadtime_interaction": p.components[0],
                "leadtime_forecast": p.components[1],
                "demand_forecast": p.components[2],
            }
            for name, value in series.items():
                rows.append({**base, "series": name, "value": value, "se": None})
            if p.bm_mc is not None:
                rows.append({**base, "series": "mc", "value": p.bm_mc, "se": p.bm_mc_se})
    return pd.DataFrame(rows, columns=LONG_FORMAT_COLUMNS)


def write_long_format_csv(
    curves: Mapping[str, Sequence[BmCurvePoint]],
    path: Union[str, Path],
    header: Optional[Iterable[str]] = None
) -> Path:
    return write_frame(long_format_frame(curves), path, header)


def validation_to_frame(report: ValidationReport) -> pd.DataFrame:
    return pd.DataFrame([row.model_dump() for row in report.rows], columns=TraceColumns.VALIDATION)


def write_validation_csv(
    report: ValidationReport,
    path: Union[str, Path],
    header: Optional[Iterable[str]] = None
) -> Path:
    return write_frame(validation_to_frame(report), path, header)
