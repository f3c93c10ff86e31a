"""
Human-readable reports for command results
"""
import logging
from typing import Any, Dict, List

from src.cli.commands import Command

logger = logging.getLogger(__name__)

COMPONENT_LABELS = (
    "lead-time variability / forecast interaction",
    "lead-time forecasting",
    "demand forecasting",
)


class ReportFormatter:
    """Format handler results as plain text"""

    def format(self, command: Command, result: Dict[str, Any]) -> str:
        formatters = {
            Command.ANALYTIC: self.format_analytic,
            Command.SIMULATE: self.format_simulation,
            Command.SWEEP: self.format_sweep,
            Command.VALIDATE: self.format_validation,
            Command.EXTREMA: self.format_extrema,
        }
        return formatters[command](result)

    @staticmethod
    def format_analytic(result: Dict[str, Any]) -> str:
        data = result["data"]
        if result["operation"] == "analytic_limit":
            return f"BM ({data['limit']}, n={data['n']}, m={data['m']}) = {data['bm']:.6f}"

        lines = [
            f"BM = {data['bm']:.6f} ({data['method']})",
            f"Appendix path: {data['bm_appendix']:.6f}",
            "\nComponents:",
        ]
        for label, value in zip(COMPONENT_LABELS, data["components"]):
            lines.append(f"  {label}: {value:.6f}")

        lines.append("\nSpecial cases:")
        for name, value in data["special_cases"].items():
            lines.append(f"  {name}: {value:.6f}")

        conditions = data["conditions"]
        lines.append("\nStationary points:")
        lines.append(
            f"  (0, 1): n <= {conditions['positive_extremum_bound']:.4f} -> "
            f"{'sufficient' if conditions['positive_region_sufficient'] else 'not established'}"
        )
        lines.append(
            f"  (-1, 0): m >= {conditions['negative_extremum_bound']:.4f} -> "
            f"{'sufficient' if conditions['negative_region_sufficient'] else 'not established'}"
        )
        if conditions.get("constant_leadtime_iid_exceeds_rho1"):
            lines.append("  constant lead time: BM_iid exceeds the rho -> 1 limit")
        return "\n".join(lines)

    @staticmethod
    def format_simulation(result: Dict[str, Any]) -> str:
        summary = result["data"]["summary"]
        lines = [
            f"Trace written to {result['data']['path']}",
            f"Measured periods: {summary['periods']}",
            f"Mean order: {summary['mean_order']:.6f}",
            f"Var q: {summary['var_order']:.6f}",
            f"Var D: {summary['var_demand']:.6f}",
            f"BM estimate: {summary['bm_estimate']:.6f}",
            f"Net stock variance ratio: {summary['net_stock_variance_ratio']:.6f}",
            f"Order crossovers: {summary['crossovers']}",
            f"Lead-time demand forecast error variance: {summary['forecast_error_variance']:.6f}",
        ]
        if summary.get("tns") is not None:
            lines.append(f"TNS: {summary['tns']:.6f}")
        return "\n".join(lines)

    @staticmethod
    def format_sweep(result: Dict[str, Any]) -> str:
        data = result["data"]
        lines = [result["message"]]
        for label, points in data["curves"].items():
            values = [p["bm_analytic"] for p in points]
            lines.append(
                f"  {label}: {len(points)} points, BM in [{min(values):.4f}, {max(values):.4f}], "
                f"flatness on [-0.8, 0.8] {data['flatness'][label]:.2%}"
            )
        lines.extend(f"  -> {path}" for path in data["paths"])
        return "\n".join(lines)

    @staticmethod
    def format_validation(result: Dict[str, Any]) -> str:
        rows: List[Dict[str, Any]] = result["data"]["rows"]
        lines = [f"{'PASS' if result['data']['passed'] else 'FAIL'}: {result['message']}"]
        for row in rows:
            z = "" if row["z_score"] is None else f" z={row['z_score']:+.2f}"
            mark = "ok " if row["passed"] else "BAD"
            lines.append(
                f"  {mark} n={row['n']:>2} m={row['m']:>2} rho={row['rho']:+.2f} "
                f"BM={row['bm_analytic']:.4f} dual={row['dual_path_rel_error']:.1e}{z}"
            )
        lines.append(f"  -> {result['data']['path']}")
        return "\n".join(lines)

    @staticmethod
    def format_extrema(result: Dict[str, Any]) -> str:
        lines = [result["message"]]
        for scenario in result["data"]["scenarios"]:
            lines.append(f"  {scenario['scenario']} (n={scenario['n']}, m={scenario['m']}):")
            if not scenario["points"]:
                lines.append("    none")
            for point in scenario["points"]:
                lines.append(f"    {point['kind']} at rho={point['rho']:+.6f}, BM={point['bm']:.6f}")
        return "\n".join(lines)

    @staticmethod
    def format_error(error: str, message: str) -> str:
        return f"Error ({error}): {message}"
