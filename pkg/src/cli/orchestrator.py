"""
Command dispatch with a success/error envelope
"""
import logging
from typing import Any, Dict

from config.run_config import RunConfig
from src.cli.commands import Command, ExitCode
from src.cli.report_formatter import ReportFormatter
from src.handlers import AnalyticHandler, ExtremaHandler, SimulationHandler, SweepHandler, ValidationHandler
from src.models import BullwhipError

logger = logging.getLogger(__name__)


class RunOrchestrator:
    """Route a command and its resolved config to the matching handler"""

    def __init__(self):
        self.formatter = ReportFormatter()
        self.handlers = {
            Command.ANALYTIC: AnalyticHandler(),
            Command.SIMULATE: SimulationHandler(),
            Command.SWEEP: SweepHandler(),
            Command.VALIDATE: ValidationHandler(),
            Command.EXTREMA: ExtremaHandler(),
        }

    def run(self, command: Command, config: RunConfig) -> Dict[str, Any]:
        try:
            logger.info(f"Running {command.value}")
            result = self.handlers[command].run(config)

            exit_code = ExitCode.OK
            if command == Command.VALIDATE and not result["data"]["passed"]:
                exit_code = ExitCode.VALIDATION_FAILED

            return {
                "success": True,
                "result": result,
                "report": self.formatter.format(command, result),
                "exit_code": exit_code,
                "metadata": {"command": command.value, "seed": config.seed}
            }

        except BullwhipError as e:
            logger.error(f"{command.value} rejected its input: {e}")
            return {
                "success": False,
                "error": type(e).__name__,
                "message": str(e),
                "report": self.formatter.format_error(type(e).__name__, str(e)),
                "exit_code": ExitCode.CONFIG_ERROR,
                "result": None
            }
        except Exception as e:
            logger.error(f"Error running {command.value}: {e}", exc_info=True)
            return {
                "success": False,
                "error": "Processing error",
                "message": str(e),
                "report": self.formatter.format_error("Processing error", str(e)),
                "exit_code": ExitCode.CONFIG_ERROR,
                "result": None
            }
