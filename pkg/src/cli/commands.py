"""
Subcommands and their classification
"""
import logging
from enum import Enum

logger = logging.getLogger(__name__)


class Command(Enum):
    """Subcommands of the bullwhip CLI"""
    ANALYTIC = "analytic"
    SIMULATE = "simulate"
    SWEEP = "sweep"
    VALIDATE = "validate"
    EXTREMA = "extrema"


class ExitCode:
    OK = 0
    VALIDATION_FAILED = 1
    CONFIG_ERROR = 2


class CommandClassifier:
    """Map subcommand names onto Command values"""

    @staticmethod
    def classify(name: str) -> Command:
        try:
            return Command(name.strip().lower())
        except ValueError:
            valid = ", ".join(c.value for c in Command)
            raise ValueError(f"Unknown command '{name}', expected one of: {valid}")
