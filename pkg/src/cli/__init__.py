from .commands import Command, CommandClassifier, ExitCode
from .report_formatter import ReportFormatter
from .orchestrator import RunOrchestrator

__all__ = [
    'Command',
    'CommandClassifier',
    'ExitCode',
    'ReportFormatter',
    'RunOrchestrator'
]
