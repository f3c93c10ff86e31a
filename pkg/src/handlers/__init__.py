from .analytic_handler import AnalyticHandler
from .simulation_handler import SimulationHandler
from .sweep_handler import SweepHandler
from .validation_handler import ValidationHandler
from .extrema_handler import ExtremaHandler

__all__ = [
    'AnalyticHandler',
    'SimulationHandler',
    'SweepHandler',
    'ValidationHandler',
    'ExtremaHandler'
]
