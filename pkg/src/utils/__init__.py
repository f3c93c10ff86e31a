from .logger import setup_logging
from .csv_writer import write_frame, read_frame

__all__ = ['setup_logging', 'write_frame', 'read_frame']
