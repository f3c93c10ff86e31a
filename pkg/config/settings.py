"""
Environment-backed defaults
"""
import os

from dotenv import load_dotenv

load_dotenv()

DEFAULT_SEED = 20240601
DEFAULT_OUTPUT_DIR = "output"


def default_seed() -> int:
    """Master seed from BULLWHIP_SEED, read on every call"""
    return int(os.getenv("BULLWHIP_SEED", DEFAULT_SEED))


def default_workers() -> int:
    return int(os.getenv("BULLWHIP_WORKERS", 1))


def output_dir() -> str:
    return os.getenv("BULLWHIP_OUTPUT_DIR", DEFAULT_OUTPUT_DIR)


def log_level() -> str:
    return os.getenv("LOG_LEVEL", "INFO")


def log_file() -> str:
    return os.getenv("LOG_FILE")
