"""Utility module - logging and seeded random streams."""
from src.utils.logger import setup_logger, get_logger
from src.utils.rng import spawn_generators, complex_gaussian

__all__ = ["setup_logger", "get_logger", "spawn_generators", "complex_gaussian"]
