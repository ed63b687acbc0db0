"""Sub-package __init__."""

from . import json_util
from .config import DESK_SCALE_VERTICES, N_BELLS, SolverConfig
from .logs import configure_logging

__all__ = [
    "json_util",
    "DESK_SCALE_VERTICES",
    "N_BELLS",
    "SolverConfig",
    "configure_logging",
]
