# config.py
"""Module to provide configuration defaults.

Nothing here reads the environment: every value can only be overridden by
an explicit command-line flag.
"""

import dataclasses as dc
from typing import Optional

N_BELLS = 7

# instances at or below this size are solved without a budget
DESK_SCALE_VERTICES = 700

LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"


@dc.dataclass(frozen=True)
class SolverConfig:
    """Tuning knobs for the exact Hamiltonian-cycle search.

    Args:
        budget (float):
            (optional) wall-clock limit in seconds, `None` for no limit
        threads (int):
            number of worker processes for subtree splitting (1 = in-process)
        split_factor (int):
            subtrees generated per worker before dispatching
        time_check_interval (int):
            search nodes between deadline checks
    """

    budget: Optional[float] = None
    threads: int = 1
    split_factor: int = 4
    time_check_interval: int = 256

    def __post_init__(self) -> None:
        if self.budget is not None and self.budget <= 0:
            raise ValueError(f"budget must be positive: {self.budget}")
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1: {self.threads}")
        if self.split_factor < 1:
            raise ValueError(f"split_factor must be at least 1: {self.split_factor}")
        if self.time_check_interval < 1:
            raise ValueError(
                f"time_check_interval must be at least 1: {self.time_check_interval}"
            )
