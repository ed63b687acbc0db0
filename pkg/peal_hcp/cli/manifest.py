"""Sizes and Hamiltonicity of the 38 published instances."""

import dataclasses as dc
import enum
from typing import List, Optional, Tuple

from ..reduction.builder import expected_size
from ..ringing.catalog import catalog_entry
from ..ringing.sixes import Method


class Hamiltonicity(enum.Enum):
    H = "H"
    NH = "NH"
    UNKNOWN = "U"


@dc.dataclass(frozen=True)
class ManifestEntry:
    """Expected outcome for one (method, group) instance.

    Args:
        method (Method): Erin or Stedman
        group_index (str): catalog index
        vertices (int): expected DIMENSION
        edges (int): expected edge count
        hamiltonicity (Hamiltonicity): H, NH or U
        count (int): (optional) published number of Hamiltonian cycles
    """

    method: Method
    group_index: str
    vertices: int
    edges: int
    hamiltonicity: Hamiltonicity
    count: Optional[int] = None

    @property
    def label(self) -> str:
        prefix = "Erin" if self.method is Method.ERIN else "Sted"
        return f"{prefix}{catalog_entry(self.group_index).order} ({self.group_index})"

    @property
    def known(self) -> bool:
        return self.hamiltonicity is not Hamiltonicity.UNKNOWN


H, NH, U = Hamiltonicity.H, Hamiltonicity.NH, Hamiltonicity.UNKNOWN
S, E = Method.STEDMAN, Method.ERIN

_ROWS: Tuple[Tuple[Method, str, int, int, Hamiltonicity, Optional[int]], ...] = (
    # groups allowing an odd number of round blocks
    (S, "0.01", 27720, 45360, H, None),
    (S, "4.07", 13860, 22680, H, None),
    (S, "6.33", 9240, 15120, H, None),
    (S, "6.26", 6930, 11340, H, None),
    (S, "5.05", 5544, 9072, H, 4),
    (S, "6.32", 4620, 7560, H, 132),
    (S, "7.07", 3960, 6480, NH, None),
    (S, "5.04", 2772, 4536, H, 4),
    (S, "7.12", 1386, 2268, H, 6),
    (S, "7.05", 1320, 2160, NH, None),
    (E, "0.01", 13440, 21840, U, None),
    (E, "4.07", 6720, 10920, H, None),
    (E, "6.33", 4480, 7280, NH, None),
    (E, "6.26", 3360, 5460, NH, None),
    (E, "5.05", 2688, 4368, NH, None),
    (E, "6.32", 2240, 3640, NH, None),
    (E, "7.07", 1920, 3120, NH, None),
    (E, "5.04", 1344, 2184, NH, None),
    (E, "7.12", 672, 1092, NH, None),
    (E, "7.05", 640, 1040, NH, None),
    # groups with only even round-block counts
    (S, "4.04", 6930, 11340, U, None),
    (S, "6.35", 6930, 11340, H, None),
    (S, "6.23", 3465, 5670, NH, None),
    (S, "6.14", 2310, 3780, H, 248),
    (S, "7.33", 2310, 3780, NH, None),
    (S, "6.09", 1155, 1890, NH, None),
    (S, "7.28", 1155, 1890, NH, None),
    (S, "6.05", 462, 756, H, 20),
    (S, "7.03", 165, 270, NH, None),
    (E, "4.04", 3360, 5460, NH, None),
    (E, "6.35", 3360, 5460, NH, None),
    (E, "6.23", 1680, 2730, NH, None),
    (E, "6.14", 1120, 1820, NH, None),
    (E, "7.33", 1120, 1820, NH, None),
    (E, "6.09", 560, 910, NH, None),
    (E, "7.28", 560, 910, NH, None),
    (E, "6.05", 224, 364, NH, None),
    (E, "7.03", 80, 130, NH, None),
)

MANIFEST: Tuple[ManifestEntry, ...] = tuple(ManifestEntry(*row) for row in _ROWS)


def manifest_entry(method: Method, group_index: str) -> ManifestEntry:
    for entry in MANIFEST:
        if entry.method is method and entry.group_index == group_index:
            return entry
    raise ValueError(f"no manifest entry for {method.value} {group_index}")


def size_mismatches() -> List[str]:
    """Manifest rows whose sizes disagree with the closed-form size."""
    out = []
    for entry in MANIFEST:
        want = expected_size(entry.method, catalog_entry(entry.group_index).order)
        if want != (entry.vertices, entry.edges):
            out.append(f"{entry.label}: manifest {entry.vertices}/{entry.edges}, formula {want[0]}/{want[1]}")
    return out
