"""Named part groups usable for bobs-only Stedman and Erin Triples."""

import dataclasses as dc
import logging
from typing import Dict, Tuple

from cachetools import LRUCache, cached

from .groups import PartGroup, close_generators
from .rows import Row

LOGGER = logging.getLogger(__name__)


@dc.dataclass(frozen=True)
class CatalogEntry:
    """One group, as published with its generators.

    Args:
        index_name (str): the group's index, e.g. ``5.05``
        generators (tuple): relabellings, as row strings
        order (int): expected order (= number of parts)
        round_blocks (tuple): round-block counts that may occur
        odd_blocks (bool): whether an odd number of round blocks is possible
    """

    index_name: str
    generators: Tuple[str, ...]
    order: int
    round_blocks: Tuple[int, ...]
    odd_blocks: bool

    @property
    def sixes_per_part(self) -> int:
        return 840 // self.order


_ENTRIES = (
    # groups allowing an odd number of round blocks
    CatalogEntry("0.01", ("1234567",), 1, (1,), True),
    CatalogEntry("4.07", ("2143567",), 2, (1, 2), True),
    CatalogEntry("6.33", ("1357246",), 3, (1, 3), True),
    CatalogEntry("6.26", ("1352476",), 4, (1, 2, 4), True),
    CatalogEntry("5.05", ("2345167",), 5, (1, 5), True),
    CatalogEntry("6.32", ("2316457", "2136547"), 6, (2, 3, 6), True),
    CatalogEntry("7.07", ("2345671",), 7, (1, 7), True),
    CatalogEntry("5.04", ("2345167", "5432167"), 10, (2, 5, 10), True),
    CatalogEntry("7.12", ("2345167", "1352476"), 20, (4, 5, 10, 20), True),
    CatalogEntry("7.05", ("2345671", "1357246"), 21, (3, 7, 21), True),
    # groups giving only even round-block counts; hard HCP instances
    CatalogEntry("4.04", ("2143567", "3412567"), 4, (2, 4), False),
    CatalogEntry("6.35", ("2143567", "2134657"), 4, (2, 4), False),
    CatalogEntry("6.23", ("2341657", "4321567"), 8, (2, 4, 8), False),
    CatalogEntry("6.14", ("5146237", "6423157"), 12, (4, 6, 12), False),
    CatalogEntry("7.33", ("3476521", "7514623"), 12, (4, 6, 12), False),
    CatalogEntry("6.09", ("3456127", "2165347"), 24, (6, 8, 12, 24), False),
    CatalogEntry("7.28", ("2341657", "2134576"), 24, (6, 8, 12, 24), False),
    CatalogEntry("6.05", ("2345167", "5342617"), 60, (12, 20, 30, 60), False),
    CatalogEntry("7.03", ("7613524", "4725163"), 168, (24, 42, 56, 84, 168), False),
)

CATALOG: Dict[str, CatalogEntry] = {e.index_name: e for e in _ENTRIES}

GROUP_INDICES: Tuple[str, ...] = tuple(CATALOG)


def catalog_entry(index_name: str) -> CatalogEntry:
    try:
        return CATALOG[index_name]
    except KeyError:
        raise ValueError(
            f"Unknown group index: {index_name} (choose from {', '.join(GROUP_INDICES)})"
        ) from None


@cached(cache=LRUCache(maxsize=len(_ENTRIES)))
def get_group(index_name: str) -> PartGroup:
    """Close the catalog generators and check the order against the catalog."""
    entry = catalog_entry(index_name)
    group = close_generators((Row.from_str(g) for g in entry.generators), index_name)
    if group.order != entry.order:
        raise RuntimeError(
            f"group {index_name} closed to order {group.order}, expected {entry.order}"
        )
    return group
