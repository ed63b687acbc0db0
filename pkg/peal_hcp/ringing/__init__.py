"""Rows, sixes and part groups for Stedman and Erin Triples."""

from .catalog import CATALOG, GROUP_INDICES, CatalogEntry, catalog_entry, get_group
from .groups import (
    GroupValidity,
    InvalidPartGroupError,
    PartGroup,
    PartitionIntoParts,
    close_generators,
    compose,
    cycle_type,
    partition_into_parts,
    relabel,
    validate_part_group,
)
from .rows import (
    Change,
    Parity,
    PlaceNotation,
    PlaceNotationError,
    Row,
    apply_change,
    apply_sequence,
    change_between,
    parse_place_notation,
    plain_course_length,
)
from .sixes import (
    Call,
    Extent,
    Method,
    Six,
    SixEndRef,
    Speed,
    TransitionMaps,
    erin_transitions,
    generate_six,
    partition_extent,
    stedman_transitions,
    transitions,
)

__all__ = [
    "CATALOG",
    "GROUP_INDICES",
    "CatalogEntry",
    "catalog_entry",
    "get_group",
    "GroupValidity",
    "InvalidPartGroupError",
    "PartGroup",
    "PartitionIntoParts",
    "close_generators",
    "compose",
    "cycle_type",
    "partition_into_parts",
    "relabel",
    "validate_part_group",
    "Change",
    "Parity",
    "PlaceNotation",
    "PlaceNotationError",
    "Row",
    "apply_change",
    "apply_sequence",
    "change_between",
    "parse_place_notation",
    "plain_course_length",
    "Call",
    "Extent",
    "Method",
    "Six",
    "SixEndRef",
    "Speed",
    "TransitionMaps",
    "erin_transitions",
    "generate_six",
    "partition_extent",
    "stedman_transitions",
    "transitions",
]
