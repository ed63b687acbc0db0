"""Sixes, six-ends and the call transition maps.

The extent splits into 840 sixes, each the orbit of a row under repeated
3.1.3.1.3.1. Only odd rows are six-ends, three per six. A call takes a
six-end, through one call change and the next six's internal changes, to the
next six-end.
"""

import dataclasses as dc
import enum
import logging
from typing import Dict, Iterator, List, Mapping, Tuple

from cachetools import LRUCache, cached

from .rows import (
    Parity,
    PlaceNotation,
    Row,
    all_rows,
    apply_sequence,
    parse_place_notation,
    trace_sequence,
)

LOGGER = logging.getLogger(__name__)

SIX_PATTERN = parse_place_notation("3.1.3.1.3.1")
N_SIXES = 840


class Method(enum.Enum):
    """Bobs-only methods built on sixes."""

    ERIN = "erin"
    STEDMAN = "stedman"


class Speed(enum.Enum):
    """Whether a six-end closes a slow six, a quick six, or (Erin) neither."""

    SLOW = "S"
    QUICK = "Q"
    NONE = ""


class Call(enum.Enum):
    """A six-end transition, named by its token in call-sequence files."""

    PLAIN = "p"
    BOB = "b"
    SLOW_PLAIN = "sp"
    QUICK_PLAIN = "qp"
    SLOW_BOB = "sb"
    QUICK_BOB = "qb"

    @property
    def notation(self) -> PlaceNotation:
        return CALL_NOTATION[self]

    @property
    def is_bob(self) -> bool:
        return self in (Call.BOB, Call.SLOW_BOB, Call.QUICK_BOB)

    @property
    def source_speed(self) -> Speed:
        if self in (Call.SLOW_PLAIN, Call.SLOW_BOB):
            return Speed.SLOW
        if self in (Call.QUICK_PLAIN, Call.QUICK_BOB):
            return Speed.QUICK
        return Speed.NONE

    @property
    def target_speed(self) -> Speed:
        # a slow six is followed by a quick six and vice versa
        return {
            Speed.SLOW: Speed.QUICK,
            Speed.QUICK: Speed.SLOW,
            Speed.NONE: Speed.NONE,
        }[self.source_speed]

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")


# call change followed by the next six's five internal changes
CALL_NOTATION: Dict[Call, PlaceNotation] = {
    Call.PLAIN: parse_place_notation("7.3.1.3.1.3"),
    Call.BOB: parse_place_notation("5.3.1.3.1.3"),
    Call.SLOW_PLAIN: parse_place_notation("7.1.3.1.3.1"),
    Call.QUICK_PLAIN: parse_place_notation("7.3.1.3.1.3"),
    Call.SLOW_BOB: parse_place_notation("5.1.3.1.3.1"),
    Call.QUICK_BOB: parse_place_notation("5.3.1.3.1.3"),
}

METHOD_CALLS: Dict[Method, Tuple[Call, ...]] = {
    Method.ERIN: (Call.PLAIN, Call.BOB),
    Method.STEDMAN: (Call.SLOW_PLAIN, Call.QUICK_PLAIN, Call.SLOW_BOB, Call.QUICK_BOB),
}

METHOD_SPEEDS: Dict[Method, Tuple[Speed, ...]] = {
    Method.ERIN: (Speed.NONE,),
    Method.STEDMAN: (Speed.SLOW, Speed.QUICK),
}

# the repeating change pattern, with the call position given as None
METHOD_PATTERN: Dict[Method, Tuple[object, ...]] = {
    Method.ERIN: ("3", "1", "3", "1", "3", None),
    Method.STEDMAN: ("3", "1", "3", "1", "3", None, "1", "3", "1", "3", "1", None),
}

METHOD_PLAIN_COURSE = {
    Method.ERIN: parse_place_notation("3.1.3.1.3.7"),
    Method.STEDMAN: parse_place_notation("3.1.3.1.3.7.1.3.1.3.1.7"),
}


###############################################################################
# Sixes


@dc.dataclass(frozen=True)
class Six:
    """Six rows closed under 3.1.3.1.3.1; `id` is 0 until numbered."""

    id: int
    members: Tuple[Row, ...]
    six_ends: Tuple[Row, ...]

    def __contains__(self, r: object) -> bool:
        return r in self.members

    def format(self) -> str:
        rows = " ".join(str(r) for r in self.members)
        ends = " ".join(str(e) for e in self.six_ends)
        return f"{self.id}: {rows} | ends: {ends}"


@dc.dataclass(frozen=True)
class SixEndRef:
    """Six-end `k` (1-based, ascending textual order) of six `six_id`.

    Sort with ``key=lambda r: r.key``.
    """

    six_id: int
    k: int
    speed: Speed = Speed.NONE

    def __post_init__(self) -> None:
        if not 1 <= self.k <= 3:
            raise ValueError(f"six-end index out of range: {self.k}")

    def with_speed(self, speed: Speed) -> "SixEndRef":
        return dc.replace(self, speed=speed)

    @property
    def key(self) -> Tuple[int, int, str]:
        return (self.six_id, self.k, self.speed.value)


def generate_six(r: Row) -> Six:
    """The unnumbered six containing `r`, listed from its smallest member."""
    orbit = [r, *trace_sequence(r, SIX_PATTERN)]
    if orbit[-1] != r:
        raise RuntimeError(f"{SIX_PATTERN} does not return to {r}")
    first = min(orbit)
    members = (first, *list(trace_sequence(first, SIX_PATTERN))[:-1])
    ends = tuple(sorted(m for m in members if m.parity is Parity.ODD))
    return Six(0, members, ends)


class Extent:
    """The 840 numbered sixes with row and six-end lookups."""

    def __init__(self, sixes: List[Six]) -> None:
        self.sixes: Tuple[Six, ...] = tuple(sixes)
        self._six_of_row: Dict[Row, int] = {}
        self._ref_of_row: Dict[Row, Tuple[int, int]] = {}
        for six in self.sixes:
            for m in six.members:
                self._six_of_row[m] = six.id
            for k, e in enumerate(six.six_ends, start=1):
                self._ref_of_row[e] = (six.id, k)

    def __len__(self) -> int:
        return len(self.sixes)

    def __iter__(self) -> Iterator[Six]:
        return iter(self.sixes)

    def six(self, six_id: int) -> Six:
        """Look up by 1-based id."""
        if not 1 <= six_id <= len(self.sixes):
            raise KeyError(f"no six with id {six_id}")
        return self.sixes[six_id - 1]

    def six_of(self, r: Row) -> Six:
        return self.six(self._six_of_row[r])

    def ref_of(self, r: Row, speed: Speed = Speed.NONE) -> SixEndRef:
        """Resolve an odd row to its six-end reference."""
        try:
            six_id, k = self._ref_of_row[r]
        except KeyError:
            raise ValueError(f"{r} is not a six-end (parity {r.parity.value})") from None
        return SixEndRef(six_id, k, speed)

    def row_of(self, ref: SixEndRef) -> Row:
        return self.six(ref.six_id).six_ends[ref.k - 1]

    def format_ref(self, ref: SixEndRef) -> str:
        return f"{self.row_of(ref)}{ref.speed.value}"

    def parse_ref(self, text: str) -> SixEndRef:
        """Parse ``1325476``, ``1325476S`` or ``1325476Q``."""
        text = text.strip()
        speed = Speed.NONE
        if text and text[-1] in "SQ":
            speed = Speed(text[-1])
            text = text[:-1]
        return self.ref_of(Row.from_str(text), speed)


@cached(cache=LRUCache(maxsize=1))
def partition_extent() -> Extent:
    """Partition the 5040 rows into 840 sixes, numbered by smallest member."""
    sixes: List[Six] = []
    assigned = set()
    # the first unassigned row in ascending order is its six's smallest member
    for r in all_rows():
        if r in assigned:
            continue
        six = dc.replace(generate_six(r), id=len(sixes) + 1)
        sixes.append(six)
        assigned.update(six.members)
    if len(sixes) != N_SIXES or len(assigned) != 5040:
        raise RuntimeError(f"extent split into {len(sixes)} sixes over {len(assigned)} rows")
    LOGGER.debug("partitioned extent into %d sixes", len(sixes))
    return Extent(sixes)


###############################################################################
# Transition maps


@dc.dataclass(frozen=True)
class TransitionMaps:
    """Dense call → (six-end → next six-end) tables for one method."""

    method: Method
    maps: Mapping[Call, Mapping[SixEndRef, SixEndRef]]

    @property
    def calls(self) -> Tuple[Call, ...]:
        return METHOD_CALLS[self.method]

    def apply(self, call: Call, ref: SixEndRef) -> SixEndRef:
        if ref.speed is not call.source_speed:
            raise ValueError(f"{call.label} cannot follow a {ref.speed.name.lower()} six-end")
        return self.maps[call][ref]

    def is_bijective(self, call: Call) -> bool:
        m = self.maps[call]
        return len(set(m.values())) == len(m)


def _build_transitions(method: Method, extent: Extent) -> TransitionMaps:
    maps: Dict[Call, Dict[SixEndRef, SixEndRef]] = {}
    for call in METHOD_CALLS[method]:
        table: Dict[SixEndRef, SixEndRef] = {}
        for six in extent:
            for k, e in enumerate(six.six_ends, start=1):
                image = apply_sequence(e, call.notation)
                if image.parity is not Parity.ODD:
                    raise RuntimeError(f"{call.label} from {e} reached even row {image}")
                table[SixEndRef(six.id, k, call.source_speed)] = extent.ref_of(
                    image, call.target_speed
                )
        maps[call] = table
        if len(set(table.values())) != len(table):
            raise RuntimeError(f"{call.label} map is not a bijection")
    LOGGER.debug("built %s transition maps", method.value)
    return TransitionMaps(method, maps)


@cached(cache=LRUCache(maxsize=1))
def erin_transitions() -> TransitionMaps:
    """P (7.3.1.3.1.3) and B (5.3.1.3.1.3) on the 2520 six-ends."""
    return _build_transitions(Method.ERIN, partition_extent())


@cached(cache=LRUCache(maxsize=1))
def stedman_transitions() -> TransitionMaps:
    """SP, QP, SB, QB; slow calls land on quick six-ends and vice versa."""
    return _build_transitions(Method.STEDMAN, partition_extent())


def transitions(method: Method) -> TransitionMaps:
    if method is Method.ERIN:
        return erin_transitions()
    return stedman_transitions()
