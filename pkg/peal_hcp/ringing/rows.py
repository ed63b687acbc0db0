"""Rows, changes and place notation.

A row is stored place-indexed: ``places[i]`` is the bell struck in place
``i + 1``. Changes act on places, so applying one is a tuple shuffle.
"""

import dataclasses as dc
import enum
import itertools
import logging
import math
from typing import FrozenSet, Iterable, Iterator, Optional, Tuple, Union

from ..utils.config import N_BELLS

LOGGER = logging.getLogger(__name__)

CROSS_TOKENS = ("x", "X", "-")


class PlaceNotationError(ValueError):
    """Raised for a place-notation token that is not a valid change."""


class Parity(enum.Enum):
    """Sign of a row as a permutation."""

    EVEN = "even"
    ODD = "odd"


###############################################################################
# Rows


@dc.dataclass(frozen=True, order=True)
class Row:
    """A permutation of the bells 1..n, place-indexed."""

    places: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.places) != list(range(1, len(self.places) + 1)):
            raise ValueError(f"Not a row: {self.places}")

    @classmethod
    def from_str(cls, text: str) -> "Row":
        """Parse the concatenated-digit form, e.g. ``1325476``."""
        text = text.strip()
        if not text.isdigit():
            raise ValueError(f"Not a row: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def rounds(cls, n_bells: int = N_BELLS) -> "Row":
        return cls(tuple(range(1, n_bells + 1)))

    @property
    def n_bells(self) -> int:
        return len(self.places)

    @property
    def parity(self) -> Parity:
        return parity(self)

    def positions(self) -> Tuple[int, ...]:
        """Bell-indexed view: entry ``b - 1`` is the place of bell ``b``."""
        out = [0] * self.n_bells
        for place, bell in enumerate(self.places, start=1):
            out[bell - 1] = place
        return tuple(out)

    def inverse(self) -> "Row":
        return Row(self.positions())

    def __str__(self) -> str:
        return "".join(str(b) for b in self.places)

    def __repr__(self) -> str:
        return f"Row({self})"


def all_rows(n_bells: int = N_BELLS) -> Iterator[Row]:
    """The extent, in ascending textual order."""
    for perm in itertools.permutations(range(1, n_bells + 1)):
        yield Row(perm)


def parity(r: Row) -> Parity:
    """Sign of the permutation, from its cycle count."""
    seen = [False] * r.n_bells
    cycles = 0
    for start in range(r.n_bells):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = r.places[i] - 1
    return Parity.EVEN if (r.n_bells - cycles) % 2 == 0 else Parity.ODD


###############################################################################
# Changes


@dc.dataclass(frozen=True)
class Change:
    """A change, given by the places it leaves fixed."""

    fixed_places: FrozenSet[int]
    n_bells: int = N_BELLS
    swaps: Tuple[Tuple[int, int], ...] = dc.field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        fixed = frozenset(self.fixed_places)
        object.__setattr__(self, "fixed_places", fixed)
        if any(p < 1 or p > self.n_bells for p in fixed):
            raise PlaceNotationError(
                f"places {sorted(fixed)} out of range for {self.n_bells} bells"
            )
        swaps = []
        place = 1
        while place <= self.n_bells:
            if place in fixed:
                place += 1
            elif place + 1 <= self.n_bells and place + 1 not in fixed:
                swaps.append((place, place + 1))
                place += 2
            else:
                raise PlaceNotationError(
                    f"place {place} cannot swap with a neighbour "
                    f"(fixed {self.format()!r} on {self.n_bells} bells)"
                )
        object.__setattr__(self, "swaps", tuple(swaps))

    @classmethod
    def parse(cls, token: str, n_bells: int = N_BELLS) -> "Change":
        if token in CROSS_TOKENS:
            return cls(frozenset(), n_bells)
        if not token or not token.isdigit():
            raise PlaceNotationError(f"Invalid place-notation token: {token!r}")
        places = [int(c) for c in token]
        if len(set(places)) != len(places):
            raise PlaceNotationError(f"Repeated place in token: {token!r}")
        return cls(frozenset(places), n_bells)

    def format(self) -> str:
        if not self.fixed_places:
            return "x"
        return "".join(str(p) for p in sorted(self.fixed_places))

    def __str__(self) -> str:
        return self.format()


@dc.dataclass(frozen=True)
class PlaceNotation:
    """An ordered list of changes."""

    changes: Tuple[Change, ...] = ()

    def __len__(self) -> int:
        return len(self.changes)

    def __iter__(self) -> Iterator[Change]:
        return iter(self.changes)

    def __str__(self) -> str:
        return ".".join(c.format() for c in self.changes)


def parse_place_notation(text: str, n_bells: int = N_BELLS) -> PlaceNotation:
    """Parse dot-separated place notation, e.g. ``3.1.3.1.3.7``."""
    text = text.strip()
    if not text:
        raise PlaceNotationError("place notation is empty")
    return PlaceNotation(tuple(Change.parse(tok, n_bells) for tok in text.split(".")))


def apply_change(r: Row, c: Change) -> Row:
    if r.n_bells != c.n_bells:
        raise ValueError(f"{c.n_bells}-bell change applied to {r.n_bells}-bell row {r}")
    places = list(r.places)
    for a, b in c.swaps:
        places[a - 1], places[b - 1] = places[b - 1], places[a - 1]
    return Row(tuple(places))


def apply_sequence(r: Row, pn: Union[PlaceNotation, Iterable[Change]]) -> Row:
    for c in pn:
        r = apply_change(r, c)
    return r


def trace_sequence(r: Row, pn: Union[PlaceNotation, Iterable[Change]]) -> Iterator[Row]:
    """Yield the row after each change in turn."""
    for c in pn:
        r = apply_change(r, c)
        yield r


def change_between(a: Row, b: Row) -> Optional[Change]:
    """Return the change taking `a` to `b`, or `None` if no change does."""
    if a.n_bells != b.n_bells:
        return None
    fixed = frozenset(p for p in range(1, a.n_bells + 1) if a.places[p - 1] == b.places[p - 1])
    try:
        c = Change(fixed, a.n_bells)
    except PlaceNotationError:
        return None
    return c if apply_change(a, c) == b else None


def plain_course_length(pn: PlaceNotation, start: Row) -> int:
    """Count changes, repeating `pn` cyclically, until `start` recurs."""
    if not len(pn):
        raise ValueError("place notation is empty")
    bound = math.factorial(start.n_bells) * len(pn)
    r = start
    for count, c in enumerate(itertools.cycle(pn.changes), start=1):
        r = apply_change(r, c)
        if r == start:
            LOGGER.debug("plain course of %s from %s: %d changes", pn, start, count)
            return count
        if count >= bound:
            break
    raise RuntimeError(f"no return to {start} within {bound} changes of {pn}")
