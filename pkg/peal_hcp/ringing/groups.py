"""Part groups: bell relabellings that split the extent into equal parts.

Group elements are written as rows but act on bell *labels*: element
``2345167`` sends bell 1 to 2, 2 to 3, and so on. Relabelling commutes with
place changes, so it carries sixes to sixes.
"""

import dataclasses as dc
import logging
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .rows import Parity, Row
from .sixes import Extent, Six, SixEndRef, partition_extent

LOGGER = logging.getLogger(__name__)

MAX_GROUP_ORDER = 5040


class InvalidPartGroupError(ValueError):
    """Raised when a group cannot split the sixes into equal parts."""


def compose(g: Row, h: Row) -> Row:
    """The relabelling `h` followed by `g`."""
    return Row(tuple(g.places[b - 1] for b in h.places))


def relabel(r: Row, g: Row) -> Row:
    """Replace each bell `b` in `r` by its image under `g`; places are kept."""
    if r.n_bells != g.n_bells:
        raise ValueError(f"cannot relabel {r} by {g}")
    return Row(tuple(g.places[b - 1] for b in r.places))


def cycle_type(g: Row) -> Tuple[int, ...]:
    """Lengths of the non-trivial cycles of `g`, longest first."""
    seen = set()
    lengths = []
    for start in range(1, g.n_bells + 1):
        if start in seen:
            continue
        n = 0
        b = start
        while b not in seen:
            seen.add(b)
            b = g.places[b - 1]
            n += 1
        if n > 1:
            lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


@dc.dataclass(frozen=True)
class PartGroup:
    """A closed set of relabellings, ascending textual order."""

    index_name: str
    generators: Tuple[Row, ...]
    elements: Tuple[Row, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def parts(self) -> int:
        return self.order

    @property
    def identity(self) -> Row:
        return self.elements[0]

    def __contains__(self, g: object) -> bool:
        return g in self.elements


def close_generators(gens: Iterable[Row], index_name: str = "") -> PartGroup:
    """Close `gens` under composition (finite, so inverses come for free)."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n_bells = gens[0].n_bells
    identity = Row.rounds(n_bells)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = compose(h, g)
                if gh not in elements:
                    elements.add(gh)
                    nxt.append(gh)
        if len(elements) > MAX_GROUP_ORDER:
            raise RuntimeError(f"closure of {[str(g) for g in gens]} exceeds {MAX_GROUP_ORDER}")
        frontier = nxt
    LOGGER.debug("closed %s: order %d", [str(g) for g in gens], len(elements))
    return PartGroup(index_name, gens, tuple(sorted(elements)))


###############################################################################
# Validity


@dc.dataclass(frozen=True)
class GroupValidity:
    """Which elements break the part-group conditions."""

    three_cycles: Tuple[Row, ...] = ()
    three_swaps: Tuple[Row, ...] = ()
    odd_elements: Tuple[Row, ...] = ()
    order_divides: bool = True

    @property
    def valid(self) -> bool:
        return (
            not self.three_cycles
            and not self.three_swaps
            and not self.odd_elements
            and self.order_divides
        )

    def describe(self) -> str:
        if self.valid:
            return "valid"
        problems = []
        if self.three_cycles:
            problems.append(f"3-bell cycles: {' '.join(map(str, self.three_cycles))}")
        if self.three_swaps:
            problems.append(f"three swapped pairs: {' '.join(map(str, self.three_swaps))}")
        if self.odd_elements:
            problems.append(f"odd elements: {' '.join(map(str, self.odd_elements))}")
        if not self.order_divides:
            problems.append("order does not divide 840")
        return "; ".join(problems)


def validate_part_group(g: PartGroup) -> GroupValidity:
    """Check that splitting into parts cannot interfere with the sixes.

    The sixes are orbits of a place group whose non-trivial elements are
    3-cycles and triples of swapped pairs; a relabelling conjugate to either
    would fix a six. Odd relabellings would send six-ends to even rows.
    """
    three_cycles = []
    three_swaps = []
    odd = []
    for el in g.elements:
        ct = cycle_type(el)
        if ct == (3,):
            three_cycles.append(el)
        elif ct == (2, 2, 2):
            three_swaps.append(el)
        if el.parity is Parity.ODD:
            odd.append(el)
    return GroupValidity(
        tuple(three_cycles), tuple(three_swaps), tuple(odd), 840 % g.order == 0
    )


###############################################################################
# Partition into parts


class PartitionIntoParts:
    """Orbits of the sixes under a part group, with chosen representatives.

    Args:
        group (PartGroup): a valid part group
        rep_of_six (dict): six id -> (representative six id, relabelling
            taking the six onto its representative)
        extent (Extent): the numbered sixes
    """

    def __init__(
        self,
        group: PartGroup,
        rep_of_six: Dict[int, Tuple[int, Row]],
        extent: Extent,
    ) -> None:
        self.group = group
        self.rep_of_six = rep_of_six
        self.extent = extent
        self.representatives: Tuple[int, ...] = tuple(
            sorted({rep for rep, _ in rep_of_six.values()})
        )
        self._gadget_of = {rep: j for j, rep in enumerate(self.representatives, start=1)}

    def __len__(self) -> int:
        return len(self.representatives)

    def gadget_index(self, rep_six_id: int) -> int:
        """1-based position of a representative in canonical order."""
        return self._gadget_of[rep_six_id]

    def orbit(self, six_id: int) -> List[int]:
        rep = self.rep_of_six[six_id][0]
        return sorted(s for s, (r, _) in self.rep_of_six.items() if r == rep)

    def rep_of_six_end(self, ref: SixEndRef) -> SixEndRef:
        """Carry a six-end to the matching six-end of its representative."""
        rep, g = self.rep_of_six[ref.six_id]
        image = self.extent.ref_of(relabel(self.extent.row_of(ref), g), ref.speed)
        if image.six_id != rep:
            raise RuntimeError(f"relabelling {ref} by {g} left its orbit")
        return image


def partition_into_parts(
    g: PartGroup,
    extent: Optional[Extent] = None,
    prefer: Sequence[Row] = (),
) -> PartitionIntoParts:
    """Split the 840 sixes into orbits of size ``g.order``.

    The representative of an orbit is the six of the first row in `prefer`
    that lies in it, otherwise the six with the smallest member.
    """
    validity = validate_part_group(g)
    if not validity.valid:
        raise InvalidPartGroupError(f"group {g.index_name or g.generators}: {validity.describe()}")
    if extent is None:
        extent = partition_extent()

    def _orbit_from(rep: Six) -> None:
        images = {}
        for h in g.elements:
            six_id = extent.six_of(relabel(rep.members[0], h)).id
            images.setdefault(six_id, h)
        if len(images) != g.order:
            raise RuntimeError(
                f"orbit of six {rep.id} under {g.index_name} has size {len(images)}, not {g.order}"
            )
        for six_id, h in images.items():
            if six_id in rep_of_six:
                raise RuntimeError(f"six {six_id} lies in two orbits")
            rep_of_six[six_id] = (rep.id, h.inverse())

    rep_of_six: Dict[int, Tuple[int, Row]] = {}
    for r in prefer:
        six = extent.six_of(r)
        if six.id not in rep_of_six:
            _orbit_from(six)
    for six in extent:
        if six.id not in rep_of_six:
            _orbit_from(six)

    sizes = Counter(rep for rep, _ in rep_of_six.values())
    LOGGER.info(
        "group %s: %d orbits of size %s",
        g.index_name,
        len(sizes),
        sorted(set(sizes.values())),
    )
    return PartitionIntoParts(g, rep_of_six, extent)
