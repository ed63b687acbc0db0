"""Turn Hamiltonian cycles back into calls, rows and verdicts.

`decode` reads the calls off a cycle of a built instance. `expand` replays a
part's calls under every group element to get the round blocks, and
`verify_peal` re-checks blocks of rows from the place notation alone.
"""

import dataclasses as dc
import enum
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..ringing.catalog import catalog_entry, get_group
from ..ringing.groups import compose, relabel
from ..ringing.rows import Row, change_between, trace_sequence
from ..ringing.sixes import (
    METHOD_CALLS,
    METHOD_PATTERN,
    Call,
    Extent,
    Method,
    SixEndRef,
    partition_extent,
)
from .builder import Instance, Wiring

LOGGER = logging.getLogger(__name__)


class DecodeError(ValueError):
    """Raised when a cycle is not a traversal of the gadget construction."""


class InvalidCallSequence(ValueError):
    """Raised when a call sequence cannot be expanded into round blocks."""

    def __init__(self, position: int, msg: str) -> None:
        super().__init__(f"call {position}: {msg}")
        self.position = position


###############################################################################
# Call sequences


@dc.dataclass(frozen=True)
class CallSequence:
    """The calls of one part, starting from six-end `start`."""

    method: Method
    group_index: str
    start: SixEndRef
    calls: Tuple[Call, ...]

    def __len__(self) -> int:
        return len(self.calls)

    def validate(self) -> None:
        """Check call kinds and the quick/slow alternation, cyclically."""
        if not self.calls:
            raise InvalidCallSequence(0, "no calls")
        allowed = METHOD_CALLS[self.method]
        speed = self.start.speed
        for i, call in enumerate(self.calls, start=1):
            if call not in allowed:
                raise InvalidCallSequence(i, f"{call.label} is not a {self.method.value} call")
            if call.source_speed is not speed:
                raise InvalidCallSequence(
                    i, f"{call.label} follows a {speed.name.lower()} six-end"
                )
            speed = call.target_speed
        if speed is not self.start.speed:
            raise InvalidCallSequence(len(self.calls), "part ends on the wrong speed of six")

    def bob_positions(self) -> List[int]:
        return [i for i, c in enumerate(self.calls, start=1) if c.is_bob]

    def concise(self) -> str:
        """Bob positions within the part, then the part length."""
        bobs = " ".join(map(str, self.bob_positions())) or "-"
        return f"bobs at {bobs} / {len(self.calls)}"

    def to_text(self, extent: Optional[Extent] = None) -> str:
        if extent is None:
            extent = partition_extent()
        lines = [f"{self.method.value} {self.group_index} {extent.format_ref(self.start)}"]
        lines.extend(c.value for c in self.calls)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, extent: Optional[Extent] = None) -> "CallSequence":
        """Parse the header ``method group start`` and one call token per line."""
        if extent is None:
            extent = partition_extent()
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise ValueError("empty call sequence")
        header = lines[0].split()
        if len(header) != 3:
            raise ValueError(f"expected 'method group start', got {lines[0]!r}")
        method = Method(header[0])
        catalog_entry(header[1])
        start = extent.parse_ref(header[2])
        try:
            calls = tuple(Call(tok) for tok in lines[1:])
        except ValueError as e:
            raise ValueError(f"bad call token: {e}") from None
        cs = cls(method, header[1], start, calls)
        cs.validate()
        return cs


###############################################################################
# Decoding


def _traversal(inst: Instance, cycle: Sequence[int]) -> List[Tuple[int, int]]:
    """Consecutive vertex pairs of the cycle that are wiring edges, in order."""
    n = len(cycle)
    out = []
    for i in range(n):
        a, b = cycle[i], cycle[(i + 1) % n]
        if (min(a, b), max(a, b)) in inst.wiring:
            out.append((a, b))
    return out


def _orientation_problem(inst: Instance, steps: List[Tuple[int, int]]) -> Optional[str]:
    for a, b in steps:
        w = inst.wiring[(min(a, b), max(a, b))]
        if w.out_vertex != a:
            return f"gadget of six {inst.meta(a).six_id} left through incoming vertex {a}"
    return None


def decode(inst: Instance, cycle: Sequence[int]) -> CallSequence:
    """Read the calls off a Hamiltonian cycle of `inst`.

    The cycle is oriented so that every wiring edge runs outgoing to
    incoming; the part starts with the call leaving the first gadget.
    """
    if sorted(cycle) != list(range(1, inst.vertex_count + 1)):
        raise DecodeError("cycle does not visit every vertex exactly once")
    forward = _traversal(inst, cycle)
    problem = _orientation_problem(inst, forward)
    if problem is None:
        steps = forward
    else:
        backward = _traversal(inst, list(reversed(cycle)))
        if _orientation_problem(inst, backward) is not None:
            raise DecodeError(f"no orientation runs every gadget incoming to outgoing: {problem}")
        steps = backward

    n_gadgets = len(inst.representatives)
    if len(steps) != n_gadgets:
        raise DecodeError(f"cycle uses {len(steps)} wiring edges for {n_gadgets} gadgets")
    wires: List[Wiring] = [inst.wiring[(min(a, b), max(a, b))] for a, b in steps]

    for i, w in enumerate(wires):
        nxt = wires[(i + 1) % len(wires)]
        if w.target != nxt.source:
            raise DecodeError(
                f"gadget of six {w.target.six_id} entered at six-end {w.target.k} "
                f"but left from six-end {nxt.source.k}"
            )

    first = inst.representatives[0]
    i0 = next(i for i, w in enumerate(wires) if w.source.six_id == first)
    ordered = wires[i0:] + wires[:i0]
    cs = CallSequence(
        inst.method, inst.group_index, ordered[0].source, tuple(w.call for w in ordered)
    )
    LOGGER.debug("decoded %s: %s", inst.name, cs.concise())
    return cs


def wiring_edges(inst: Instance, cs: CallSequence) -> List[Tuple[int, int]]:
    """The wiring edges a call sequence walks through, in call order."""
    by_call: Dict[Tuple[SixEndRef, Call], Wiring] = {
        (w.source, w.call): w for w in inst.wiring.values()
    }
    ref = cs.start
    out = []
    for i, call in enumerate(cs.calls, start=1):
        try:
            w = by_call[(ref, call)]
        except KeyError:
            raise InvalidCallSequence(i, f"no wiring edge for {call.label} from {ref}") from None
        out.append(w.edge)
        ref = w.target
    return out


###############################################################################
# Expansion


@dc.dataclass(frozen=True)
class RoundBlocks:
    """Closed cycles of rows, each listed from the row after a part start."""

    blocks: Tuple[Tuple[Row, ...], ...]
    parts_per_block: int

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def row_count(self) -> int:
        return sum(len(b) for b in self.blocks)

    def covers_extent(self) -> bool:
        rows = {r for b in self.blocks for r in b}
        return len(rows) == self.row_count == 5040


def _replay_part(cs: CallSequence, extent: Extent) -> Tuple[List[Row], Row]:
    """Rows of the part from its start six-end; also returns the part end."""
    r = extent.row_of(cs.start)
    rows: List[Row] = []
    for call in cs.calls:
        rows.extend(trace_sequence(r, call.notation))
        r = rows[-1]
    return rows, r


def expand(cs: CallSequence) -> RoundBlocks:
    """Replay the part under every group element and join parts into blocks."""
    cs.validate()
    extent = partition_extent()
    group = get_group(cs.group_index)
    start_row = extent.row_of(cs.start)
    part_rows, end_row = _replay_part(cs, extent)

    # the part must end on the image of its start under some group element
    step = next((h for h in group.elements if relabel(start_row, h) == end_row), None)
    if step is None:
        raise InvalidCallSequence(len(cs), f"part ends at {end_row}, not a part start")

    seen_six: Dict[int, Tuple[int, int]] = {}
    done = set()
    blocks = []
    for g in group.elements:
        if g in done:
            continue
        block: List[Row] = []
        h = g
        while h not in done:
            done.add(h)
            for i in range(len(cs)):
                six = extent.six_of(relabel(part_rows[6 * i], h)).id
                if six in seen_six:
                    raise InvalidCallSequence(
                        i + 1, f"revisits six {six} (block {len(blocks) + 1})"
                    )
                seen_six[six] = (len(blocks), i)
            block.extend(relabel(r, h) for r in part_rows)
            h = compose(h, step)
        blocks.append(tuple(block))

    entry = catalog_entry(cs.group_index)
    result = RoundBlocks(tuple(blocks), group.order // len(blocks))
    if len(cs) == entry.sixes_per_part and result.block_count not in entry.round_blocks:
        LOGGER.warning(
            "%d round blocks, outside the expected %s for group %s",
            result.block_count,
            entry.round_blocks,
            cs.group_index,
        )
    LOGGER.info("expanded %s into %d round blocks", cs.concise(), result.block_count)
    return result


###############################################################################
# Verification


class Verdict(enum.Enum):
    PEAL = "peal"
    ROUND_BLOCK_COVER = "round-block-cover"
    TOUCH = "touch"
    INVALID = "invalid"


@dc.dataclass(frozen=True)
class PealVerdict:
    """Outcome of row-level verification.

    `first_bad_change` is ``(block, change index)`` of the first change that
    breaks the method, 0-based; change ``i`` leads from row ``i`` to the next.
    """

    verdict: Verdict
    block_count: int
    rows: int
    first_bad_change: Optional[Tuple[int, int]] = None
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.INVALID


def _changes_match(block: Sequence[Row], method: Method) -> Optional[int]:
    """Index of the first change off the method pattern at the best offset."""
    pattern = METHOD_PATTERN[method]
    n = len(block)
    places = []
    for i in range(n):
        c = change_between(block[i], block[(i + 1) % n])
        places.append(None if c is None else c.format())
    best = 0
    for offset in range(len(pattern)):
        for i, p in enumerate(places):
            want = pattern[(i + offset) % len(pattern)]
            ok = p in ("7", "5") if want is None else p == want
            if not ok:
                best = max(best, i)
                break
        else:
            return None
    return best


def verify_peal(blocks: RoundBlocks, method: Method) -> PealVerdict:
    """Check blocks of rows against the method, independently of any graph."""
    n_rows = blocks.row_count
    seen = set()
    for b, block in enumerate(blocks.blocks):
        if len(block) < 2:
            return PealVerdict(Verdict.INVALID, blocks.block_count, n_rows, (b, 0), "block too short")
        for i, r in enumerate(block):
            if r in seen:
                return PealVerdict(
                    Verdict.INVALID, blocks.block_count, n_rows, (b, i), f"row {r} repeats"
                )
            seen.add(r)
        bad = _changes_match(block, method)
        if bad is not None:
            return PealVerdict(
                Verdict.INVALID,
                blocks.block_count,
                n_rows,
                (b, bad),
                f"change {bad} of block {b + 1} is not {method.value}",
            )
    if n_rows == 5040:
        verdict = Verdict.PEAL if blocks.block_count == 1 else Verdict.ROUND_BLOCK_COVER
    else:
        verdict = Verdict.TOUCH
    return PealVerdict(verdict, blocks.block_count, n_rows)
