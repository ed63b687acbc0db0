"""Assemble HCP instances from gadgets wired by the call transition maps.

Gadget ``j`` (1-based, representatives in ascending six id order) owns
vertices ``(j - 1) * m + 1 .. j * m``. Outgoing slot ``k`` of a gadget
carries the calls made from its six-end ``k``; in Stedman, slots 1-3 are the
slow six-ends and 4-6 the quick ones.
"""

import dataclasses as dc
import enum
import logging
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

import networkx as nx  # type: ignore[import]

from ..graph.gadgets import Gadget, GadgetKind, build_gadget
from ..graph.solver import SearchGraph
from ..ringing.catalog import get_group
from ..ringing.groups import PartitionIntoParts, partition_into_parts
from ..ringing.rows import Row
from ..ringing.sixes import METHOD_SPEEDS, Call, Method, SixEndRef, Speed, transitions

LOGGER = logging.getLogger(__name__)

Edge = Tuple[int, int]

METHOD_GADGET = {
    Method.ERIN: GadgetKind.S3,
    Method.STEDMAN: GadgetKind.S6,
}


class NhCheck(enum.Enum):
    POSSIBLY_HAMILTONIAN = "possibly-hamiltonian"
    TRIVIALLY_NON_HAMILTONIAN = "trivially-non-hamiltonian"


@dc.dataclass(frozen=True)
class VertexMeta:
    six_id: int
    label: int


@dc.dataclass(frozen=True)
class Wiring:
    """One wiring edge: a call from `source` arriving at `target`.

    Both six-ends are orbit representatives.
    """

    out_vertex: int
    in_vertex: int
    source: SixEndRef
    call: Call
    target: SixEndRef

    @property
    def edge(self) -> Edge:
        return (min(self.out_vertex, self.in_vertex), max(self.out_vertex, self.in_vertex))


def slot_of_ref(ref: SixEndRef) -> int:
    """Gadget slot used by a six-end: ``k``, or ``k + 3`` when quick."""
    return ref.k + (3 if ref.speed is Speed.QUICK else 0)


def ref_of_slot(method: Method, six_id: int, slot: int) -> SixEndRef:
    """Inverse of `slot_of_ref`.

    In Stedman, slots 1-3 hold slow six-ends on both sides of a gadget: slow
    calls leave from them and quick calls arrive at them.
    """
    if method is Method.ERIN:
        return SixEndRef(six_id, slot, Speed.NONE)
    speed = Speed.SLOW if slot <= 3 else Speed.QUICK
    return SixEndRef(six_id, (slot - 1) % 3 + 1, speed)


class Instance:
    """A built (possibly quotiented) HCP instance with its metadata.

    Args:
        method (Method): Erin or Stedman
        group_index (str): catalog index of the part group
        representatives (tuple): six ids owning the gadgets, in gadget order
        edges (frozenset): undirected edges ``(u, v)`` with ``u < v``
        wiring (dict): wiring edge -> its call metadata
        dropped_self_edges (int): wiring edges left out by request
    """

    def __init__(
        self,
        method: Method,
        group_index: str,
        representatives: Tuple[int, ...],
        edges: FrozenSet[Edge],
        wiring: Dict[Edge, Wiring],
        dropped_self_edges: int = 0,
    ) -> None:
        self.method = method
        self.group_index = group_index
        self.gadget: Gadget = build_gadget(METHOD_GADGET[method])
        self.representatives = representatives
        self.edges = edges
        self.wiring = wiring
        self.dropped_self_edges = dropped_self_edges
        self._gadget_of_six = {s: j for j, s in enumerate(representatives, start=1)}

    @property
    def vertex_count(self) -> int:
        return len(self.representatives) * self.gadget.vertex_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def name(self) -> str:
        prefix = "Erin" if self.method is Method.ERIN else "Sted"
        return f"{prefix}{840 // len(self.representatives)}_{self.group_index}"

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def vertex(self, gadget_index: int, label: int) -> int:
        return (gadget_index - 1) * self.gadget.vertex_count + label

    def gadget_index_of_six(self, six_id: int) -> int:
        return self._gadget_of_six[six_id]

    def meta(self, v: int) -> VertexMeta:
        """Representative six and gadget-internal label of vertex `v`."""
        if not 1 <= v <= self.vertex_count:
            raise KeyError(f"no vertex {v}")
        j, label = divmod(v - 1, self.gadget.vertex_count)
        return VertexMeta(self.representatives[j], label + 1)

    def iter_meta(self) -> Iterator[Tuple[int, VertexMeta]]:
        for v in range(1, self.vertex_count + 1):
            yield v, self.meta(v)

    def sorted_wiring(self) -> List[Wiring]:
        return [self.wiring[e] for e in sorted(self.wiring)]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.vertex_count + 1))
        g.add_edges_from(self.sorted_edges())
        return g

    def search_graph(self) -> SearchGraph:
        return SearchGraph(self.vertex_count, self.sorted_edges())


###############################################################################
# Construction


def _build(method: Method, parts: PartitionIntoParts, drop_self_edges: bool) -> Instance:
    gadget = build_gadget(METHOD_GADGET[method])
    maps = transitions(method)
    m = gadget.vertex_count
    reps = parts.representatives
    edges = set()

    for j in range(1, len(reps) + 1):
        base = (j - 1) * m
        for u, v in gadget.sorted_edges():
            edges.add((base + u, base + v))

    wiring: Dict[Edge, Wiring] = {}
    dropped = 0
    speeds = METHOD_SPEEDS[method]
    for j, six_id in enumerate(reps, start=1):
        for speed in speeds:
            for k in (1, 2, 3):
                source = SixEndRef(six_id, k, speed)
                for call in maps.calls:
                    if call.source_speed is not speed:
                        continue
                    target = parts.rep_of_six_end(maps.apply(call, source))
                    a = parts.gadget_index(target.six_id)
                    out_v = (j - 1) * m + gadget.outgoing[slot_of_ref(source) - 1]
                    in_v = (a - 1) * m + gadget.incoming[slot_of_ref(target) - 1]
                    if a == j and drop_self_edges:
                        dropped += 1
                        continue
                    w = Wiring(out_v, in_v, source, call, target)
                    if w.edge in edges:
                        raise RuntimeError(
                            f"duplicate edge {w.edge} from {call.label} at six {six_id}"
                        )
                    edges.add(w.edge)
                    wiring[w.edge] = w

    inst = Instance(method, parts.group.index_name, reps, frozenset(edges), wiring, dropped)
    LOGGER.info(
        "built %s: %d vertices, %d edges (%d self edges dropped)",
        inst.name,
        inst.vertex_count,
        inst.edge_count,
        dropped,
    )
    return inst


def build_erin(parts: PartitionIntoParts, drop_self_edges: bool = False) -> Instance:
    """One S3 per representative six; P and B wired from ``o_k`` to ``i_b``."""
    return _build(Method.ERIN, parts, drop_self_edges)


def build_stedman(parts: PartitionIntoParts, drop_self_edges: bool = False) -> Instance:
    """One S6 per representative six.

    Slow calls go from ``o_k`` to ``i_{b+3}``; quick calls from ``o_{k+3}``
    to ``i_b``.
    """
    return _build(Method.STEDMAN, parts, drop_self_edges)


def build_instance(
    method: Method,
    group_index: str,
    drop_self_edges: bool = False,
    prefer: Sequence[Row] = (),
) -> Instance:
    """Build the instance for a catalog group."""
    parts = partition_into_parts(get_group(group_index), prefer=prefer)
    if method is Method.ERIN:
        return build_erin(parts, drop_self_edges)
    return build_stedman(parts, drop_self_edges)


def expected_size(method: Method, order: int) -> Tuple[int, int]:
    """(vertices, edges) of the full-wiring instance for a group of `order`."""
    gadgets = 840 // order
    if method is Method.ERIN:
        return 16 * gadgets, 26 * gadgets
    return 33 * gadgets, 54 * gadgets


def odd_part_length(method: Method, order: int) -> bool:
    """Whether a Stedman part of 840/order sixes is odd, so cannot alternate."""
    return method is Method.STEDMAN and (840 // order) % 2 == 1


def trivial_nh_check(method: Method, parts: PartitionIntoParts) -> NhCheck:
    """Stedman parts must alternate quick and slow sixes, so need even length."""
    if odd_part_length(method, parts.group.order):
        return NhCheck.TRIVIALLY_NON_HAMILTONIAN
    return NhCheck.POSSIBLY_HAMILTONIAN
