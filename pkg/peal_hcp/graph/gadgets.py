"""The undirected in-out subgraphs S3 and S6, and their exhaustive check.

A gadget entered at incoming vertex ``i_k`` by a Hamiltonian cycle of any
host graph must be traversed completely and left at outgoing vertex
``o_k``. `verify_in_out` establishes this by enumerating paths over bitmask
visited-sets.
"""

import dataclasses as dc
import enum
import logging
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx  # type: ignore[import]
from cachetools import LRUCache, cached

LOGGER = logging.getLogger(__name__)

Edge = Tuple[int, int]


class GadgetKind(enum.Enum):
    """The two gadgets: S3 for Erin, S6 for Stedman."""

    S3 = "s3"
    S6 = "s6"


# (vertex count, extra edges on top of the path, incoming, outgoing)
_LAYOUTS: Dict[GadgetKind, Tuple[int, Tuple[Edge, ...], Tuple[int, ...], Tuple[int, ...]]] = {
    GadgetKind.S3: (
        16,
        ((1, 5), (1, 13), (3, 12), (4, 8), (9, 16)),
        (1, 6, 8),
        (16, 11, 14),
    ),
    GadgetKind.S6: (
        33,
        (
            (1, 24), (4, 9), (6, 31), (7, 12), (10, 15),
            (13, 18), (16, 27), (22, 33), (25, 30), (28, 33),
        ),
        (1, 7, 13, 19, 25, 31),
        (33, 27, 3, 9, 21, 15),
    ),
}


@dc.dataclass(frozen=True)
class Gadget:
    """An in-out subgraph on vertices ``1..vertex_count``."""

    kind: GadgetKind
    vertex_count: int
    edges: FrozenSet[Edge]
    incoming: Tuple[int, ...]
    outgoing: Tuple[int, ...]

    @property
    def n_slots(self) -> int:
        return len(self.incoming)

    @property
    def boundary(self) -> Tuple[int, ...]:
        return tuple(sorted(self.incoming + self.outgoing))

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.vertex_count + 1))
        g.add_edges_from(self.sorted_edges())
        return g

    def slot_pair(self, k: int) -> Tuple[int, int]:
        """``(i_k, o_k)`` for 1-based slot `k`."""
        return self.incoming[k - 1], self.outgoing[k - 1]


@cached(cache=LRUCache(maxsize=2))
def build_gadget(kind: GadgetKind) -> Gadget:
    """Path ``1-2-...-n`` plus the gadget's extra edges."""
    n, extra, incoming, outgoing = _LAYOUTS[kind]
    edges = {(v, v + 1) for v in range(1, n)}
    for u, v in extra:
        edges.add((min(u, v), max(u, v)))
    gadget = Gadget(kind, n, frozenset(edges), incoming, outgoing)
    if set(incoming) & set(outgoing):
        raise RuntimeError(f"{kind.value}: incoming and outgoing vertices overlap")
    return gadget


###############################################################################
# Path enumeration


def _adjacency(g: Gadget) -> List[int]:
    adj = [0] * (g.vertex_count + 1)
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _bits_desc(mask: int) -> List[int]:
    out = []
    while mask:
        v = mask.bit_length() - 1
        out.append(v)
        mask &= ~(1 << v)
    return out


def _simple_paths(adj: List[int], start: int, allowed: int) -> Iterator[Tuple[List[int], int]]:
    """Yield every simple path from `start` inside `allowed`, with its mask.

    The yielded list is reused; copy it to keep it.
    """
    path = [start]
    visited = 1 << start
    yield path, visited
    # candidates are popped from the end, so ascending labels go first
    stack = [_bits_desc(adj[start] & allowed & ~visited)]
    while stack:
        cands = stack[-1]
        if not cands:
            stack.pop()
            visited &= ~(1 << path.pop())
            continue
        nxt = cands.pop()
        path.append(nxt)
        visited |= 1 << nxt
        yield path, visited
        stack.append(_bits_desc(adj[nxt] & allowed & ~visited))


def _connected(adj: List[int], mask: int) -> bool:
    if not mask:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        v = frontier.bit_length() - 1
        frontier &= ~(1 << v)
        new = adj[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def _may_hold_ham_path(adj: List[int], mask: int) -> bool:
    """Cheap necessary conditions for a Hamiltonian path on `mask`."""
    if mask & (mask - 1) == 0:
        return True
    ends = 0
    for v in _bits_desc(mask):
        d = bin(adj[v] & mask).count("1")
        if d == 0:
            return False
        if d == 1:
            ends += 1
    return ends <= 2 and _connected(adj, mask)


def hamiltonian_paths(g: Gadget, start: int) -> List[Tuple[int, ...]]:
    """All Hamiltonian paths of `g` that begin at `start`."""
    adj = _adjacency(g)
    full = sum(1 << v for v in range(1, g.vertex_count + 1))
    return [tuple(p) for p, seen in _simple_paths(adj, start, full) if seen == full]


###############################################################################
# Certificate


@dc.dataclass
class InOutCertificate:
    """Outcome of the exhaustive in-out check for one gadget.

    Args:
        kind (GadgetKind): which gadget
        paths (dict): slot -> the unique Hamiltonian path ``i_k -> o_k``
        cross_paths (list): Hamiltonian paths joining any other boundary pair
        covers (list): pairs of disjoint paths covering the gadget with all
            endpoints on the boundary
        violations (list): human-readable problems; empty iff verified
    """

    kind: GadgetKind
    paths: Dict[int, Tuple[int, ...]] = dc.field(default_factory=dict)
    cross_paths: List[Tuple[int, ...]] = dc.field(default_factory=list)
    covers: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = dc.field(default_factory=list)
    violations: List[str] = dc.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def format(self) -> str:
        """Stable text layout: one dash-separated path per line."""
        lines = [f"gadget {self.kind.value}"]
        for k in sorted(self.paths):
            lines.append(f"slot {k}: {'-'.join(map(str, self.paths[k]))}")
        lines.append(f"cross paths: {len(self.cross_paths) or 'none'}")
        for p in self.cross_paths:
            lines.append(f"  {'-'.join(map(str, p))}")
        lines.append(f"two-path covers: {len(self.covers) or 'none'}")
        for a, b in self.covers:
            lines.append(f"  {'-'.join(map(str, a))} + {'-'.join(map(str, b))}")
        lines.append("in-out property: " + ("verified" if self.ok else "FAILED"))
        for v in self.violations:
            lines.append(f"  {v}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "paths": {k: list(p) for k, p in self.paths.items()},
            "cross_paths": [list(p) for p in self.cross_paths],
            "covers": [[list(a), list(b)] for a, b in self.covers],
            "violations": list(self.violations),
            "verified": self.ok,
        }


def _check_paths(g: Gadget, cert: InOutCertificate) -> None:
    adj = _adjacency(g)
    full = sum(1 << v for v in range(1, g.vertex_count + 1))
    boundary = set(g.boundary)
    slot_of = {}
    for k in range(1, g.n_slots + 1):
        i, o = g.slot_pair(k)
        slot_of[frozenset((i, o))] = k

    found: Dict[int, List[Tuple[int, ...]]] = {k: [] for k in range(1, g.n_slots + 1)}
    for s in g.boundary:
        for path, seen in _simple_paths(adj, s, full):
            if seen != full:
                continue
            t = path[-1]
            # each undirected path once, from its smaller endpoint
            if t not in boundary or t < s:
                continue
            k = slot_of.get(frozenset((s, t)))
            if k is None:
                cert.cross_paths.append(tuple(path))
                continue
            p = tuple(path)
            found[k].append(p if p[0] == g.incoming[k - 1] else p[::-1])

    for k, paths in found.items():
        if len(paths) != 1:
            cert.violations.append(
                f"slot {k}: {len(paths)} Hamiltonian paths from i_{k} to o_{k}, expected 1"
            )
        if paths:
            cert.paths[k] = paths[0]
    for p in cert.cross_paths:
        cert.violations.append(f"Hamiltonian path between {p[0]} and {p[-1]}: {'-'.join(map(str, p))}")


def _check_covers(g: Gadget, cert: InOutCertificate) -> None:
    """Look for two disjoint boundary-to-boundary paths covering `g`.

    A path may be a single boundary vertex passed through on two outside
    edges. The first path always starts at the smallest of the endpoints.
    """
    adj = _adjacency(g)
    full = sum(1 << v for v in range(1, g.vertex_count + 1))
    boundary = g.boundary
    bset = set(boundary)
    for a in boundary:
        for path, seen in _simple_paths(adj, a, full):
            b = path[-1]
            if b not in bset or b < a or seen == full:
                continue
            rest = full & ~seen
            if not _may_hold_ham_path(adj, rest):
                continue
            first = tuple(path)
            for c in boundary:
                if c <= a or not rest >> c & 1:
                    continue
                for second, seen2 in _simple_paths(adj, c, rest):
                    d = second[-1]
                    if seen2 == rest and d in bset and d >= c:
                        cert.covers.append((first, tuple(second)))
    for first, second in cert.covers:
        cert.violations.append(
            f"gadget can be entered twice: {'-'.join(map(str, first))} + {'-'.join(map(str, second))}"
        )


def _check_structure(g: Gadget, cert: InOutCertificate) -> None:
    graph = g.graph()
    if not nx.is_connected(graph):
        cert.violations.append("gadget is not connected")
    if set(g.incoming) & set(g.outgoing):
        cert.violations.append("incoming and outgoing vertices overlap")
    if len(set(g.boundary)) != 2 * g.n_slots:
        cert.violations.append("boundary vertices repeat")
    for v in g.boundary:
        if not 1 <= v <= g.vertex_count:
            cert.violations.append(f"boundary vertex {v} is not in the gadget")


def verify_in_out(g: Gadget) -> InOutCertificate:
    """Exhaustively check the in-out property of `g`."""
    cert = InOutCertificate(g.kind)
    _check_structure(g, cert)
    if cert.violations:
        return cert
    _check_paths(g, cert)
    _check_covers(g, cert)
    LOGGER.info(
        "gadget %s: %d slot paths, %d cross paths, %d covers",
        g.kind.value,
        len(cert.paths),
        len(cert.cross_paths),
        len(cert.covers),
    )
    return cert


@cached(cache=LRUCache(maxsize=2))
def certificate(kind: GadgetKind) -> InOutCertificate:
    return verify_in_out(build_gadget(kind))


def slot_of_incoming(g: Gadget, v: int) -> Optional[int]:
    try:
        return g.incoming.index(v) + 1
    except ValueError:
        return None


def slot_of_outgoing(g: Gadget, v: int) -> Optional[int]:
    try:
        return g.outgoing.index(v) + 1
    except ValueError:
        return None
