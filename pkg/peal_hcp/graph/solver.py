"""Exact Hamiltonian-cycle search for sparse, near-cubic graphs.

Each search node holds a three-state label per edge (unknown, required,
excluded). Propagation applies the degree rules, keeps required edges free
of short cycles by tracking the far end of every required path fragment, and
rejects nodes whose surviving edges are not 2-connected. Branching picks the
tightest vertex and tries requiring one of its edges before excluding it.
"""

import dataclasses as dc
import enum
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx  # type: ignore[import]

from ..utils.config import SolverConfig

LOGGER = logging.getLogger(__name__)

UNKNOWN = 0
REQUIRED = 1
EXCLUDED = 2

Edge = Tuple[int, int]
Cycle = Tuple[int, ...]


class SolveMode(enum.Enum):
    DECIDE = "decide"
    ENUMERATE = "enumerate"


class HcStatus(enum.Enum):
    HAMILTONIAN = "H"
    NON_HAMILTONIAN = "NH"
    TIMEOUT = "TIMEOUT"


class Propagation(enum.Enum):
    CONSISTENT = "consistent"
    CONTRADICTION = "contradiction"


###############################################################################
# Search graph


class _Topology:
    """Immutable edge endpoints and incidence lists, shared by all nodes."""

    def __init__(self, n: int, edges: Sequence[Edge]) -> None:
        self.n = n
        self.eu: List[int] = []
        self.ev: List[int] = []
        self.inc: List[List[int]] = [[] for _ in range(n + 1)]
        self.edge_id: Dict[Edge, int] = {}
        for u, v in sorted({(min(a, b), max(a, b)) for a, b in edges}):
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u} {v} outside 1..{n}")
            e = len(self.eu)
            self.eu.append(u)
            self.ev.append(v)
            self.edge_id[(u, v)] = e
        for e in range(len(self.eu)):
            self.inc[self.eu[e]].append(e)
            self.inc[self.ev[e]].append(e)
        # smallest neighbour first
        for v in range(1, n + 1):
            self.inc[v].sort(key=lambda e, v=v: self.eu[e] + self.ev[e] - v)

    def find(self, u: int, v: int) -> Optional[int]:
        return self.edge_id.get((min(u, v), max(u, v)))


class SearchGraph:
    """An undirected simple graph on ``1..n`` with per-edge search states.

    Args:
        n (int): number of vertices
        edges (iterable): undirected edges; order and orientation are ignored
    """

    def __init__(self, n: int, edges: Iterable[Edge]) -> None:
        topo = _Topology(n, list(edges))
        self._topo = topo
        self.state = bytearray(len(topo.eu))
        self.required = [0] * (n + 1)
        self.alive = [len(topo.inc[v]) for v in range(n + 1)]
        self.path_end = list(range(n + 1))
        self.n_required = 0
        self._queue: List[int] = list(range(1, n + 1))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "SearchGraph":
        """Relabel nodes to ``1..n`` in sorted order and copy the edges."""
        h = nx.convert_node_labels_to_integers(g, first_label=1, ordering="sorted")
        return cls(h.number_of_nodes(), h.edges())

    @property
    def n(self) -> int:
        return self._topo.n

    @property
    def edge_count(self) -> int:
        return len(self._topo.eu)

    def edges(self) -> List[Edge]:
        return list(zip(self._topo.eu, self._topo.ev))

    def has_edge(self, u: int, v: int) -> bool:
        return self._topo.find(u, v) is not None

    def copy(self) -> "SearchGraph":
        c = SearchGraph.__new__(SearchGraph)
        c._topo = self._topo
        c.state = bytearray(self.state)
        c.required = self.required[:]
        c.alive = self.alive[:]
        c.path_end = self.path_end[:]
        c.n_required = self.n_required
        c._queue = self._queue[:]
        return c

    def edge_state(self, u: int, v: int) -> int:
        e = self._topo.find(u, v)
        if e is None:
            raise KeyError(f"no edge {u} {v}")
        return self.state[e]

    def require(self, u: int, v: int) -> bool:
        e = self._topo.find(u, v)
        if e is None:
            raise KeyError(f"no edge {u} {v}")
        return self._require(e)

    def exclude(self, u: int, v: int) -> bool:
        e = self._topo.find(u, v)
        if e is None:
            raise KeyError(f"no edge {u} {v}")
        return self._exclude(e)

    ###########################################################################

    def _require(self, e: int) -> bool:
        st = self.state[e]
        if st == REQUIRED:
            return True
        if st == EXCLUDED:
            return False
        topo = self._topo
        u, v = topo.eu[e], topo.ev[e]
        if self.required[u] >= 2 or self.required[v] >= 2:
            return False
        a, b = self.path_end[u], self.path_end[v]
        if a == v:
            # closes the fragment: only the final edge may do that
            if self.n_required + 1 != topo.n:
                return False
            self._mark_required(e, u, v)
            return True
        self._mark_required(e, u, v)
        self.path_end[a] = b
        self.path_end[b] = a
        closing = topo.find(a, b)
        if closing == e:
            # u and v were both isolated
            closing = None
        if self.n_required == topo.n - 1:
            return closing is not None and self._require(closing)
        if closing is not None:
            return self._exclude(closing)
        return True

    def _mark_required(self, e: int, u: int, v: int) -> None:
        self.state[e] = REQUIRED
        self.required[u] += 1
        self.required[v] += 1
        self.n_required += 1
        self._queue.append(u)
        self._queue.append(v)

    def _exclude(self, e: int) -> bool:
        st = self.state[e]
        if st == EXCLUDED:
            return True
        if st == REQUIRED:
            return False
        u, v = self._topo.eu[e], self._topo.ev[e]
        self.state[e] = EXCLUDED
        self.alive[u] -= 1
        self.alive[v] -= 1
        self._queue.append(u)
        self._queue.append(v)
        return True

    def _settle(self) -> bool:
        """Apply the degree rules until the queue is empty."""
        topo = self._topo
        queue = self._queue
        while queue:
            v = queue.pop()
            if self.alive[v] < 2:
                return False
            if self.required[v] == 2 and self.alive[v] > 2:
                for e in topo.inc[v]:
                    if self.state[e] == UNKNOWN and not self._exclude(e):
                        return False
            elif self.alive[v] == 2 and self.required[v] < 2:
                for e in topo.inc[v]:
                    if self.state[e] == UNKNOWN and not self._require(e):
                        return False
        return True

    def _biconnected(self) -> bool:
        """Whether the non-excluded edges form a 2-connected spanning graph."""
        topo = self._topo
        n = topo.n
        state = self.state
        disc = [0] * (n + 1)
        low = [0] * (n + 1)
        clock = 1
        disc[1] = low[1] = 1
        root_children = 0
        stack = [(1, -1, iter(topo.inc[1]))]
        while stack:
            v, parent_edge, it = stack[-1]
            descended = False
            for e in it:
                if e == parent_edge or state[e] == EXCLUDED:
                    continue
                w = topo.eu[e] + topo.ev[e] - v
                if disc[w] == 0:
                    clock += 1
                    disc[w] = low[w] = clock
                    stack.append((w, e, iter(topo.inc[w])))
                    descended = True
                    break
                if disc[w] < low[v]:
                    low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p == 1:
                    root_children += 1
                elif low[v] >= disc[p]:
                    return False
        return clock == n and root_children == 1

    def propagate(self) -> bool:
        """Run all rules to a fixed point; `False` means the node is dead."""
        if self.n < 3:
            return False
        if not self._settle():
            return False
        if self.n_required == self.n:
            return True
        return self._biconnected()

    def branch_edge(self) -> Optional[int]:
        """Unknown edge at the tightest open vertex, to its smallest neighbour."""
        best = None
        best_alive = 0
        for v in range(1, self.n + 1):
            if self.required[v] < 2 and (best is None or self.alive[v] < best_alive):
                best, best_alive = v, self.alive[v]
        if best is None:
            return None
        for e in self._topo.inc[best]:
            if self.state[e] == UNKNOWN:
                return e
        raise RuntimeError(f"open vertex {best} has no unknown edge")

    def cycle(self) -> Cycle:
        """The closed required cycle, in canonical form."""
        topo = self._topo
        succ: Dict[int, List[int]] = {v: [] for v in range(1, topo.n + 1)}
        for e, st in enumerate(self.state):
            if st == REQUIRED:
                succ[topo.eu[e]].append(topo.ev[e])
                succ[topo.ev[e]].append(topo.eu[e])
        order = [1]
        prev, cur = 1, min(succ[1])
        while cur != 1:
            order.append(cur)
            a, b = succ[cur]
            prev, cur = cur, (b if a == prev else a)
        return canonical_cycle(order)


def propagate(g: SearchGraph) -> Propagation:
    return Propagation.CONSISTENT if g.propagate() else Propagation.CONTRADICTION


###############################################################################
# Cycles


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Rotate to start at the smallest vertex, heading to its smaller neighbour."""
    if not cycle:
        return ()
    i = cycle.index(min(cycle))
    rot = list(cycle[i:]) + list(cycle[:i])
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def verify_cycle(n: int, edges: Iterable[Edge], cycle: Sequence[int]) -> bool:
    """Check, without the search machinery, that `cycle` is Hamiltonian."""
    if n < 3 or len(cycle) != n or sorted(cycle) != list(range(1, n + 1)):
        return False
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        if (min(a, b), max(a, b)) not in edge_set:
            LOGGER.debug("cycle uses non-edge %d %d", a, b)
            return False
    return True


###############################################################################
# Search


@dc.dataclass
class HcResult:
    """Outcome of one solve.

    `count` is the number of distinct undirected cycles found; it is final
    only when `authoritative` is set.
    """

    status: HcStatus
    mode: SolveMode
    cycles: List[Cycle] = dc.field(default_factory=list)
    authoritative: bool = True
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def count(self) -> int:
        return len(self.cycles)

    def summary(self) -> str:
        line = f"STATUS {self.status.value} COUNT {self.count}"
        if not self.authoritative:
            line += " PARTIAL"
        return line


@dc.dataclass
class _Outcome:
    cycles: List[Cycle]
    nodes: int
    complete: bool


def _search(
    root: SearchGraph,
    mode: SolveMode,
    deadline: Optional[float],
    check_interval: int,
) -> _Outcome:
    cycles: List[Cycle] = []
    nodes = 0
    stack = [root]
    while stack:
        nodes += 1
        if deadline is not None and nodes % check_interval == 0 and time.monotonic() > deadline:
            return _Outcome(cycles, nodes, False)
        g = stack.pop()
        if not g.propagate():
            continue
        e = g.branch_edge()
        if e is None:
            cycles.append(g.cycle())
            if mode is SolveMode.DECIDE:
                return _Outcome(cycles, nodes, True)
            continue
        excl = g.copy()
        if excl._exclude(e):
            stack.append(excl)
        if g._require(e):
            stack.append(g)
    return _Outcome(cycles, nodes, True)


def _search_task(args: Tuple[SearchGraph, SolveMode, Optional[float], int]) -> _Outcome:
    return _search(*args)


def _split(root: SearchGraph, target: int) -> Tuple[List[Union[SearchGraph, Cycle]], int]:
    """Expand the top of the tree level by level into about `target` items.

    Items stay in search order; a leaf that closes a cycle is kept in place
    as the cycle itself.
    """
    frontier: List[Union[SearchGraph, Cycle]] = [root]
    nodes = 0
    while frontier and len(frontier) < target:
        nxt: List[Union[SearchGraph, Cycle]] = []
        grew = False
        for item in frontier:
            if not isinstance(item, SearchGraph):
                nxt.append(item)
                continue
            nodes += 1
            if not item.propagate():
                continue
            e = item.branch_edge()
            if e is None:
                nxt.append(item.cycle())
                continue
            grew = True
            excl = item.copy()
            if item._require(e):
                nxt.append(item)
            if excl._exclude(e):
                nxt.append(excl)
        frontier = nxt
        if not grew:
            break
    return frontier, nodes


def solve(
    g: SearchGraph,
    mode: SolveMode = SolveMode.DECIDE,
    config: Optional[SolverConfig] = None,
) -> HcResult:
    """Decide Hamiltonicity of `g`, or enumerate all its Hamiltonian cycles.

    Cycles come back in canonical form, sorted, whatever the thread count.
    """
    if config is None:
        config = SolverConfig()
    start = time.monotonic()
    deadline = None if config.budget is None else start + config.budget
    root = g.copy()

    if config.threads == 1:
        outcomes = [_search(root, mode, deadline, config.time_check_interval)]
        cycles = list(outcomes[0].cycles)
        split_nodes = 0
    else:
        frontier, split_nodes = _split(root, config.threads * config.split_factor)
        subtrees = [item for item in frontier if isinstance(item, SearchGraph)]
        LOGGER.debug("split into %d subtrees over %d workers", len(subtrees), config.threads)
        tasks = [(s, mode, deadline, config.time_check_interval) for s in subtrees]
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            outcomes = list(pool.map(_search_task, tasks))
        found = iter(outcomes)
        cycles = []
        for item in frontier:
            if isinstance(item, SearchGraph):
                cycles.extend(next(found).cycles)
            else:
                cycles.append(item)

    complete = all(o.complete for o in outcomes)
    if mode is SolveMode.DECIDE:
        # the first cycle in search order, as a single-threaded run finds it
        cycles = cycles[:1]
    else:
        cycles = sorted(set(cycles))

    if cycles and (mode is SolveMode.DECIDE or complete):
        status, authoritative = HcStatus.HAMILTONIAN, True
    elif complete:
        status, authoritative = HcStatus.NON_HAMILTONIAN, True
    else:
        status, authoritative = HcStatus.TIMEOUT, False

    result = HcResult(
        status,
        mode,
        cycles,
        authoritative,
        nodes=split_nodes + sum(o.nodes for o in outcomes),
        elapsed=time.monotonic() - start,
    )
    LOGGER.info(
        "%s on %d vertices: %s (%d nodes, %.2fs)",
        mode.value,
        g.n,
        result.summary(),
        result.nodes,
        result.elapsed,
    )
    return result
