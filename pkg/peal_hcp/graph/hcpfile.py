"""TSPLIB-style HCP files with an EDGE_LIST edge section."""

import dataclasses as dc
import logging
from pathlib import Path
from typing import Iterable, List, Set, TextIO, Tuple, Union

LOGGER = logging.getLogger(__name__)

Edge = Tuple[int, int]


class InstanceFormatError(ValueError):
    """Raised for a malformed instance or sidecar file."""

    def __init__(self, path: Union[str, Path], line_no: int, msg: str) -> None:
        super().__init__(f"{path}:{line_no}: {msg}")
        self.path = str(path)
        self.line_no = line_no


@dc.dataclass(frozen=True)
class HcpGraph:
    """An undirected graph on vertices ``1..dimension`` as read from disk."""

    name: str
    dimension: int
    edges: Tuple[Edge, ...]

    def edge_set(self) -> Set[Edge]:
        return set(self.edges)


def format_hcp(name: str, dimension: int, edges: Iterable[Edge]) -> str:
    """Render the file body: header, sorted ``u v`` lines with ``u < v``, ``-1``, ``EOF``."""
    norm = sorted({(min(u, v), max(u, v)) for u, v in edges})
    lines = [
        f"NAME: {name}",
        "TYPE: HCP",
        f"DIMENSION: {dimension}",
        "EDGE_DATA_FORMAT: EDGE_LIST",
        "EDGE_DATA_SECTION",
    ]
    lines.extend(f"{u} {v}" for u, v in norm)
    lines.extend(["-1", "EOF"])
    return "\n".join(lines) + "\n"


def write_hcp(path: Union[str, Path], name: str, dimension: int, edges: Iterable[Edge]) -> None:
    text = format_hcp(name, dimension, edges)
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(text)
    LOGGER.info("wrote %s (DIMENSION %d)", path, dimension)


def _parse(f: TextIO, path: Union[str, Path]) -> HcpGraph:
    header = {}
    edges: List[Edge] = []
    seen: Set[Edge] = set()
    in_edges = False
    done = False
    for line_no, raw in enumerate(f, start=1):
        line = raw.strip()
        if not line:
            continue
        if done:
            if line != "EOF":
                raise InstanceFormatError(path, line_no, f"unexpected data after -1: {line!r}")
            continue
        if not in_edges:
            if line == "EDGE_DATA_SECTION":
                in_edges = True
                continue
            if line == "EOF":
                break
            key, sep, value = line.partition(":")
            if not sep:
                raise InstanceFormatError(path, line_no, f"expected 'KEY: value', got {line!r}")
            header[key.strip().upper()] = value.strip()
            continue
        if line == "-1":
            done = True
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InstanceFormatError(path, line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InstanceFormatError(path, line_no, f"non-integer vertex in {line!r}") from None
        e = (min(u, v), max(u, v))
        if u == v or e in seen:
            raise InstanceFormatError(path, line_no, f"loop or repeated edge {u} {v}")
        seen.add(e)
        edges.append(e)

    if header.get("TYPE", "").upper() != "HCP":
        raise InstanceFormatError(path, 0, f"TYPE is {header.get('TYPE')!r}, expected HCP")
    if header.get("EDGE_DATA_FORMAT", "EDGE_LIST").upper() != "EDGE_LIST":
        raise InstanceFormatError(path, 0, "only EDGE_DATA_FORMAT: EDGE_LIST is supported")
    try:
        dimension = int(header["DIMENSION"])
    except (KeyError, ValueError):
        raise InstanceFormatError(path, 0, "missing or non-integer DIMENSION") from None
    if not in_edges:
        raise InstanceFormatError(path, 0, "no EDGE_DATA_SECTION")
    for u, v in edges:
        if not (1 <= u <= dimension and 1 <= v <= dimension):
            raise InstanceFormatError(path, 0, f"edge {u} {v} outside 1..{dimension}")
    return HcpGraph(header.get("NAME", Path(path).stem), dimension, tuple(edges))


def read_hcp(path: Union[str, Path]) -> HcpGraph:
    """Parse an HCP file; errors carry the path and line number."""
    with open(path, encoding="ascii") as f:
        graph = _parse(f, path)
    LOGGER.debug("read %s: %d vertices, %d edges", path, graph.dimension, len(graph.edges))
    return graph
