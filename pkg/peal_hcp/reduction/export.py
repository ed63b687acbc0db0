"""Write instances as HCP files with metadata sidecars, and read them back.

Next to ``<out>`` go ``<out>.meta`` (vertex and wiring metadata, one record
per line) and ``<out>.cert.json`` (the gadget's in-out certificate).
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..graph.gadgets import build_gadget, certificate
from ..graph.hcpfile import InstanceFormatError, read_hcp, write_hcp
from ..ringing.catalog import CATALOG
from ..ringing.sixes import Call, Method, partition_extent
from ..utils import json_util
from .builder import METHOD_GADGET, Instance, Wiring, ref_of_slot

LOGGER = logging.getLogger(__name__)

PathLike = Union[str, Path]


def sidecar_paths(out: PathLike) -> Tuple[Path, Path]:
    """(``<out>.meta``, ``<out>.cert.json``)."""
    out = Path(out)
    return out.with_name(out.name + ".meta"), out.with_name(out.name + ".cert.json")


def format_meta(inst: Instance, hcp_name: str) -> str:
    extent = partition_extent()
    lines = [
        f"method {inst.method.value}",
        f"group {inst.group_index}",
        f"hcp {hcp_name}",
        f"dropped_self_edges {inst.dropped_self_edges}",
    ]
    for v, meta in inst.iter_meta():
        lines.append(f"vertex {v} {meta.six_id} {meta.label}")
    for w in inst.sorted_wiring():
        lines.append(
            f"wiring {w.out_vertex} {w.in_vertex} {extent.format_ref(w.source)} {w.call.value}"
        )
    return "\n".join(lines) + "\n"


def export_hcp(inst: Instance, out: PathLike, name: Optional[str] = None) -> List[Path]:
    """Write the HCP file and both sidecars; returns the paths written."""
    out = Path(out)
    meta_path, cert_path = sidecar_paths(out)
    write_hcp(out, name or inst.name, inst.vertex_count, inst.sorted_edges())
    with open(meta_path, "w", encoding="ascii", newline="\n") as f:
        f.write(format_meta(inst, out.name))
    cert = certificate(inst.gadget.kind)
    with open(cert_path, "w", encoding="ascii", newline="\n") as f:
        f.write(json_util.json_encode(cert.to_dict(), indent=2) + "\n")
    LOGGER.info("exported %s with %s and %s", out, meta_path.name, cert_path.name)
    return [out, meta_path, cert_path]


###############################################################################
# Loading


def _fail(path: PathLike, line_no: int, msg: str) -> InstanceFormatError:
    return InstanceFormatError(path, line_no, msg)


def load_instance(hcp_path: PathLike, meta_path: Optional[PathLike] = None) -> Instance:
    """Rebuild an `Instance` from an exported HCP file and its ``.meta``."""
    hcp_path = Path(hcp_path)
    if meta_path is None:
        meta_path = sidecar_paths(hcp_path)[0]
    graph = read_hcp(hcp_path)
    extent = partition_extent()

    header: Dict[str, str] = {}
    vertices: List[Tuple[int, int, int, int]] = []
    wiring_lines: List[Tuple[int, List[str]]] = []
    with open(meta_path, encoding="ascii") as f:
        for line_no, raw in enumerate(f, start=1):
            parts = raw.split()
            if not parts:
                continue
            if parts[0] == "vertex":
                try:
                    v, six_id, label = (int(x) for x in parts[1:4])
                except ValueError:
                    raise _fail(meta_path, line_no, f"bad vertex record {raw.strip()!r}") from None
                vertices.append((line_no, v, six_id, label))
            elif parts[0] == "wiring":
                if len(parts) != 5:
                    raise _fail(meta_path, line_no, f"bad wiring record {raw.strip()!r}")
                wiring_lines.append((line_no, parts[1:]))
            elif len(parts) == 2:
                header[parts[0]] = parts[1]
            else:
                raise _fail(meta_path, line_no, f"unrecognised record {raw.strip()!r}")

    try:
        method = Method(header["method"])
        group_index = header["group"]
    except (KeyError, ValueError):
        raise _fail(meta_path, 0, "missing or invalid method/group header") from None
    if group_index not in CATALOG:
        raise _fail(meta_path, 0, f"unknown group index {group_index}")

    m = build_gadget(METHOD_GADGET[method]).vertex_count
    if len(vertices) != graph.dimension or graph.dimension % m:
        raise _fail(meta_path, 0, f"{len(vertices)} vertex records for DIMENSION {graph.dimension}")
    reps: List[int] = []
    for line_no, v, six_id, label in vertices:
        j, expect_label = divmod(v - 1, m)
        if label != expect_label + 1:
            raise _fail(meta_path, line_no, f"vertex {v} has label {label}, expected {expect_label + 1}")
        if expect_label == 0:
            reps.append(six_id)
        elif j >= len(reps) or reps[j] != six_id:
            raise _fail(meta_path, line_no, f"vertex {v} does not match its gadget's six")

    inst = Instance(method, group_index, tuple(reps), frozenset(graph.edges), {})
    gadget = inst.gadget
    wiring: Dict[Tuple[int, int], Wiring] = {}
    for line_no, (u_s, v_s, ref_text, token) in wiring_lines:
        try:
            u, v = int(u_s), int(v_s)
            call = Call(token)
        except ValueError:
            raise _fail(meta_path, line_no, f"bad wiring record {u_s} {v_s} {ref_text} {token}") from None
        if not (1 <= u <= inst.vertex_count and 1 <= v <= inst.vertex_count):
            raise _fail(meta_path, line_no, f"wiring vertex out of range: {u} {v}")
        mu, mv = inst.meta(u), inst.meta(v)
        if mu.label not in gadget.outgoing or mv.label not in gadget.incoming:
            raise _fail(meta_path, line_no, f"wiring {u} {v} is not outgoing -> incoming")
        source = ref_of_slot(method, mu.six_id, gadget.outgoing.index(mu.label) + 1)
        target = ref_of_slot(method, mv.six_id, gadget.incoming.index(mv.label) + 1)
        if extent.format_ref(source) != ref_text:
            raise _fail(meta_path, line_no, f"six-end {ref_text} does not match vertex {u}")
        if call.source_speed is not source.speed:
            raise _fail(meta_path, line_no, f"{call.label} cannot leave {ref_text}")
        w = Wiring(u, v, source, call, target)
        if w.edge not in inst.edges:
            raise _fail(meta_path, line_no, f"wiring edge {u} {v} missing from {hcp_path}")
        wiring[w.edge] = w
    inst.wiring = wiring
    inst.dropped_self_edges = int(header.get("dropped_self_edges", "0"))
    LOGGER.info("loaded %s: %d vertices, %d wiring edges", inst.name, inst.vertex_count, len(wiring))
    return inst
