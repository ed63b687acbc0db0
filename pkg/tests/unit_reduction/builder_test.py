"""Test reduction/builder.py."""

import dataclasses as dc
import random
from collections import Counter

import networkx as nx  # type: ignore[import]
import pytest

from peal_hcp.cli import manifest
from peal_hcp.cli.manifest import (
    MANIFEST,
    Hamiltonicity,
    ManifestEntry,
    manifest_entry,
    size_mismatches,
)
from peal_hcp.graph.solver import HcStatus, SearchGraph, SolveMode, solve
from peal_hcp.reduction.builder import (
    NhCheck,
    build_erin,
    build_instance,
    expected_size,
    odd_part_length,
    ref_of_slot,
    slot_of_ref,
    trivial_nh_check,
)
from peal_hcp.ringing.catalog import catalog_entry, get_group
from peal_hcp.ringing.groups import partition_into_parts
from peal_hcp.ringing.sixes import METHOD_SPEEDS, Method, SixEndRef, Speed


def _big(entry: ManifestEntry) -> bool:
    return entry.vertices > 10000


@pytest.mark.parametrize(
    "entry",
    [pytest.param(e, marks=pytest.mark.slow) if _big(e) else e for e in MANIFEST],
    ids=lambda e: e.label,
)
def test_010_sizes(entry: ManifestEntry) -> None:
    """Test every instance against the published size and the closed form."""
    inst = build_instance(entry.method, entry.group_index)
    order = catalog_entry(entry.group_index).order
    assert (inst.vertex_count, inst.edge_count) == (entry.vertices, entry.edges)
    assert (inst.vertex_count, inst.edge_count) == expected_size(entry.method, order)


def test_011_expected_size() -> None:
    """Test the closed form on its own."""
    assert expected_size(Method.ERIN, 168) == (80, 130)
    assert expected_size(Method.STEDMAN, 60) == (462, 756)
    assert expected_size(Method.STEDMAN, 1) == (27720, 45360)


def test_012_manifest_formula(mocker) -> None:  # type: ignore[no-untyped-def]
    """Test that every manifest row agrees with the closed form."""
    assert size_mismatches() == []
    bad = dc.replace(manifest_entry(Method.ERIN, "7.03"), vertices=81)
    mocker.patch.object(manifest, "MANIFEST", (*MANIFEST, bad))
    assert size_mismatches() == ["Erin168 (7.03): manifest 81/130, formula 80/130"]


def test_020_name() -> None:
    """Test instance naming."""
    assert build_instance(Method.STEDMAN, "6.05").name == "Sted60_6.05"
    assert build_instance(Method.ERIN, "7.03").name == "Erin168_7.03"


def test_021_vertex_meta() -> None:
    """Test that vertices split into consecutive gadget blocks."""
    inst = build_instance(Method.ERIN, "7.03")
    assert len(inst.representatives) == 5
    assert inst.meta(1).label == 1
    assert inst.meta(16).label == 16
    assert inst.meta(17).six_id == inst.representatives[1]
    assert inst.vertex(2, 1) == 17
    assert inst.gadget_index_of_six(inst.representatives[4]) == 5
    with pytest.raises(KeyError):
        inst.meta(81)


def test_030_erin_degrees() -> None:
    """Test that each boundary vertex carries two wiring edges."""
    inst = build_instance(Method.ERIN, "7.03")
    outs = Counter(w.out_vertex for w in inst.wiring.values())
    ins = Counter(w.in_vertex for w in inst.wiring.values())
    assert len(inst.wiring) == 6 * 5
    assert set(outs.values()) == {2}
    assert set(ins.values()) == {2}
    assert {inst.meta(v).label for v in outs} == set(inst.gadget.outgoing)
    assert {inst.meta(v).label for v in ins} == set(inst.gadget.incoming)
    g = inst.to_networkx()
    assert g.number_of_nodes() == 80
    assert max(d for _, d in g.degree()) <= 5


def test_031_stedman_alternation() -> None:
    """Test that slow calls land on quick slots and quick calls on slow ones."""
    inst = build_instance(Method.STEDMAN, "7.03")
    gadget = inst.gadget
    assert len(inst.wiring) == 12 * 5
    for w in inst.wiring.values():
        out_slot = gadget.outgoing.index(inst.meta(w.out_vertex).label) + 1
        in_slot = gadget.incoming.index(inst.meta(w.in_vertex).label) + 1
        assert w.source.speed is w.call.source_speed
        assert w.target.speed is w.call.target_speed
        if w.call.source_speed is Speed.SLOW:
            assert out_slot <= 3 < in_slot
        else:
            assert in_slot <= 3 < out_slot
        assert out_slot == slot_of_ref(w.source)
        assert in_slot == slot_of_ref(w.target)


def test_032_slots() -> None:
    """Test the six-end/slot correspondence."""
    assert slot_of_ref(SixEndRef(4, 2, Speed.QUICK)) == 5
    assert slot_of_ref(SixEndRef(4, 2, Speed.SLOW)) == 2
    assert ref_of_slot(Method.STEDMAN, 4, 5) == SixEndRef(4, 2, Speed.QUICK)
    assert ref_of_slot(Method.ERIN, 4, 3) == SixEndRef(4, 3)


@pytest.mark.parametrize("method", list(Method))
def test_033_wired_speeds(method: Method) -> None:
    """Test that wiring leaves from six-ends of every speed the method has."""
    inst = build_instance(method, "7.03")
    speeds = {w.source.speed for w in inst.wiring.values()}
    assert speeds == set(METHOD_SPEEDS[method])
    assert {w.target.speed for w in inst.wiring.values()} == speeds


def test_040_deterministic() -> None:
    """Test that two builds give identical edge lists."""
    a = build_instance(Method.STEDMAN, "6.05")
    b = build_instance(Method.STEDMAN, "6.05")
    assert a.sorted_edges() == b.sorted_edges()
    assert a.representatives == b.representatives
    assert a.sorted_wiring() == b.sorted_wiring()


def test_050_trivial_nh() -> None:
    """Test the odd-part-length check."""
    assert odd_part_length(Method.STEDMAN, 168)
    assert not odd_part_length(Method.STEDMAN, 60)
    assert not odd_part_length(Method.ERIN, 168)
    parts = partition_into_parts(get_group("7.03"))
    assert trivial_nh_check(Method.STEDMAN, parts) is NhCheck.TRIVIALLY_NON_HAMILTONIAN
    assert trivial_nh_check(Method.ERIN, parts) is NhCheck.POSSIBLY_HAMILTONIAN
    flagged = set()
    for entry in MANIFEST:
        if odd_part_length(entry.method, catalog_entry(entry.group_index).order):
            assert entry.hamiltonicity is Hamiltonicity.NH, entry.label
            flagged.add((entry.method, entry.group_index))
    assert flagged == {(Method.STEDMAN, g) for g in ("6.23", "6.09", "7.28", "7.03")}


def test_060_drop_self_edges() -> None:
    """Test leaving out wiring edges inside one gadget."""
    parts = partition_into_parts(get_group("7.03"))
    full = build_erin(parts)
    trimmed = build_erin(parts, drop_self_edges=True)
    internal = [
        w for w in full.wiring.values()
        if full.meta(w.out_vertex).six_id == full.meta(w.in_vertex).six_id
    ]
    assert trimmed.dropped_self_edges == len(internal)
    assert full.edge_count - trimmed.edge_count == len(internal)
    assert trimmed.vertex_count == full.vertex_count


def test_070_erin168_nh() -> None:
    """Test that the 80-vertex Erin instance has no Hamiltonian cycle."""
    inst = build_instance(Method.ERIN, "7.03")
    res = solve(inst.search_graph(), SolveMode.DECIDE)
    assert res.status is HcStatus.NON_HAMILTONIAN


@pytest.mark.slow
@pytest.mark.parametrize(
    "method, group_index",
    [
        (Method.STEDMAN, "7.03"),
        (Method.ERIN, "6.05"),
        (Method.ERIN, "6.09"),
        (Method.ERIN, "7.28"),
    ],
)
def test_071_desk_scale_nh(method: Method, group_index: str) -> None:
    """Test the other desk-scale non-Hamiltonian instances."""
    inst = build_instance(method, group_index)
    res = solve(inst.search_graph(), SolveMode.DECIDE)
    assert res.status is HcStatus.NON_HAMILTONIAN


@pytest.mark.parametrize("seed", [1, 2])
def test_080_erin168_relabelled(seed: int) -> None:
    """Test that shuffling the vertex labels keeps the 80-vertex instance non-Hamiltonian."""
    g = build_instance(Method.ERIN, "7.03").to_networkx()
    labels = list(g.nodes)
    shuffled = labels[:]
    random.Random(seed).shuffle(shuffled)
    h = nx.relabel_nodes(g, dict(zip(labels, shuffled)))
    sg = SearchGraph.from_networkx(h)
    assert (sg.n, sg.edge_count) == (80, 130)
    res = solve(sg, SolveMode.DECIDE)
    assert res.status is HcStatus.NON_HAMILTONIAN


