"""Test reduction/export.py."""

from pathlib import Path
from typing import Callable, List

import pytest

from peal_hcp.graph.hcpfile import InstanceFormatError, read_hcp
from peal_hcp.reduction.builder import Instance, build_instance
from peal_hcp.reduction.export import export_hcp, load_instance, sidecar_paths
from peal_hcp.ringing.sixes import Method
from peal_hcp.utils import json_util


@pytest.fixture(scope="module")
def erin168() -> Instance:
    return build_instance(Method.ERIN, "7.03")


def test_010_sidecar_paths() -> None:
    """Test sidecar naming."""
    meta, cert = sidecar_paths("out/Erin168.hcp")
    assert meta == Path("out/Erin168.hcp.meta")
    assert cert == Path("out/Erin168.hcp.cert.json")


def test_020_export(tmp_path: Path, erin168: Instance) -> None:
    """Test the three written files."""
    out = tmp_path / "e.hcp"
    paths = export_hcp(erin168, out)
    assert paths == [out, *sidecar_paths(out)]

    g = read_hcp(out)
    assert g.name == "Erin168_7.03"
    assert g.dimension == 80
    assert len(g.edges) == 130

    meta = paths[1].read_text().splitlines()
    assert meta[:4] == ["method erin", "group 7.03", "hcp e.hcp", "dropped_self_edges 0"]
    assert meta[4] == f"vertex 1 {erin168.representatives[0]} 1"
    assert sum(ln.startswith("vertex ") for ln in meta) == 80
    assert sum(ln.startswith("wiring ") for ln in meta) == 30

    cert = json_util.json_decode(paths[2].read_text())
    assert cert["kind"] == "s3"
    assert cert["verified"] is True
    assert cert["paths"]["1"] == list(range(1, 17))


def test_021_custom_name(tmp_path: Path, erin168: Instance) -> None:
    """Test overriding the NAME line."""
    export_hcp(erin168, tmp_path / "x.hcp", name="mine")
    assert read_hcp(tmp_path / "x.hcp").name == "mine"


@pytest.mark.parametrize("method", list(Method))
def test_030_load_round_trip(tmp_path: Path, method: Method) -> None:
    """Test that loading an export gives back the same instance."""
    inst = build_instance(method, "7.03")
    out = tmp_path / "i.hcp"
    export_hcp(inst, out)
    back = load_instance(out)
    assert back.method is inst.method
    assert back.group_index == inst.group_index
    assert back.representatives == inst.representatives
    assert back.edges == inst.edges
    assert back.sorted_wiring() == inst.sorted_wiring()
    assert back.name == inst.name


@pytest.mark.parametrize("method", list(Method))
def test_031_byte_identical(tmp_path: Path, method: Method) -> None:
    """Test that two builds export to the same bytes."""
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    first = export_hcp(build_instance(method, "7.03"), tmp_path / "a" / "i.hcp")
    second = export_hcp(build_instance(method, "7.03"), tmp_path / "b" / "i.hcp")
    for a, b in zip(first, second):
        assert a.read_bytes() == b.read_bytes()


def _replace_first(prefix: str, edit: Callable[[str], str]) -> Callable[[List[str]], int]:
    def apply(lines: List[str]) -> int:
        i = next(i for i, ln in enumerate(lines) if ln.startswith(prefix))
        lines[i] = edit(lines[i])
        return i + 1

    return apply


@pytest.mark.parametrize(
    "edit, has_line",
    [
        (_replace_first("vertex 2 ", lambda ln: ln[: ln.rfind(" ")] + " 3"), True),
        (_replace_first("vertex 2 ", lambda ln: "vertex 2 x 2"), True),
        (_replace_first("wiring ", lambda ln: ln[: ln.rfind(" ")] + " zz"), True),
        (_replace_first("wiring ", lambda ln: ln[: ln.rfind(" ")]), True),
        (_replace_first("wiring ", lambda ln: ln.replace(" p", " sp").replace(" b", " sb")), True),
        (_replace_first("method ", lambda ln: "method bells"), False),
        (_replace_first("group ", lambda ln: "group 9.99"), False),
        (_replace_first("hcp ", lambda ln: "hcp e.hcp extra"), True),
    ],
)
def test_040_bad_meta(
    tmp_path: Path,
    erin168: Instance,
    edit: Callable[[List[str]], int],
    has_line: bool,
) -> None:
    """Test that broken sidecars are reported, with line numbers where they apply."""
    out = tmp_path / "e.hcp"
    meta_path = export_hcp(erin168, out)[1]
    lines = meta_path.read_text().splitlines()
    line_no = edit(lines)
    meta_path.write_text("\n".join(lines) + "\n")
    with pytest.raises(InstanceFormatError) as e:
        load_instance(out)
    assert e.value.line_no == (line_no if has_line else 0)


def test_041_meta_vertex_count(tmp_path: Path, erin168: Instance) -> None:
    """Test a sidecar that lost a vertex record."""
    out = tmp_path / "e.hcp"
    meta_path = export_hcp(erin168, out)[1]
    lines = [ln for ln in meta_path.read_text().splitlines() if not ln.startswith("vertex 80 ")]
    meta_path.write_text("\n".join(lines) + "\n")
    with pytest.raises(InstanceFormatError):
        load_instance(out)


def test_042_missing_meta(tmp_path: Path, erin168: Instance) -> None:
    """Test loading without a sidecar."""
    out = tmp_path / "e.hcp"
    export_hcp(erin168, out)
    sidecar_paths(out)[0].unlink()
    with pytest.raises(FileNotFoundError):
        load_instance(out)
