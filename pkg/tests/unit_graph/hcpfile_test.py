"""Test graph/hcpfile.py."""

from pathlib import Path

import pytest

from peal_hcp.graph.hcpfile import InstanceFormatError, format_hcp, read_hcp, write_hcp

TRIANGLE = """NAME: tri
TYPE: HCP
DIMENSION: 3
EDGE_DATA_FORMAT: EDGE_LIST
EDGE_DATA_SECTION
1 2
1 3
2 3
-1
EOF
"""


def test_010_format() -> None:
    """Test the exact layout, with edges normalised and sorted."""
    assert format_hcp("tri", 3, [(3, 2), (1, 3), (2, 1), (1, 2)]) == TRIANGLE


def test_020_write_read(tmp_path: Path) -> None:
    """Test reading back a written file."""
    path = tmp_path / "tri.hcp"
    write_hcp(path, "tri", 3, [(2, 3), (1, 2), (1, 3)])
    assert path.read_text() == TRIANGLE
    g = read_hcp(path)
    assert g.name == "tri"
    assert g.dimension == 3
    assert g.edge_set() == {(1, 2), (1, 3), (2, 3)}


@pytest.mark.parametrize(
    "text, line_no",
    [
        (TRIANGLE.replace("1 3\n", "1 x\n"), 7),
        (TRIANGLE.replace("1 3\n", "1 3 4\n"), 7),
        (TRIANGLE.replace("1 3\n", "1 2\n"), 7),
        (TRIANGLE.replace("1 3\n", "3 3\n"), 7),
        (TRIANGLE.replace("-1\nEOF", "-1\n4 5\nEOF"), 10),
        (TRIANGLE.replace("TYPE: HCP\n", "TYPE HCP\n"), 2),
    ],
)
def test_030_line_errors(tmp_path: Path, text: str, line_no: int) -> None:
    """Test that malformed lines are reported with their line number."""
    path = tmp_path / "bad.hcp"
    path.write_text(text)
    with pytest.raises(InstanceFormatError) as e:
        read_hcp(path)
    assert e.value.line_no == line_no
    assert str(e.value).startswith(f"{path}:{line_no}: ")


@pytest.mark.parametrize(
    "text",
    [
        TRIANGLE.replace("TYPE: HCP", "TYPE: TSP"),
        TRIANGLE.replace("DIMENSION: 3", "DIMENSION: two"),
        TRIANGLE.replace("DIMENSION: 3", "DIMENSION: 2"),
        TRIANGLE.replace("EDGE_LIST\n", "ADJ_LIST\n"),
        "NAME: x\nTYPE: HCP\nDIMENSION: 3\nEOF\n",
    ],
)
def test_031_header_errors(tmp_path: Path, text: str) -> None:
    """Test whole-file problems."""
    path = tmp_path / "bad.hcp"
    path.write_text(text)
    with pytest.raises(InstanceFormatError):
        read_hcp(path)


def test_040_missing_file(tmp_path: Path) -> None:
    """Test that a missing file is an OS error, not a format error."""
    with pytest.raises(FileNotFoundError):
        read_hcp(tmp_path / "nope.hcp")
