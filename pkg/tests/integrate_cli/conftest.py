"""Integration test fixtures."""

from pathlib import Path

import pytest

from peal_hcp.graph.hcpfile import write_hcp


@pytest.fixture
def k4_hcp(tmp_path: Path) -> Path:
    """Write the complete graph on four vertices."""
    path = tmp_path / "k4.hcp"
    edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    write_hcp(path, "k4", 4, edges)
    return path


@pytest.fixture
def erin_touch(tmp_path: Path) -> Path:
    """A call file holding the Erin plain course."""
    path = tmp_path / "touch.calls"
    path.write_text("erin 0.01 1325476\n" + "p\n" * 7)
    return path
