"""Test ringing/sixes.py."""

import pytest

from peal_hcp.ringing.rows import Parity, Row
from peal_hcp.ringing.sixes import (
    METHOD_CALLS,
    Call,
    Method,
    SixEndRef,
    Speed,
    erin_transitions,
    generate_six,
    partition_extent,
    stedman_transitions,
    transitions,
)


def test_010_partition() -> None:
    """Test that the extent splits into 840 sixes of six rows."""
    extent = partition_extent()
    assert len(extent) == 840
    rows = [r for six in extent for r in six.members]
    assert len(rows) == len(set(rows)) == 5040
    assert [six.id for six in extent] == list(range(1, 841))
    # numbered by smallest member
    firsts = [six.members[0] for six in extent]
    assert firsts == sorted(firsts)
    assert all(six.members[0] == min(six.members) for six in extent)


def test_011_six_ends() -> None:
    """Test that each six has exactly three six-ends, all odd."""
    for six in partition_extent():
        assert len(six.six_ends) == 3
        assert all(e.parity is Parity.ODD for e in six.six_ends)
        assert list(six.six_ends) == sorted(six.six_ends)


def test_020_rounds_six() -> None:
    """Test the six containing rounds."""
    extent = partition_extent()
    six = extent.six_of(Row.rounds())
    assert six.id == 1
    assert six.format() == (
        "1: 1234567 2135476 2314567 3215476 3124567 1325476"
        " | ends: 1325476 2135476 3215476"
    )
    assert generate_six(Row.from_str("3124567")).members == six.members


def test_030_refs() -> None:
    """Test six-end lookup and its textual form."""
    extent = partition_extent()
    ref = extent.ref_of(Row.from_str("2135476"))
    assert ref == SixEndRef(1, 2)
    assert extent.row_of(ref) == Row.from_str("2135476")
    assert extent.parse_ref("1325476S") == SixEndRef(1, 1, Speed.SLOW)
    assert extent.format_ref(SixEndRef(1, 3, Speed.QUICK)) == "3215476Q"
    assert extent.format_ref(SixEndRef(1, 3)) == "3215476"
    # speed takes part in equality
    assert SixEndRef(1, 1, Speed.SLOW) != SixEndRef(1, 1, Speed.QUICK)


def test_031_ref_errors() -> None:
    """Test that even rows and bad indices are not six-ends."""
    extent = partition_extent()
    with pytest.raises(ValueError):
        extent.ref_of(Row.rounds())
    with pytest.raises(ValueError):
        extent.parse_ref("2314567Q")
    with pytest.raises(ValueError):
        SixEndRef(1, 4)
    with pytest.raises(KeyError):
        extent.six(841)


def test_040_calls() -> None:
    """Test call metadata."""
    assert METHOD_CALLS[Method.ERIN] == (Call.PLAIN, Call.BOB)
    assert Call.SLOW_BOB.is_bob
    assert not Call.QUICK_PLAIN.is_bob
    assert Call.SLOW_BOB.source_speed is Speed.SLOW
    assert Call.SLOW_BOB.target_speed is Speed.QUICK
    assert Call.QUICK_PLAIN.target_speed is Speed.SLOW
    assert Call.BOB.target_speed is Speed.NONE
    assert Call.SLOW_PLAIN.label == "slow-plain"
    assert str(Call.BOB.notation) == "5.3.1.3.1.3"
    assert Call("qb") is Call.QUICK_BOB


def test_050_erin_transitions() -> None:
    """Test P and B from the first six-end of rounds' six."""
    extent = partition_extent()
    maps = erin_transitions()
    ref = extent.ref_of(Row.from_str("1325476"))
    assert extent.format_ref(maps.apply(Call.PLAIN, ref)) == "3517264"
    assert extent.format_ref(maps.apply(Call.BOB, ref)) == "3514276"
    assert len(maps.maps[Call.PLAIN]) == 2520
    assert maps.is_bijective(Call.PLAIN)
    assert maps.is_bijective(Call.BOB)


def test_051_stedman_transitions() -> None:
    """Test that slow calls reach quick six-ends and vice versa."""
    extent = partition_extent()
    maps = stedman_transitions()
    slow = extent.parse_ref("1325476S")
    quick = extent.parse_ref("1325476Q")
    assert extent.format_ref(maps.apply(Call.SLOW_PLAIN, slow)) == "1357264Q"
    assert extent.format_ref(maps.apply(Call.QUICK_PLAIN, quick)) == "3517264S"
    for call in METHOD_CALLS[Method.STEDMAN]:
        assert maps.is_bijective(call)
        assert all(t.speed is call.target_speed for t in maps.maps[call].values())
    with pytest.raises(ValueError):
        maps.apply(Call.SLOW_PLAIN, quick)
    assert transitions(Method.STEDMAN) is maps
