"""Test ringing/groups.py and ringing/catalog.py."""

import pytest

from peal_hcp.ringing.catalog import CATALOG, GROUP_INDICES, catalog_entry, get_group
from peal_hcp.ringing.groups import (
    InvalidPartGroupError,
    close_generators,
    compose,
    cycle_type,
    partition_into_parts,
    relabel,
    validate_part_group,
)
from peal_hcp.ringing.rows import Row
from peal_hcp.ringing.sixes import (
    Call,
    Speed,
    erin_transitions,
    partition_extent,
    stedman_transitions,
)


def R(text: str) -> Row:
    return Row.from_str(text)


def test_010_relabel() -> None:
    """Test relabelling down the first column of the five-part table."""
    g = R("2345167")
    assert relabel(R("1234567"), g) == R("2345167")
    assert relabel(R("2135476"), g) == R("3241576")
    assert relabel(R("1325476"), g) == R("2431576")
    assert relabel(R("5324716"), g) == R("1435726")


def test_011_compose() -> None:
    """Test that `compose(g, h)` relabels by `h` first."""
    g, h = R("2345167"), R("2143567")
    r = R("1325476")
    assert relabel(r, compose(g, h)) == relabel(relabel(r, h), g)
    assert compose(g, g.inverse()) == Row.rounds()


def test_020_cycle_type() -> None:
    """Test cycle types."""
    assert cycle_type(Row.rounds()) == ()
    assert cycle_type(R("2345167")) == (5,)
    assert cycle_type(R("2316457")) == (3, 3)
    assert cycle_type(R("2143657")) == (2, 2, 2)
    assert cycle_type(R("2314567")) == (3,)


def test_030_close_generators() -> None:
    """Test closing the five-part generator."""
    g = close_generators([R("2345167")], "5.05")
    assert g.order == 5
    assert [str(e) for e in g.elements] == [
        "1234567", "2345167", "3451267", "4512367", "5123467",
    ]
    assert g.identity == Row.rounds()
    assert R("3451267") in g
    with pytest.raises(ValueError):
        close_generators([])


def test_040_validity() -> None:
    """Test the part-group checks."""
    assert validate_part_group(close_generators([R("2345167")])).valid

    v = validate_part_group(close_generators([R("2314567")]))
    assert not v.valid
    assert v.three_cycles
    assert "3-bell cycles" in v.describe()

    v = validate_part_group(close_generators([R("2143657")]))
    assert not v.valid
    assert v.three_swaps
    assert v.odd_elements

    v = validate_part_group(close_generators([R("2134567")]))
    assert not v.valid
    assert not v.three_cycles and not v.three_swaps
    assert v.odd_elements


def test_041_invalid_group_rejected() -> None:
    """Test that `partition_into_parts()` refuses an invalid group."""
    with pytest.raises(InvalidPartGroupError):
        partition_into_parts(close_generators([R("2314567")]))


@pytest.mark.parametrize("index", GROUP_INDICES)
def test_050_catalog(index: str) -> None:
    """Test that every catalog group closes to its order and is valid."""
    entry = catalog_entry(index)
    group = get_group(index)
    assert group.order == entry.order
    assert 840 % entry.order == 0
    assert validate_part_group(group).valid


def test_051_catalog_shape() -> None:
    """Test the catalog contents."""
    assert len(CATALOG) == 19
    assert sum(e.odd_blocks for e in CATALOG.values()) == 10
    assert catalog_entry("7.03").sixes_per_part == 5
    with pytest.raises(ValueError):
        catalog_entry("9.99")


def test_060_five_part_orbits() -> None:
    """Test that 5.05 splits the sixes into 168 orbits of five."""
    parts = partition_into_parts(get_group("5.05"))
    assert len(parts) == 168
    assert parts.representatives[0] == 1
    assert list(parts.representatives) == sorted(parts.representatives)
    assert parts.gadget_index(1) == 1
    extent = partition_extent()
    orbit = parts.orbit(1)
    assert len(orbit) == 5
    assert {str(extent.six(s).members[0]) for s in orbit} >= {"1234567"}
    # the other members of the orbit hold the other columns' first rows
    tops = {extent.six_of(R(t)).id for t in ("2345167", "3451267", "4512367", "5123467")}
    assert tops == set(orbit) - {1}


def test_061_equivariance() -> None:
    """Test that relabelling commutes with the call maps."""
    extent = partition_extent()
    maps = stedman_transitions()
    g = R("2345167")
    for text in ("1325476", "2135476", "5237461"):
        ref = extent.parse_ref(text + "S")
        moved = extent.ref_of(relabel(extent.row_of(ref), g), Speed.SLOW)
        for call in (Call.SLOW_PLAIN, Call.SLOW_BOB):
            a = extent.row_of(maps.apply(call, moved))
            b = relabel(extent.row_of(maps.apply(call, ref)), g)
            assert a == b


def test_062_equivariance_exhaustive() -> None:
    """Test every six-end, element of 5.05 and call map."""
    extent = partition_extent()
    group = get_group("5.05")
    cases = [(erin_transitions(), Speed.NONE)]
    cases += [(stedman_transitions(), s) for s in (Speed.SLOW, Speed.QUICK)]
    checked = 0
    for maps, speed in cases:
        calls = [c for c in maps.calls if c.source_speed is speed]
        for six in extent:
            for row in six.six_ends:
                ref = extent.ref_of(row, speed)
                for g in group.elements:
                    moved = extent.ref_of(relabel(row, g), speed)
                    for call in calls:
                        a = extent.row_of(maps.apply(call, moved))
                        b = relabel(extent.row_of(maps.apply(call, ref)), g)
                        assert a == b
                        checked += 1
    assert checked == 2520 * 5 * 6


def test_070_preferred_representative() -> None:
    """Test the worked five-part mapping of a plain from 1325476."""
    extent = partition_extent()
    maps = stedman_transitions()
    parts = partition_into_parts(get_group("5.05"), prefer=[R("5324716")])

    image = maps.apply(Call.SLOW_PLAIN, extent.parse_ref("1325476S"))
    assert extent.format_ref(image) == "1357264Q"
    assert extent.format_ref(parts.rep_of_six_end(image)) == "3527461Q"

    image = maps.apply(Call.QUICK_PLAIN, extent.parse_ref("1325476Q"))
    assert extent.format_ref(image) == "3517264S"
    assert extent.format_ref(parts.rep_of_six_end(image)) == "5237461S"


def test_071_default_representative() -> None:
    """Test that without a preference the six with the smallest row wins."""
    extent = partition_extent()
    parts = partition_into_parts(get_group("5.05"))
    six = extent.six_of(R("5324716"))
    rep = extent.six(parts.rep_of_six[six.id][0])
    smallest = min(extent.six(s).members[0] for s in parts.orbit(six.id))
    assert rep.members[0] == smallest
    assert str(smallest) == "1247365"
