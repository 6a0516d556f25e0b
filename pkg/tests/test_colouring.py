import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxcount import colouring

GROUPS = [colouring.zn_group(2), colouring.zn_group(3), colouring.zn_group(5),
          colouring.klein_group(), colouring.z3diag_group()]


def test_parse_round_trip():
    for g in GROUPS:
        assert colouring.parse_group(str(g)) == g
    assert colouring.parse_group("zn:4").order == 4
    assert colouring.parse_group("klein").variables == ("q0", "qa", "qb", "qc")
    with pytest.raises(ValueError):
        colouring.parse_group("zn:0")
    with pytest.raises(ValueError):
        colouring.parse_group("dihedral")


def test_variable_counts():
    for g in GROUPS:
        assert len(g.variables) == g.order
        assert len(set(g.variables)) == g.order


coords = st.integers(-6, 6)


@given(st.sampled_from(GROUPS), coords, coords, coords, coords, coords, coords)
@settings(max_examples=200, deadline=None)
def test_colour_is_a_homomorphism(g, x1, y1, z1, x2, y2, z2):
    a = colouring.colour_index(g, x1, y1, z1)
    b = colouring.colour_index(g, x2, y2, z2)
    assert colouring.compose(g, a, b) == colouring.colour_index(g, x1 + x2, y1 + y2, z1 + z2)
    assert colouring.compose(g, a, colouring.inverse(g, a)) == 0
    assert colouring.colour_index(g, 0, 0, 0) == 0


def test_zn_colour_depends_on_diagonal():
    g = colouring.zn_group(3)
    assert colouring.colour_index(g, 4, 1, 2) == 0
    assert colouring.colour_index(g, 1, 0, 5) == 1
    # third coordinate never matters
    for z in range(4):
        assert colouring.colour_index(g, 2, 1, z) == 1


def test_klein_colour_table():
    g = colouring.klein_group()
    # identity / a / b / c by coordinate parities
    assert colouring.colour_index(g, 0, 0, 0) == 0
    assert colouring.colour_index(g, 1, 0, 0) == 1
    assert colouring.colour_index(g, 0, 1, 0) == 2
    assert colouring.colour_index(g, 0, 0, 1) == 3
    assert colouring.colour_index(g, 1, 1, 0) == 3
    assert colouring.colour_index(g, 1, 1, 1) == 0
    # every element is an involution
    for a in range(4):
        assert colouring.inverse(g, a) == a


def test_z3diag_colour():
    g = colouring.z3diag_group()
    assert colouring.colour_index(g, 1, 1, 1) == 0
    assert colouring.colour_index(g, 2, 0, 0) == 2


@given(st.sampled_from(GROUPS), coords, coords)
@settings(max_examples=100, deadline=None)
def test_laurent_restriction_matches_plane_colour(g, e1, e2):
    assert colouring.laurent_restriction(g, e1, e2) == colouring.colour_index(g, e1, e2, 0)
