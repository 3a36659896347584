"""Fronts: parsing, tb and rot, Maslov potentials and normal rulings."""

from hypothesis import assume, given, settings, strategies as st
import pytest

from lagfill.diagram import diagram_from_text, parse_braid
from lagfill.homflypt import homfly, max_deg_v
from lagfill.legendrian import (
    FrontDiagram,
    FrontError,
    check_ruling,
    count_rulings,
    eye,
    find_ruling,
    front_from_mondrian,
    front_to_diagram,
    maslov_mod2,
    n_components,
    parse_front,
    rot,
    tb,
)
from lagfill.mondrian import to_mondrian

TREFOIL_FRONT = "L0+, L1+, X0, X0, X0, R1, R0"
HOPF_FRONT = "L0+, L1+, X0, X0, R1, R0"


@st.composite
def positive_braid(draw, max_strands=4, max_extra=6):
    n = draw(st.integers(2, max_strands))
    extra = draw(st.lists(st.integers(1, n - 1), max_size=max_extra))
    word = draw(st.permutations(list(range(1, n)) + extra))
    return f"braid {n}: " + " ".join(map(str, word))


def test_eye():
    f = eye()
    assert (tb(f), rot(f)) == (-1, 0)
    assert set(maslov_mod2(f)[1]) == {0, 1}
    r = find_ruling(f)
    assert r is not None and r.switches == frozenset()


def test_trefoil_front():
    f = parse_front(TREFOIL_FRONT)
    assert (tb(f), rot(f)) == (1, 0)
    assert n_components(f) == 1
    assert find_ruling(f) is not None
    assert homfly(front_to_diagram(f)) == homfly(diagram_from_text("braid 2: 1 1 1"))


def test_two_component_front_has_no_single_potential():
    f = parse_front(HOPF_FRONT)
    assert n_components(f) == 2
    with pytest.raises(FrontError):
        maslov_mod2(f)


def test_stabilized_unknot():
    # a zigzag lowers tb by one and shifts rot by one
    f = parse_front("L0+, L0+, R1, R0")
    assert n_components(f) == 1
    assert tb(f) == -2
    assert abs(rot(f)) == 1


@pytest.mark.parametrize(
    "text",
    ["L0, R1", "L0, L0", "Q0, R0", "R0", "X0+, R0", "L0+, L0-, R1, R0", "L0, X1, R0"],
)
def test_bad_fronts(text):
    with pytest.raises(FrontError):
        parse_front(text)


def test_json_round_trip():
    f = parse_front(TREFOIL_FRONT)
    assert FrontDiagram.from_json(f.to_json()) == f
    assert parse_front(str(f)) == f


def test_rulings_of_the_trefoil_front():
    # ruling polynomial z^2 + 2: one ruling switching all three crossings,
    # two switching a single outer one
    f = parse_front(TREFOIL_FRONT)
    assert count_rulings(f) == 3
    valid = [s for s in ([], [2], [3], [4], [2, 3], [2, 4], [3, 4], [2, 3, 4]) if check_ruling(f, s)]
    assert valid == [[2], [4], [2, 3, 4]]
    assert find_ruling(f).switches == frozenset({4})


@settings(max_examples=40, deadline=None)
@given(positive_braid())
def test_positive_braid_fronts(word):
    d = diagram_from_text(word)
    assume(d.n_components == 1)
    b = parse_braid(word)
    f = front_from_mondrian(to_mondrian(d))
    assert tb(f) == len(b.letters) - b.n
    assert rot(f) == 0
    P = homfly(d)
    assert homfly(front_to_diagram(f)) == P
    assert tb(f) + 1 == -max_deg_v(P)
    r = find_ruling(f)
    assert r is not None
    for pairing in r.pairings:
        assert all(pairing[pairing[p]] == p != pairing[p] for p in range(len(pairing)))


def test_ruling_search_cap():
    f = parse_front(TREFOIL_FRONT)
    with pytest.raises(FrontError, match="cap"):
        find_ruling(f, cap=2)
    with pytest.raises(FrontError, match="cap"):
        count_rulings(f, cap=2)
