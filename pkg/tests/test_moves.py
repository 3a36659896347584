"""Reidemeister moves used by the invariance tests."""

import random

from hypothesis import given, settings, strategies as st
import pytest

from lagfill.diagram import diagram_from_text, seifert_decompose
from lagfill.homflypt import homfly
from lagfill.moves import r1_insert, r1_remove, r2_insert, r2_remove, r3, random_move, triangles

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


@pytest.mark.parametrize("variant", range(4))
def test_kinks_change_writhe_by_one(variant):
    d = diagram_from_text(TREFOIL)
    k = r1_insert(d, 1, variant)
    assert k.c == 4
    assert abs(k.writhe - d.writhe) == 1
    assert homfly(k) == homfly(d)
    back = r1_remove(k)
    assert back is not None and back.c == 3 and homfly(back) == homfly(d)


def test_nothing_to_remove_on_a_reduced_diagram():
    d = diagram_from_text(TREFOIL)
    assert r1_remove(d) is None
    assert r2_remove(d) is None


def test_r2_pairs():
    d = diagram_from_text(TREFOIL)
    labels = sorted({lab for x in d.crossings for lab in x[:4]})
    made = 0
    for top in labels:
        for bottom in labels:
            if top == bottom:
                continue
            e = r2_insert(d, top, bottom)
            if e is None:
                continue
            made += 1
            assert e.c == 5 and e.writhe == d.writhe
            assert homfly(e) == homfly(d)
            assert r2_remove(e) is not None
    assert made > 0


def test_r3_keeps_crossing_data():
    d = diagram_from_text("braid 3: 1 2 1")
    tris = triangles(d.crossings)
    assert tris
    e = r3(d, tris[0])
    assert sorted(e.signs) == sorted(d.signs)
    assert seifert_decompose(e).s == seifert_decompose(d).s
    assert homfly(e) == homfly(d)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_random_moves_respect_the_cap(seed):
    rng = random.Random(seed)
    d = diagram_from_text(TREFOIL)
    for _ in range(10):
        _, d = random_move(d, rng, max_crossings=8)
        assert d.c <= 9
