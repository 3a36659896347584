"""HOMFLYPT by skein recursion, checked against hand values, the naive
resolver and the bundled table."""

import random

from hypothesis import given, settings, strategies as st
import pytest

from lagfill.diagram import diagram_from_text, mirror, signature
from lagfill.homflypt import (
    BudgetExceeded,
    SkeinEvaluator,
    homfly,
    max_deg_v,
    mfw_tb_bound,
    naive_homfly,
    smooth,
    switched,
)
from lagfill.laurent import LaurentPoly2, V, V_INV, Z
from lagfill.moves import random_move

TREFOIL = LaurentPoly2.parse("1*v^-2*z^2 + 2*v^-2*z^0 - 1*v^-4*z^0")


def braid_words(max_strands=4, max_len=7):
    """Braid words using every generator, with either sign."""

    @st.composite
    def build(draw):
        n = draw(st.integers(2, max_strands))
        extra = draw(st.lists(st.integers(1, n - 1), max_size=max_len - n + 1))
        letters = draw(st.permutations(list(range(1, n)) + extra))
        signs = draw(st.lists(st.sampled_from([1, -1]), min_size=len(letters), max_size=len(letters)))
        return f"braid {n}: " + " ".join(str(s * g) for s, g in zip(signs, letters))

    return build()


def test_trefoil_and_unknot():
    assert homfly(diagram_from_text("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")) == TREFOIL
    assert homfly(diagram_from_text("unknot")) == 1
    assert homfly(diagram_from_text("braid 2: 1")) == 1


def test_positive_hopf_link():
    expected = V_INV * Z + (V_INV - V_INV ** 3) * Z ** -1
    assert homfly(diagram_from_text("braid 2: 1 1")) == expected


def test_degrees_and_bounds(bundled):
    unknot = homfly(diagram_from_text("unknot"))
    assert (max_deg_v(unknot), mfw_tb_bound(unknot)) == (0, -1)
    assert (max_deg_v(TREFOIL), mfw_tb_bound(TREFOIL)) == (-2, 1)
    assert max_deg_v(TREFOIL.substitute_mirror()) == 4
    assert mfw_tb_bound(homfly(bundled("8_19"))) == 5


def test_budget_is_enforced(bundled):
    with pytest.raises(BudgetExceeded):
        homfly(bundled("10_145"), budget=9)


def test_connected_sums():
    square = homfly(diagram_from_text("braid 3: 1 1 1 -2 -2 -2"))
    granny = homfly(diagram_from_text("braid 3: 1 1 1 2 2 2"))
    assert granny == TREFOIL * TREFOIL
    assert square == TREFOIL * TREFOIL.substitute_mirror()


def test_table_top_degrees(records):
    checked = 0
    for rec in records.values():
        P = homfly(diagram_from_text(rec.presentation))
        assert max_deg_v(P) == rec.expected["maxdegv"], rec.name
        checked += 1
    assert checked == len(records)


@settings(max_examples=60, deadline=None)
@given(braid_words(), st.data())
def test_skein_relation(word, data):
    d = diagram_from_text(word)
    xs = list(d.crossings)
    i = data.draw(st.integers(0, len(xs) - 1))
    ev = SkeinEvaluator()
    here = ev.evaluate(xs)
    other = ev.evaluate(switched(xs, i))
    sm, loops = smooth(xs, i)
    zero = ev.evaluate(sm, loops)
    plus, minus = (here, other) if xs[i][4] > 0 else (other, here)
    assert V * plus - V_INV * minus == Z * zero


@settings(max_examples=60, deadline=None)
@given(braid_words(max_len=7))
def test_memoized_equals_naive(word):
    d = diagram_from_text(word)
    assert homfly(d) == naive_homfly(d.crossings)


@settings(max_examples=60, deadline=None)
@given(braid_words())
def test_mirror_symmetry(word):
    d = diagram_from_text(word)
    assert homfly(mirror(d)) == homfly(d).substitute_mirror()


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["3_1", "4_1", "5_2", "6_1", "6_3", "7_4"]), st.integers(0, 10 ** 6))
def test_reidemeister_walks(bundled, name, seed):
    d = bundled(name)
    P, sigma = homfly(d), signature(d)
    rng = random.Random(seed)
    for _ in range(8):
        _, d = random_move(d, rng, max_crossings=12)
    assert homfly(d) == P
    assert signature(d) == sigma
