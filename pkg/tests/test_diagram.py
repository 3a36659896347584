"""PD parsing, orientation, Seifert circles, positivity classes and signature."""

from hypothesis import assume, given, settings, strategies as st
import pytest

from lagfill.diagram import (
    DiagramError,
    Positivity,
    braid_closure,
    canonical_genus,
    classify,
    diagram_from_text,
    genus_estimate,
    is_alternating,
    mirror,
    parse_braid,
    parse_pd,
    seifert_decompose,
    signature,
)

RIGHT_TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


@st.composite
def positive_braid(draw, max_strands=4, max_extra=6):
    """A positive braid word using every generator, so its closure is connected."""
    n = draw(st.integers(2, max_strands))
    extra = draw(st.lists(st.integers(1, n - 1), max_size=max_extra))
    word = draw(st.permutations(list(range(1, n)) + extra))
    return f"braid {n}: " + " ".join(map(str, word))


def test_right_trefoil_has_writhe_three():
    d = diagram_from_text(RIGHT_TREFOIL)
    assert d.writhe == 3
    assert d.signs == (1, 1, 1)


@pytest.mark.parametrize(
    "text",
    [
        "X(1,2,3)",
        "X(1,4,2,5) X(3,6,4,1)",
        "X(1,1,2,2) junk",
        "",
        "X(0,1,1,0)",
        # two disjoint Hopf clasps
        "X(1,3,2,4) X(3,1,4,2) X(5,7,6,8) X(7,5,8,6)",
    ],
)
def test_malformed_pd_is_rejected(text):
    with pytest.raises(DiagramError):
        diagram_from_text(text)


def test_non_planar_rotation_is_rejected():
    with pytest.raises(DiagramError, match="planar"):
        parse_pd("X(1,3,2,4) X(2,4,1,3)")


def test_pd_text_round_trip(records):
    for rec in records.values():
        if rec.presentation.startswith("X("):
            assert str(parse_pd(rec.presentation)) == rec.presentation


def test_braid_parsing():
    b = parse_braid("braid 3: 1 -2 1")
    assert (b.n, b.letters) == (3, (1, -2, 1))
    with pytest.raises(DiagramError):
        parse_braid("braid 2: 2")
    with pytest.raises(DiagramError):
        parse_braid("braid 3 1 2")


def test_seifert_circle_counts():
    assert seifert_decompose(diagram_from_text(RIGHT_TREFOIL)).s == 2
    assert seifert_decompose(diagram_from_text("X(4,1,5,2) X(8,5,1,6) X(6,4,7,3) X(2,8,3,7)")).s == 3


def test_classification_of_bundled_diagrams(bundled):
    assert classify(bundled("3_1")).kind is Positivity.POSITIVE
    assert classify(bundled("4_1")).kind is Positivity.OTHER
    p2 = classify(bundled("10_145"))
    assert p2.kind is Positivity.P2
    assert p2.partners
    p1 = classify(bundled("10_145_p1"))
    assert p1.kind is Positivity.P1
    assert p1.partners == ()


def test_signature_examples():
    assert signature(diagram_from_text(RIGHT_TREFOIL)) == -2
    assert signature(diagram_from_text("X(4,1,5,2) X(8,5,1,6) X(6,4,7,3) X(2,8,3,7)")) == 0
    assert signature(diagram_from_text("unknot")) == 0


def test_signature_matches_the_table(records):
    checked = 0
    for rec in records.values():
        if "sigma" in rec.expected:
            assert signature(diagram_from_text(rec.presentation)) == rec.expected["sigma"], rec.name
            checked += 1
    assert checked >= 50


def test_genus_estimate_matches_the_table(records):
    for rec in records.values():
        d = diagram_from_text(rec.presentation)
        cls = classify(d)
        if cls.kind in (Positivity.POSITIVE, Positivity.P2) and "g3" in rec.expected:
            assert genus_estimate(d, cls) == 2 * rec.expected["g3"], rec.name


def test_alternation():
    assert is_alternating(diagram_from_text(RIGHT_TREFOIL))
    assert not is_alternating(diagram_from_text("braid 3: 1 2 1 2 1 2 1 2"))


@settings(max_examples=60, deadline=None)
@given(positive_braid())
def test_positive_braid_closures(word):
    d = diagram_from_text(word)
    assume(d.n_components == 1)
    b = parse_braid(word)
    assert classify(d).kind is Positivity.POSITIVE
    assert seifert_decompose(d).s == b.n
    assert canonical_genus(d) == ((len(b.letters) - b.n + 1) // 2, b.n - len(b.letters))
    assert braid_closure(b) == d.pd


@settings(max_examples=40, deadline=None)
@given(positive_braid(max_extra=5))
def test_mirror_negates_signature_and_writhe(word):
    d = diagram_from_text(word)
    assume(d.n_components == 1)
    m = mirror(d)
    assert m.writhe == -d.writhe
    assert signature(m) == -signature(d)
    assert seifert_decompose(m).s == seifert_decompose(d).s
