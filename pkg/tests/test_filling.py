"""Filling certificates: the move catalogue, strand removal, generation and
verification."""

import json

from hypothesis import assume, given, settings, strategies as st
import pytest

from lagfill.diagram import canonical_genus, diagram_from_text
from lagfill.filling import (
    CATALOGUE,
    CertificateError,
    CobordismCertificate,
    FillingError,
    Move,
    MoveError,
    apply_move,
    commute,
    generate_filling,
    strand_removal_moves,
    verify_certificate,
)
from lagfill.legendrian import FrontDiagram, eye, front_from_mondrian, parse_front, tb
from lagfill.mondrian import to_mondrian


@st.composite
def positive_braid(draw, max_strands=4, max_extra=6):
    n = draw(st.integers(2, max_strands))
    extra = draw(st.lists(st.integers(1, n - 1), max_size=max_extra))
    word = draw(st.permutations(list(range(1, n)) + extra))
    return f"braid {n}: " + " ".join(map(str, word))


def events(text):
    return list(parse_front(text).events)


def test_eye_is_one_birth():
    cert = generate_filling(eye())
    assert [m.type for m in cert.moves] == ["birth"]
    rep = verify_certificate(cert)
    assert (rep.euler, rep.genus, rep.tb_final, rep.chantraine) == (1, 0, -1, True)


def test_trefoil_certificate():
    f = parse_front("L0+, L1+, X0, X0, X0, R1, R0")
    rep = verify_certificate(generate_filling(f))
    assert (rep.euler, rep.genus, rep.tb_final, rep.chantraine) == (-1, 1, 1, True)
    assert rep.exact


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_strand_removal_counts(k):
    f = parse_front("L0+, L1+, " + "X0, " * k + "R1, R0")
    moves, smaller, counts = strand_removal_moves(f, 1)
    kinds = [m.type for m in moves]
    assert kinds.count("pinch") == counts["pinches"] == 2 * k
    assert kinds.count("birth") == counts["births"] == k + 1
    assert set(kinds) <= {"birth", "pinch", "isotopy"}
    assert [str(e) for e in smaller.events] == ["L0+", "R0"]
    # the moves rebuild the front from the smaller one
    ev = list(smaller.events)
    for mv in moves:
        ev = apply_move(ev, mv)
    assert tuple(ev) == f.events


def test_strand_removal_of_a_lone_eye():
    moves, smaller, _ = strand_removal_moves(eye(), 0)
    assert moves == [Move("birth", 0, 0, orientation=1)]
    assert smaller.events == ()


def test_strand_removal_hypotheses():
    with pytest.raises(FillingError, match="event 2"):
        strand_removal_moves(parse_front("L0+, L1-, X0, X0, R1, R0"), 1)
    with pytest.raises(FillingError, match="not innermost"):
        strand_removal_moves(parse_front("L0+, L1+, X0, R1, R0"), 0)
    with pytest.raises(FillingError, match="not a left cusp"):
        strand_removal_moves(parse_front("L0+, L1+, X0, R1, R0"), 2)


def test_mode_errors(bundled):
    p2 = front_from_mondrian(to_mondrian(bundled("10_145")))
    with pytest.raises(FillingError):
        generate_filling(p2, "positive")
    with pytest.raises(FillingError):
        generate_filling(parse_front("L0+, L1+, X0, R1, R0"), "p2")
    with pytest.raises(FillingError):
        generate_filling(eye(), "sideways")


def test_links_report_chi_only():
    hopf = parse_front("L0+, L1+, X0, X0, R1, R0")
    cert = generate_filling(hopf)
    assert cert.metadata["genus"] is None
    rep = verify_certificate(cert)
    assert (rep.euler, rep.genus, rep.knot, rep.chantraine) == (0, None, False, False)
    with pytest.raises(CertificateError, match="not a knot"):
        verify_certificate(cert, require_knot=True)


def test_pinch_of_non_adjacent_strands_fails_at_that_step():
    moves = (Move("birth", 0, 0, orientation=1), Move("birth", 2, 0, orientation=1), Move("pinch", 1, 1))
    cert = CobordismCertificate(moves, FrontDiagram(()))
    with pytest.raises(CertificateError) as err:
        verify_certificate(cert)
    assert err.value.step == 2


def test_pinch_of_opposite_strands_is_illegal():
    # R0 L0 with the new upper branch running against the strand it meets
    with pytest.raises(MoveError, match="opposite"):
        apply_move(events("L0+, R0, L0-, R0"), Move("pinch", 1, 0))


def test_catalogue_moves_are_reversible():
    f = events("L0+, L1+, X0, X0, X0, R1, R0")
    applied = 0
    for name in ("R1a", "R1b"):
        for t in range(len(f) + 1):
            for k in range(4):
                try:
                    g = apply_move(f, Move("isotopy", t, k, f"{name}+"))
                except MoveError:
                    continue
                assert tb(FrontDiagram(g)) == tb(FrontDiagram(f))
                assert apply_move(g, Move("isotopy", t, k, f"{name}-")) == f
                applied += 1
    assert applied >= 4
    assert {"R3", "commute"} <= set(CATALOGUE)


def test_commute_of_distant_events():
    ev = events("L0+, L0+, R0, R0")
    # two left cusps in different gaps can pass each other
    assert commute(ev, 0) != ev
    with pytest.raises(MoveError):
        commute(events("L0+, X0, X0, R0"), 1)


def test_json_round_trip_is_exact():
    cert = generate_filling(parse_front("L0+, L1+, X0, X0, X0, R1, R0"))
    text = cert.dumps()
    again = CobordismCertificate.loads(text)
    assert again == cert
    assert again.dumps() == text
    data = json.loads(text)
    assert set(data) == {"moves", "final_front", "metadata"}
    assert data["metadata"] == {"chi": -1, "genus": 1, "tb": 1, "exact": True}
    with pytest.raises(ValueError):
        Move.from_json({"type": "birth", "index": 0, "colour": "red"})


def test_p2_certificate(bundled):
    f = front_from_mondrian(to_mondrian(bundled("10_145")))
    rep = verify_certificate(generate_filling(f))
    assert (rep.genus, rep.tb_final, rep.chantraine) == (2, 3, True)
    assert rep.genus == canonical_genus(bundled("10_145"))[0] - 1


@settings(max_examples=40, deadline=None)
@given(positive_braid())
def test_positive_braid_fillings(word):
    d = diagram_from_text(word)
    assume(d.n_components == 1)
    f = front_from_mondrian(to_mondrian(d))
    cert = generate_filling(f)
    rep = verify_certificate(CobordismCertificate.loads(cert.dumps()), require_knot=True)
    assert rep.genus == canonical_genus(d)[0]
    assert rep.euler == rep.births - rep.pinches
    assert rep.chantraine


@settings(max_examples=40, deadline=None)
@given(positive_braid(max_extra=4), st.data())
def test_corrupted_certificates_fail_no_earlier_than_the_corruption(word, data):
    d = diagram_from_text(word)
    assume(d.n_components == 1)
    cert = generate_filling(front_from_mondrian(to_mondrian(d)))
    i = data.draw(st.integers(0, len(cert.moves) - 1))
    mv = cert.moves[i]
    bad = Move(mv.type, mv.index + data.draw(st.sampled_from([-3, -1, 1, 2, 5])), mv.position, mv.move_id,
               mv.orientation)
    moves = cert.moves[:i] + (bad,) + cert.moves[i + 1:]
    try:
        rep = verify_certificate(CobordismCertificate(moves, cert.final_front, cert.metadata))
    except CertificateError as err:
        assert err.step >= i
    else:
        # an accepted corruption must still be a sound certificate of the same front
        assert rep.euler == cert.metadata["chi"]


def test_reordering_commuting_moves_keeps_chi():
    # births of two separate eyes commute; either order gives the same front
    f = FrontDiagram(events("L0+, R0, L0+, R0"))
    a = (Move("birth", 0, 0, orientation=1), Move("birth", 2, 0, orientation=1))
    b = (Move("birth", 0, 0, orientation=1), Move("birth", 0, 0, orientation=1))
    ra = verify_certificate(CobordismCertificate(a, f))
    rb = verify_certificate(CobordismCertificate(b, f))
    assert ra.euler == rb.euler == 2
