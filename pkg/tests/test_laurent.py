"""Exact arithmetic on sparse (v, z) Laurent polynomials."""

from hypothesis import given, strategies as st
import pytest

from lagfill.laurent import LaurentPoly2, V, V_INV, Z

exps = st.integers(-6, 6)
polys = st.dictionaries(st.tuples(exps, exps), st.integers(-5, 5), max_size=6).map(LaurentPoly2)


def test_zero_coefficients_are_dropped():
    p = LaurentPoly2({(1, 0): 2, (0, 1): 0}) - LaurentPoly2.monomial(1, 0, 2)
    assert p.is_zero()
    assert p == 0
    assert not p


def test_text_form_is_sorted_descending():
    p = LaurentPoly2({(-2, 2): 1, (-4, 0): -1, (-2, 0): 2})
    assert str(p) == "1*v^-2*z^2 + 2*v^-2*z^0 - 1*v^-4*z^0"


def test_inverse_of_unit_monomial():
    assert V * V_INV == 1
    assert (Z ** -2) * Z ** 2 == 1
    with pytest.raises(ValueError):
        (V + Z) ** -1
    with pytest.raises(ValueError):
        LaurentPoly2.monomial(1, 0, 2) ** -1


def test_degree_of_zero_is_an_error():
    with pytest.raises(ValueError):
        LaurentPoly2().max_deg_v()


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        LaurentPoly2.parse("v^2 + z")


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(polys, st.integers(0, 4))
def test_power_matches_repeated_product(a, n):
    out = LaurentPoly2.const(1)
    for _ in range(n):
        out = out * a
    assert a ** n == out


@given(polys)
def test_text_and_json_round_trip(a):
    assert LaurentPoly2.parse(str(a)) == a
    assert LaurentPoly2.from_json(a.to_json()) == a
    assert hash(LaurentPoly2.from_json(a.to_json())) == hash(a)


@given(polys, polys)
def test_mirror_substitution_is_a_ring_involution(a, b):
    assert a.substitute_mirror().substitute_mirror() == a
    assert (a * b).substitute_mirror() == a.substitute_mirror() * b.substitute_mirror()
    assert (a + b).substitute_mirror() == a.substitute_mirror() + b.substitute_mirror()


@given(polys.filter(bool), polys.filter(bool))
def test_top_degree_is_additive(a, b):
    # the product of the top-v parts cannot cancel over the integers
    assert (a * b).max_deg_v() == a.max_deg_v() + b.max_deg_v()
