from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from braidknot.algebra import (
    DegreeMismatchError,
    ExponentConventionError,
    LaurentPoly,
    Permutation,
    VariableMismatchError,
    compose,
    compose_all,
    product,
)


@st.composite
def perms(draw, n=None):
    n = n if n is not None else draw(st.integers(1, 7))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def perm_triples(draw):
    n = draw(st.integers(1, 7))
    return draw(perms(n)), draw(perms(n)), draw(perms(n))


polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(
    lambda t: LaurentPoly(t, "q")
)


def test_parse_and_print_round_trip():
    p = Permutation.parse("(3,1,2)")
    assert p.images == (3, 1, 2)
    assert str(p) == "(3,1,2)"
    assert Permutation.parse(" (1) ") == Permutation.identity(1)


@pytest.mark.parametrize("text", ["3,1,2", "(1,1,2)", "(0,1)", "(1,a)", "()"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        Permutation.parse(text)


def test_compose_applies_left_factor_first():
    a, b = Permutation.parse("(2,3,1,5,4)"), Permutation.parse("(3,5,2,1,4)")
    assert (a * b)(1) == b(a(1))


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(Permutation.parse("(1,2)"), Permutation.parse("(1,2,3)"))


def test_cycles_order_inversions():
    p = Permutation.parse("(3,1,2,5,6,4)")
    assert p.cycles() == [(1, 3, 2), (4, 5, 6)]
    assert p.order() == 3
    assert Permutation.parse("(2,1,4,3)").order() == 2
    assert Permutation.parse("(2,3,1,5,4)").inversions() == 3


def test_factorization_matches_hand_values():
    assert Permutation.parse("(2,3,1,5,4)").transpositions() == [2, 1, 4]
    assert Permutation.parse("(3,1,2,5,6,4)").transpositions() == [1, 2, 5, 4]
    assert Permutation.identity(4).transpositions() == []


def test_parallel_block_sum():
    p = Permutation.parse("(2,1)") | Permutation.parse("(3,1,2)")
    assert p == Permutation.parse("(2,1,5,3,4)")


@given(perm_triples())
def test_composition_is_associative(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)


@given(perms())
def test_inverse_and_identity(p):
    e = Permutation.identity(p.degree)
    assert p * p.inverse() == e == p.inverse() * p
    assert p * e == p == e * p


@given(perms())
def test_order_is_least_period(p):
    k = p.order()
    assert (p ** k).is_identity()
    assert all(not (p ** j).is_identity() for j in range(1, k))


@given(perms())
def test_factorization_recomposes_with_minimal_length(p):
    word = p.transpositions()
    assert len(word) == p.inversions()
    assert compose_all((Permutation.transposition(p.degree, i) for i in word), p.degree) == p


@given(perms())
def test_cycles_partition_the_points(p):
    points = sorted(x for c in p.cycles() for x in c)
    assert points == list(range(1, p.degree + 1))


# --------------------------------------------------------------------------
# Laurent polynomials


@pytest.mark.parametrize(
    "text",
    ["0", "1", "-q - q^-1", "-q^8 + q^6 + q^2", "2q^6 - q^4", "q^-2 + q^-6 - q^-8"],
)
def test_polynomial_text_round_trip(text):
    assert str(LaurentPoly.parse(text)) == text


def test_polynomial_printing():
    z = LaurentPoly.monomial(1, 1, "z")
    assert str(z ** 5 + 2 * z ** 3 + z) == "z^5 + 2z^3 + z"
    assert str(LaurentPoly({}, "q")) == "0"
    assert str(LaurentPoly({-1: -3}, "q")) == "-3q^-1"


@pytest.mark.parametrize("text", ["", "q q", "q^", "2 3", "q +", "q + z"])
def test_polynomial_parse_rejects(text):
    with pytest.raises(ValueError):
        LaurentPoly.parse(text)


def test_variable_mismatch():
    with pytest.raises(VariableMismatchError):
        LaurentPoly.parse("z") + LaurentPoly.parse("q")


def test_rescale_requires_divisible_exponents():
    p = LaurentPoly({-10: -1, -2: -1}, "A")
    assert p.rescale_exponents(-1, 2, "q") == LaurentPoly.parse("-q^5 - q")
    with pytest.raises(ExponentConventionError):
        LaurentPoly({1: 1}, "A").rescale_exponents(-1, 2, "q")


def test_negative_powers_only_for_monomials():
    assert LaurentPoly({2: -1}, "q") ** -2 == LaurentPoly({-4: 1}, "q")
    with pytest.raises(ValueError):
        LaurentPoly.parse("1 + q") ** -1


def test_json_shape():
    assert LaurentPoly.parse("-q^5 - q").to_json() == {"variable": "q", "terms": [[5, -1], [1, -1]]}


def test_product_of_nothing_is_one():
    assert product([], "z") == 1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0


@given(polys)
def test_round_trip_and_involutions(p):
    assert LaurentPoly.parse(str(p), "q") == p
    assert p.substitute_inverse().substitute_inverse() == p
    assert p.negate_variable().negate_variable() == p


@given(polys, polys)
def test_substitutions_are_ring_maps(a, b):
    assert (a * b).substitute_inverse() == a.substitute_inverse() * b.substitute_inverse()
    assert (a * b).negate_variable() == a.negate_variable() * b.negate_variable()
