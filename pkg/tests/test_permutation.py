"""Permutation arithmetic against small hand-worked values.

Composition is left to right: (p * q)(i) = q(p(i)).  Conjugation is the
right action x^g = g^-1 x g and [x, y] = x^-1 y^-1 x y, so that
[x, y] = x^-1 * x^y.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cppo import CycleParseError, DegreeMismatchError, Permutation, parse_permutation
from cppo.permutation import commutator, element_order


def P(text, degree):
    return parse_permutation(text, degree)


def test_composition_is_left_to_right():
    # apply (1 2) first, then (1 3): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
    p = P("(1 2)", 3)
    q = P("(1 3)", 3)
    assert p * q == P("(1 2 3)", 3)
    assert q * p == P("(1 3 2)", 3)


def test_images_are_one_based():
    p = P("(1 2 3)", 4)
    assert p.images == (2, 3, 1, 4)
    assert p(1) == 2 and p(3) == 1 and p(4) == 4


def test_inverse_and_power():
    p = P("(1 2 3 4 5)", 5)
    assert ~p == P("(1 5 4 3 2)", 5)
    assert p * ~p == Permutation.identity(5)
    assert p**5 == Permutation.identity(5)
    assert p**-2 == (~p) ** 2
    assert p**0 == Permutation.identity(5)


def test_conjugation_is_right_action():
    x = P("(1 2 3)", 3)
    g = P("(2 3)", 3)
    assert x.conjugate(g) == P("(1 3 2)", 3)
    # x^(gh) == (x^g)^h on a larger example
    x = P("(1 2)(3 4 5)", 6)
    g = P("(1 3 6)", 6)
    h = P("(2 5)", 6)
    assert x.conjugate(g * h) == x.conjugate(g).conjugate(h)


def test_commutator_matches_definition():
    x = P("(1 2 3)", 4)
    y = P("(3 4)", 4)
    assert commutator(x, y) == ~x * ~y * x * y
    assert commutator(x, y) == ~x * x.conjugate(y)
    assert commutator(x, x) == Permutation.identity(4)


def test_six_point_commutator_with_twisted_factor():
    """A frozen six-point value: x^-1 y^-1 x' y for a specific triple.

    With x = (1 2 3 4 5 6), x' = (1 4 2)(5 6) and y = (4 5 6) the product
    x^-1 y^-1 x' y works out to (1 4 3)(2 5 6), an element of order 3.
    """
    x = P("(1 2 3 4 5 6)", 6)
    x_twisted = P("(1 4 2)(5 6)", 6)
    y = P("(4 5 6)", 6)
    w = ~x * ~y * x_twisted * y
    assert w == P("(1 4 3)(2 5 6)", 6)
    assert w.order() == 3


def test_order_and_cycles():
    p = P("(1 2)(3 4 5)", 6)
    assert p.order() == 6
    assert element_order(p) == 6
    assert p.cycles() == [(1, 2), (3, 4, 5)]
    assert Permutation.identity(3).order() == 1
    assert Permutation.identity(3).cycles() == []


def test_str_roundtrip():
    for text, n in [("(1 2 3)(5 6)", 6), ("(2 4)", 4), ("()", 5)]:
        p = P(text, n)
        assert parse_permutation(str(p), n) == p


def test_parse_identity_and_singletons():
    assert P("()", 4) == Permutation.identity(4)
    assert P("(3)", 4) == Permutation.identity(4)
    assert P("(1 2)(3)", 4) == P("(1 2)", 4)


@pytest.mark.parametrize(
    "bad",
    ["", "  ", "1 2 3", "(1 2", "(1 2)(2 3)", "(0 1)", "(1 9)", "(1 1)", "(1 2) x"],
)
def test_parse_rejects_malformed_input(bad):
    with pytest.raises(CycleParseError):
        parse_permutation(bad, 4)


def test_degree_mismatch_raises():
    with pytest.raises(DegreeMismatchError):
        P("(1 2)", 3) * P("(1 2)", 4)
    with pytest.raises(DegreeMismatchError):
        P("(1 2)", 3).conjugate(P("(1 2)", 4))


def test_constructor_validates_images():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    with pytest.raises(ValueError):
        Permutation((0, 1, 2))


def test_sorting_is_by_image_table():
    ps = [P("(1 2)", 3), Permutation.identity(3), P("(1 3 2)", 3)]
    assert sorted(ps)[0] == Permutation.identity(3)


perm_images = st.permutations(range(1, 7)).map(lambda t: Permutation(tuple(t)))


@given(perm_images, perm_images, perm_images)
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perm_images)
def test_inverse_cancels(a):
    assert a * ~a == Permutation.identity(6)
    assert ~a * a == Permutation.identity(6)


@given(perm_images)
def test_parse_str_roundtrip(a):
    assert parse_permutation(str(a), 6) == a


@given(perm_images)
def test_order_annihilates(a):
    assert a ** a.order() == Permutation.identity(6)
    # and no smaller positive power does
    for k in range(1, a.order()):
        assert a**k != Permutation.identity(6)
