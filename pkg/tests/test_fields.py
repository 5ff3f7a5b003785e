"""Field tables: axioms by exhaustion, plus the frozen polynomial vectors.

The reducing polynomials are part of the package's external contract (test
vectors elsewhere depend on the exact bit patterns), so a few products are
pinned by hand here: F4 uses x^2+x+1, F8 uses x^3+x+1, F9 uses x^2+1.
"""

import pytest
from hypothesis import given, strategies as st

from cppo.errors import AtlasError
from cppo.fields import gf

QS = [2, 3, 4, 5, 7, 8, 9, 13, 16, 17]


@pytest.mark.parametrize("q", QS)
def test_field_axioms_by_exhaustion(q):
    F = gf(q)
    els = list(F.elements)
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a != 0:
            assert F.mul(a, F.inv(a)) == 1
    # associativity and distributivity on a grid (full triple loop for small q)
    probe = els if q <= 9 else els[:6] + els[-3:]
    for a in probe:
        for b in probe:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in probe:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


@pytest.mark.parametrize("q", QS)
def test_multiplicative_group_is_cyclic_of_order_q_minus_1(q):
    F = gf(q)
    g = F.generator()
    seen = set()
    x = 1
    for _ in range(q - 1):
        x = F.mul(x, g)
        seen.add(x)
    assert len(seen) == q - 1 and 0 not in seen


def test_f4_vectors():
    F = gf(4)
    a = 2  # the polynomial x
    asq = F.mul(a, a)
    assert asq == 3  # x^2 = x + 1 under x^2 + x + 1
    assert F.mul(a, asq) == 1
    assert F.add(a, asq) == 1


def test_f8_vectors():
    F = gf(8)
    a = 2
    assert F.mul(F.mul(a, a), a) == 3  # x^3 = x + 1


def test_f9_vectors():
    F = gf(9)
    x = 3  # the polynomial x over F3
    assert F.mul(x, x) == 2  # x^2 = -1


def test_frobenius_is_a_field_automorphism():
    for q in (4, 8, 9, 16):
        F = gf(q)
        for a in F.elements:
            for b in F.elements:
                assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
                assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


@given(st.sampled_from(QS), st.data())
def test_power_agrees_with_repeated_multiplication(q, data):
    F = gf(q)
    a = data.draw(st.integers(min_value=1, max_value=q - 1))
    n = data.draw(st.integers(min_value=-6, max_value=12))
    out = 1
    x = a if n >= 0 else F.inv(a)
    for _ in range(abs(n)):
        out = F.mul(out, x)
    assert F.power(a, n) == out


def test_non_prime_power_rejected():
    with pytest.raises(AtlasError):
        gf(6)


def test_prime_power_without_polynomial_on_file_rejected():
    with pytest.raises(AtlasError):
        gf(25)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        gf(5).inv(0)
