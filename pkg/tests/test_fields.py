import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from varietycodes._primitive_polys import PRIMITIVE_POLYNOMIALS
from varietycodes.fields import FieldContext, build_field, divisors, is_prime

SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 6), (3, 1), (3, 2), (3, 3), (5, 2), (7, 2)]


def poly_mulmod(a, b, modulus, p):
    """Schoolbook product of coefficient lists (constant first) reduced mod ``modulus``."""
    r = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, r - 1, -1):
        c = prod[deg]
        if c:
            for t in range(r + 1):
                prod[deg - r + t] = (prod[deg - r + t] - c * modulus[t]) % p
    return (prod + [0] * r)[:r]


def test_is_prime_and_divisors():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


@pytest.mark.parametrize("p,r", SMALL_FIELDS)
def test_multiplication_matches_polynomial_oracle(p, r):
    F = build_field(p, r)
    digits = F.digits(F.elements())
    rng = np.random.default_rng(p * 100 + r)
    xs = rng.integers(0, F.q, 200)
    ys = rng.integers(0, F.q, 200)
    for x, y in zip(xs, ys):
        expect = poly_mulmod(list(digits[x]), list(digits[y]), F.modulus, p)
        assert F.digits(F.mul(int(x), int(y))).tolist() == expect


@pytest.mark.parametrize("p,r", SMALL_FIELDS)
def test_field_axioms(p, r):
    F = build_field(p, r)
    x = F.elements()
    nz = x[1:]
    assert np.all(F.add(x, F.neg(x)) == 0)
    assert np.all(F.mul(nz, F.inv(nz)) == 1)
    assert np.all(F.div(F.mul(nz, 7 % F.q or 1), nz) == (7 % F.q or 1))
    assert sorted(F.exp.tolist()) == list(range(1, F.q))
    assert F.multiplicative_order(F.g) == F.q - 1
    assert F.log[0] == -1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        build_field(2, 3).inv(0)


def test_primitive_table_is_least_and_primitive():
    for (p, r), poly in PRIMITIVE_POLYNOMIALS.items():
        if p**r > 1 << 12:
            continue
        F = FieldContext(p, r, poly)
        assert F.multiplicative_order(F.g) == p**r - 1
    # (2,4): x^4 + x + 1 is the least primitive quartic
    assert PRIMITIVE_POLYNOMIALS[(2, 4)] == (1, 1, 0, 0, 1)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        FieldContext(4, 1)
    with pytest.raises(ValueError):
        FieldContext(2, 4, (1, 0, 0, 0, 1))  # x^4 + 1 is not primitive
    with pytest.raises(ValueError):
        FieldContext(2, 30)


@pytest.mark.parametrize("p,r", SMALL_FIELDS)
def test_frobenius_is_additive_and_multiplicative(p, r):
    F = build_field(p, r)
    x = F.elements()
    for a, b in itertools.product(range(F.q), repeat=2):
        if (a * F.q + b) % 7:
            continue
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
    assert np.all(F.frobenius(x, r) == x)


@pytest.mark.parametrize("p,r", [(2, 6), (3, 4), (2, 4), (5, 2)])
def test_subfields_have_expected_size(p, r):
    F = build_field(p, r)
    for t in divisors(r):
        members = F.elements()[F.in_subfield(F.elements(), t)]
        assert len(members) == p**t
        assert set(F.trace(F.elements(), t).tolist()) == set(members.tolist())


@pytest.mark.parametrize("p,r,t", [(2, 6, 2), (2, 6, 3), (3, 4, 2), (2, 4, 2), (2, 12, 4), (5, 2, 1)])
def test_subfield_embedding_is_a_field_isomorphism(p, r, t):
    F = build_field(p, r)
    emb = F.subfield(t)
    S = emb.small
    assert S.q == p**t
    a = S.elements()
    A, B = np.meshgrid(a, a)
    assert np.all(emb.to_big(S.mul(A, B)) == F.mul(emb.to_big(A), emb.to_big(B)))
    assert np.all(emb.to_big(S.add(A, B)) == F.add(emb.to_big(A), emb.to_big(B)))
    assert np.all(emb.to_small(emb.to_big(a)) == a)
    assert emb.to_small(emb.beta) == S.g


def test_to_small_rejects_outside_values():
    F = build_field(2, 4)
    with pytest.raises(ValueError):
        F.subfield(2).to_small(F.g)


def test_minimal_polynomial_has_root():
    F = build_field(2, 6)
    beta = F.subfield_primitive(3)
    poly = F.minimal_polynomial(beta)
    assert len(poly) == 4
    acc = 0
    for i, c in enumerate(poly):
        acc = F.add(acc, F.mul(c, F.pow(beta, i)))
    assert acc == 0


def test_roots_of_unity():
    F = build_field(2, 6)
    for n in (3, 7, 9, 21, 63):
        w = F.root_of_unity(n)
        assert F.multiplicative_order(w) == n
    with pytest.raises(ValueError):
        F.root_of_unity(5)


def test_field_element_operators():
    F = build_field(3, 2)
    x, y = F.element(4), F.element(7)
    assert (x * y).value == F.mul(4, 7)
    assert (x + y - y) == x
    assert (x / y) * y == x
    assert (x**8).value == 1
    with pytest.raises(ValueError):
        x + build_field(3, 1).element(1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_FIELDS), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(-20, 20))
def test_power_laws(pr, a, b, k):
    F = build_field(*pr)
    x, y = a % (F.q - 1) + 1, b % F.q
    assert F.mul(F.pow(x, k), F.pow(x, -k)) == 1
    assert F.pow(F.mul(x, y), 3) == F.mul(F.pow(x, 3), F.pow(y, 3))
    assert F.from_digits(F.digits(y)) == y
