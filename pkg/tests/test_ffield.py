import pytest
from hypothesis import given, settings, strategies as st

from fillcurve.ffield import (GF, embed, extension, field_of_order, format_element, frobenius,
                              is_irreducible_fp, norm, parse_element, prime_power,
                              smallest_irreducible, trace)

FIELDS = [GF(2), GF(3), GF(5), GF(2, 2), GF(3, 2), GF(2, 3), GF(5, 2), GF(2, 4)]


def naive_mul(ctx, a, b):
    """Schoolbook product of coefficient vectors reduced by the modulus."""
    p, d, m = ctx.p, ctx.d, ctx.modulus
    prod = [0] * (2 * d)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(2 * d - 1, d - 1, -1):
        c = prod[k]
        if c:
            for i in range(d + 1):
                prod[k - d + i] = (prod[k - d + i] - c * m[i]) % p
    return prod[:d]


def elements(ctx):
    return st.integers(0, ctx.order - 1).map(ctx.from_code)


field_and_three = st.sampled_from(FIELDS).flatmap(
    lambda K: st.tuples(st.just(K), elements(K), elements(K), elements(K)))


class TestIntegers:
    def test_prime_power(self):
        assert prime_power(8) == (2, 3)
        assert prime_power(9) == (3, 2)
        assert prime_power(6) is None
        assert prime_power(1) is None

    def test_smallest_irreducible(self):
        assert smallest_irreducible(2, 2) == (1, 1, 1)
        assert smallest_irreducible(3, 2) == (1, 0, 1)
        assert smallest_irreducible(2, 3) == (1, 0, 1, 1)   # t^3 + t^2 + 1
        assert is_irreducible_fp((1, 1, 0, 1), 2)
        assert not is_irreducible_fp((1, 0, 1), 2)


class TestSmallFields:
    def test_f4_table(self):
        K = GF(2, 2)
        w = K.gen
        assert w * w == w + 1
        assert w ** 3 == K.one
        assert (w + 1).inv() == w

    def test_f9(self):
        K = GF(3, 2)
        t = K.gen
        assert t * t == K(-1)
        assert frobenius(t, 3) == K(2) * t

    def test_enumeration_order(self):
        K = GF(3, 2)
        assert [e.coeffs for e in K.enumerate()][:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]
        assert [K.index(e) for e in K.enumerate()] == list(range(9))

    def test_root_of_t3_t_1(self):
        K = extension(GF(2), 3)
        lam = next(x for x in K.enumerate() if x ** 3 + x + 1 == K.zero)
        assert norm(lam, 2) == K.one
        assert trace(lam, 2) == K.zero
        assert lam.multiplicative_order() == 7

    def test_primitive_element(self):
        for K in FIELDS:
            assert K.primitive_element().multiplicative_order() == K.order - 1

    def test_mismatch_raises(self):
        with pytest.raises(ValueError):
            GF(2).one + GF(3).one
        with pytest.raises(ZeroDivisionError):
            GF(5).zero.inv()

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            GF(2, 2, (1, 0, 1))
        with pytest.raises(ValueError):
            GF(4)

    def test_subfield_check(self):
        with pytest.raises(ValueError):
            frobenius(GF(2, 2).gen, 8)


class TestText:
    def test_roundtrip(self):
        for K in FIELDS:
            for a in K.enumerate():
                assert parse_element(format_element(a), K) == a

    def test_expressions(self):
        K = field_of_order(4)
        assert K.parse("ω") == K.gen
        assert K.parse("ω+1") == K.gen + 1
        F9 = field_of_order(9)
        assert F9.parse("2*t^2+1") == F9(-1)
        assert F9.parse("t^2") == F9(-1)
        with pytest.raises(ValueError):
            GF(5).parse("x")


@settings(max_examples=300, deadline=None)
@given(field_and_three)
def test_field_axioms(data):
    K, a, b, c = data
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == K.zero and a + K.zero == a and a * K.one == a
    if a:
        assert a * a.inv() == K.one
        assert a ** (K.order - 1) == K.one


@settings(max_examples=300, deadline=None)
@given(field_and_three)
def test_multiplication_matches_schoolbook(data):
    K, a, b, _ = data
    assert list((a * b).coeffs) == naive_mul(K, a, b)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([(GF(2), 3), (GF(2, 2), 3), (GF(3), 3), (GF(2), 6), (GF(2, 2), 2)])
       .flatmap(lambda s: st.tuples(st.just(s), elements(s[0]), elements(s[0]))))
def test_embedding_is_homomorphism(data):
    (sub, m), a, b = data
    L = extension(sub, m)
    assert embed(a + b, L) == embed(a, L) + embed(b, L)
    assert embed(a * b, L) == embed(a, L) * embed(b, L)
    assert frobenius(embed(a, L), sub.order) == embed(a, L)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([(GF(2), 3), (GF(3), 3), (GF(2, 2), 3)])
       .flatmap(lambda s: st.tuples(st.just(s), elements(extension(*s)))))
def test_norm_trace_land_in_subfield(data):
    (sub, m), a = data
    q = sub.order
    assert norm(a, q) ** q == norm(a, q)
    assert trace(a, q) ** q == trace(a, q)
    assert frobenius(frobenius(frobenius(a, q), q), q) == a
