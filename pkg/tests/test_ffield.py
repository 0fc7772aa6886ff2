import random

import pytest

from skewgalois import modpoly
from skewgalois.ffield import (
    embed_subfield,
    field_from_descriptor,
    frobenius,
    galois_group,
    make_field,
    parse_descriptor,
    restrict_aut,
    roots_in_field,
)


def test_make_field_examples():
    F4 = make_field(2, 2)
    assert F4.modulus == (1, 1, 1)  # the unique irreducible quadratic over F_2
    F3 = make_field(3, 1)
    assert F3.modulus == (0, 1)  # degree-1 convention: modulus x
    F16 = make_field(2, 4)
    # re-verify irreducibility with the distinct-degree oracle
    for d in (1, 2):
        r = modpoly.sub(modpoly.x_q_pow_mod(list(F16.modulus), 2, d), [0, 1], 2)
        assert modpoly.degree(modpoly.gcd(r, list(F16.modulus), 2)) == 0
    assert modpoly.x_q_pow_mod(list(F16.modulus), 2, 4) == [0, 1]


def test_make_field_rejects_nonprime():
    with pytest.raises(ValueError):
        make_field(4, 2)
    with pytest.raises(ValueError):
        make_field(2, 0)


def test_make_field_seeded_deterministic():
    a = make_field(5, 3, seed=42)
    b = make_field(5, 3, seed=42)
    assert a.modulus == b.modulus
    assert modpoly.is_irreducible(list(a.modulus), 5)


def test_descriptor_roundtrip():
    assert parse_descriptor("2^4") == (2, 4)
    assert parse_descriptor("7") == (7, 1)
    F = field_from_descriptor("3^2")
    assert F.descriptor() == "3^2"


def test_element_arithmetic_field_axioms():
    for p, n in ((2, 3), (3, 2), (5, 1)):
        F = make_field(p, n)
        els = list(F.elements())
        one, zero = F.one(), F.zero()
        for a in els:
            assert a + zero == a
            assert a * one == a
            assert a + (-a) == zero
            if not a.is_zero():
                assert a * a.inverse() == one
        for a in els:
            for b in els:
                assert a + b == b + a
                assert a * b == b * a


def test_frobenius_orders():
    F16 = make_field(2, 4)
    assert frobenius(F16, 1).order == 4
    assert frobenius(F16, 2).order == 2
    assert frobenius(make_field(2, 2), 0).order == 1
    # exponent is reduced mod n
    assert frobenius(F16, 5).k == 1


def test_frobenius_annihilation_exhaustive():
    # x^(p^n) = x for every element, fields up to 2^12
    for p, n in ((2, 12), (3, 5), (5, 3), (7, 2)):
        F = make_field(p, n)
        q = p**n
        assert all(x**q == x for x in F.elements())


def test_frobenius_is_field_automorphism():
    F = make_field(3, 3)
    fr = frobenius(F, 1)
    for a in F.elements():
        for b in list(F.elements())[:9]:
            assert fr(a * b) == fr(a) * fr(b)
            assert fr(a + b) == fr(a) + fr(b)


def test_composition_adds_exponents():
    F = make_field(2, 6)
    rng = random.Random(0)
    for _ in range(30):
        i, j = rng.randrange(6), rng.randrange(6)
        assert frobenius(F, i).compose(frobenius(F, j)) == frobenius(F, i + j)


def test_galois_group_examples():
    F4, F8, F16, F64 = (make_field(2, k) for k in (2, 3, 4, 6))
    emb = embed_subfield(F4, F16)
    G = galois_group(F16, emb)
    assert len(G) == 2
    assert G[0].k == 2 and G[1].k == 0  # generator listed first
    assert len(galois_group(F64, embed_subfield(F4, F64))) == 3
    assert len(galois_group(F8, embed_subfield(F8, F8))) == 1


def test_galois_group_fixed_points_are_exactly_the_subfield():
    for p, n, m in ((2, 8, 4), (2, 12, 6), (3, 6, 2), (5, 4, 2)):
        L, K = make_field(p, n), make_field(p, m)
        emb = embed_subfield(K, L)
        gen = galois_group(L, emb)[0]
        fixed = {x for x in L.elements() if gen(x) == x}
        assert fixed == emb.image_set()


def test_restrict_aut_examples():
    F4, F16 = make_field(2, 2), make_field(2, 4)
    emb = embed_subfield(F4, F16)
    assert restrict_aut(frobenius(F16, 2), emb).k == 0  # fixes F_4 pointwise
    assert restrict_aut(frobenius(F16, 1), emb).k == 1
    assert restrict_aut(frobenius(F16, 0), emb).k == 0
    # pointwise check of the restriction on every subfield element
    fr2 = frobenius(F16, 2)
    for x in F4.elements():
        assert fr2(emb.map(x)) == emb.map(x)
    fr1 = frobenius(F16, 1)
    sig = frobenius(F4, 1)
    for x in F4.elements():
        assert fr1(emb.map(x)) == emb.map(sig(x))


def test_restrict_aut_is_group_hom():
    L, K = make_field(2, 8), make_field(2, 4)
    emb = embed_subfield(K, L)
    for i in range(8):
        for j in range(8):
            lhs = restrict_aut(frobenius(L, i).compose(frobenius(L, j)), emb)
            rhs = restrict_aut(frobenius(L, i), emb).compose(restrict_aut(frobenius(L, j), emb))
            assert lhs == rhs


def test_embedding_rejects_bad_degrees():
    with pytest.raises(ValueError):
        embed_subfield(make_field(2, 3), make_field(2, 4))
    with pytest.raises(ValueError):
        embed_subfield(make_field(3, 1), make_field(2, 4))


def test_embedding_is_ring_hom_random_pairs():
    rng = random.Random(12)
    K, L = make_field(3, 2), make_field(3, 6)
    emb = embed_subfield(K, L)
    els = list(K.elements())
    for _ in range(100):
        a, b = rng.choice(els), rng.choice(els)
        assert emb.map(a * b) == emb.map(a) * emb.map(b)
        assert emb.map(a + b) == emb.map(a) + emb.map(b)


def test_embedding_image_sizes():
    K, L = make_field(2, 3), make_field(2, 6)
    emb = embed_subfield(K, L)
    assert len(emb.image_set()) == 8
    assert emb.degree == 2


def test_large_field_embedding():
    # beyond the table caps: construction goes through equal-degree splitting
    K = make_field(3, 2)
    L = make_field(3, 16)
    emb = embed_subfield(K, L)
    g = emb.image_of_gen
    acc = L.zero()
    for c in reversed(K.modulus):
        acc = acc * g + L.element(c)
    assert acc.is_zero()


def test_roots_in_field_counts():
    L = make_field(2, 4)
    # x^2+x+1 splits into two roots in F_16
    roots = roots_in_field([1, 1, 1], L)
    assert len(roots) == 2
    for r in roots:
        assert (r * r + r + L.one()).is_zero()
