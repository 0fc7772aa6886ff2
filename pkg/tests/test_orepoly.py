import random

import pytest

from skewgalois.ffield import embed_subfield, frobenius, make_field
from skewgalois.orepoly import (
    OreRing,
    anti_involution,
    fixed_polys,
    induced_ring_aut,
    ore_left_lcm,
    ore_mul,
    ore_poly_from_json,
    ore_right_divmod,
    ore_right_gcd,
    ore_witness,
)


def ring_f4():
    F4 = make_field(2, 2)
    return F4, OreRing(F4, frobenius(F4, 1))


def rand_poly(ring, rng, max_deg=4):
    d = rng.randrange(max_deg + 1)
    return ring.poly(
        [ring.base.from_index(rng.randrange(ring.base.order)) for _ in range(d + 1)]
    )


def test_defining_relation():
    F4, R = ring_f4()
    w = F4.gen()
    # T * w = w^2 T, forced by the twisted multiplication rule
    assert ore_mul(R.T(), R.scalar(w)) == R.poly([0, w * w])


def test_mul_hand_examples():
    F4, R = ring_f4()
    w = F4.gen()
    wT = R.poly([0, w])
    # (wT)(wT) = w * frob(w) * T^2 = w^3 T^2 = T^2
    assert ore_mul(wT, wT) == R.poly([0, 0, 1])
    # (T+1)(T+w) = T^2 + wT + w
    assert ore_mul(R.poly([1, 1]), R.poly([w, 1])) == R.poly([w, w, 1])


def test_mul_against_bruteforce_convolution():
    F4, R = ring_f4()
    fr = R.twist
    rng = random.Random(0)
    for _ in range(300):
        f, g = rand_poly(R, rng), rand_poly(R, rng)
        prod = ore_mul(f, g)
        if f.is_zero() or g.is_zero():
            assert prod.is_zero()
            continue
        out = [F4.zero()] * (f.degree + g.degree + 1)
        for i, a in enumerate(f.coeffs):
            for j, b in enumerate(g.coeffs):
                t = b
                for _ in range(i):
                    t = fr(t)
                out[i + j] = out[i + j] + a * t
        assert list(prod.coeffs) + [F4.zero()] * (len(out) - len(prod.coeffs)) == out


def test_ring_laws_random():
    for p, n, k in ((2, 2, 1), (3, 2, 1), (2, 4, 2), (5, 2, 0)):
        F = make_field(p, n)
        R = OreRing(F, frobenius(F, k))
        rng = random.Random(100 * p + n)
        for _ in range(150):
            f, g, h = (rand_poly(R, rng, 3) for _ in range(3))
            assert ore_mul(ore_mul(f, g), h) == ore_mul(f, ore_mul(g, h))
            assert ore_mul(f, g + h) == ore_mul(f, g) + ore_mul(f, h)
            assert ore_mul(f + g, h) == ore_mul(f, h) + ore_mul(g, h)
            assert ore_mul(R.one(), f) == f and ore_mul(f, R.one()) == f
            if not f.is_zero() and not g.is_zero():
                assert ore_mul(f, g).degree == f.degree + g.degree


def test_twist_law_exhaustive_over_base():
    # T * a = tau(a) * T for every base element, every twist
    for p, n in ((2, 2), (2, 4), (3, 3), (5, 2)):
        F = make_field(p, n)
        for k in range(n):
            R = OreRing(F, frobenius(F, k))
            tau, T = R.twist, R.T()
            for a in F.elements():
                assert ore_mul(T, R.scalar(a)) == R.poly([F.zero(), tau(a)])


def test_commutative_iff_untwisted():
    F4, R = ring_f4()
    # twisted: a concrete non-commuting pair exists
    w = F4.gen()
    a, b = R.T(), R.scalar(w)
    assert ore_mul(a, b) != ore_mul(b, a)
    # untwisted: commutes on a random sample
    R0 = OreRing(F4, frobenius(F4, 0))
    rng = random.Random(1)
    for _ in range(100):
        f, g = rand_poly(R0, rng), rand_poly(R0, rng)
        assert ore_mul(f, g) == ore_mul(g, f)


def test_noncommutativity_witness_for_every_nonidentity_twist():
    for p, n in ((2, 2), (2, 4), (3, 3), (5, 2)):
        F = make_field(p, n)
        for k in range(1, n):
            R = OreRing(F, frobenius(F, k))
            found = False
            for a in F.elements():
                T, s = R.T(), R.scalar(a)
                if ore_mul(T, s) != ore_mul(s, T):
                    found = True
                    break
            assert found, (p, n, k)


def test_right_divmod_examples():
    F4, R = ring_f4()
    w = F4.gen()
    q, r = ore_right_divmod(R.poly([0, 0, 1]), R.T())
    assert q == R.T() and r.is_zero()
    f = R.poly([w, 1, w])
    q, r = ore_right_divmod(f, R.one())
    assert q == f and r.is_zero()
    # inverse of the multiplication example
    q, r = ore_right_divmod(R.poly([w, w, 1]), R.poly([w, 1]))
    assert q == R.poly([1, 1]) and r.is_zero()


def test_right_divmod_roundtrip_and_uniqueness():
    F4, R = ring_f4()
    rng = random.Random(2)
    for _ in range(400):
        f, g = rand_poly(R, rng, 6), rand_poly(R, rng, 3)
        if g.is_zero():
            with pytest.raises(ZeroDivisionError):
                ore_right_divmod(f, g)
            continue
        q, r = ore_right_divmod(f, g)
        assert r.degree < g.degree
        assert ore_mul(q, g) + r == f
        # perturbing the quotient breaks the degree bound or the identity
        if not q.is_zero():
            q2 = q + R.one()
            r2 = f - ore_mul(q2, g)
            assert (q2, r2) != (q, r)
            assert r2.degree >= g.degree or ore_mul(q2, g) + r2 != f or r2 != r


def test_left_divmod_roundtrip():
    from skewgalois.orepoly import ore_left_divmod

    F4, R = ring_f4()
    rng = random.Random(3)
    for _ in range(200):
        f, g = rand_poly(R, rng, 6), rand_poly(R, rng, 3)
        if g.is_zero():
            continue
        q, r = ore_left_divmod(f, g)
        assert r.degree < g.degree
        assert ore_mul(g, q) + r == f


def test_gcd_examples():
    F4, R = ring_f4()
    w = F4.gen()
    assert ore_right_gcd(R.poly([0, 0, 1]), R.T()) == R.T()
    f = R.poly([w, 1])
    assert ore_right_gcd(f, R.zero()) == f.monic()
    with pytest.raises(ValueError):
        ore_right_gcd(R.zero(), R.zero())


def test_gcd_divides_on_the_right():
    F4, R = ring_f4()
    rng = random.Random(4)
    for _ in range(200):
        f, g = rand_poly(R, rng, 4), rand_poly(R, rng, 4)
        if f.is_zero() and g.is_zero():
            continue
        d = ore_right_gcd(f, g)
        for h in (f, g):
            if not h.is_zero():
                assert ore_right_divmod(h, d).remainder.is_zero()


def test_lcm_degree_relation_and_unit_example():
    F4, R = ring_f4()
    w = F4.gen()
    assert ore_left_lcm(R.T(), R.scalar(w)) == R.T()  # unit second argument
    rng = random.Random(5)
    for _ in range(200):
        f, g = rand_poly(R, rng, 3), rand_poly(R, rng, 3)
        if f.is_zero() or g.is_zero():
            continue
        m = ore_left_lcm(f, g)
        d = ore_right_gcd(f, g)
        assert m.degree == f.degree + g.degree - d.degree
        # m is a common left multiple: m = u f = v g exactly
        assert ore_right_divmod(m, f).remainder.is_zero()
        assert ore_right_divmod(m, g).remainder.is_zero()


def test_ore_witness_examples():
    F4, R = ring_f4()
    w = F4.gen()
    # T * w = w^2 T = w * (w T): the book pair checks by multiplication
    assert ore_mul(R.T(), R.scalar(w)) == ore_mul(R.scalar(w), R.poly([0, w]))
    r, s = ore_witness(R.T(), R.scalar(w))
    prod = ore_mul(R.T(), r)
    assert prod == ore_mul(R.scalar(w), s) and not prod.is_zero()
    # x = y gives the trivial witness
    f = R.poly([w, 1])
    assert ore_witness(f, f) == (R.one(), R.one())
    # commutative case over F_2: plain lcm
    F2 = make_field(2, 1)
    R2 = OreRing(F2, frobenius(F2, 0))
    r2, s2 = ore_witness(R2.poly([1, 1]), R2.T())
    assert r2 == R2.T() and s2 == R2.poly([1, 1])


def test_ore_witness_random():
    for p, n, k in ((2, 2, 1), (2, 4, 1), (3, 3, 2), (5, 2, 1)):
        F = make_field(p, n)
        R = OreRing(F, frobenius(F, k))
        rng = random.Random(6 * p + n + k)
        for _ in range(100):
            x, y = rand_poly(R, rng, 3), rand_poly(R, rng, 3)
            if x.is_zero() or y.is_zero():
                continue
            r, s = ore_witness(x, y)
            prod = ore_mul(x, r)
            assert prod == ore_mul(y, s) and not prod.is_zero()


def test_anti_involution_reverses_products():
    F16 = make_field(2, 4)
    R = OreRing(F16, frobenius(F16, 1))
    rng = random.Random(7)
    for _ in range(200):
        f, g = rand_poly(R, rng), rand_poly(R, rng)
        assert anti_involution(ore_mul(f, g)) == ore_mul(anti_involution(g), anti_involution(f))
    # involution property back and forth
    f = rand_poly(R, rng)
    assert anti_involution(anti_involution(f)) == f


def test_induced_ring_aut_fixed_subring():
    F2, F4 = make_field(2, 1), make_field(2, 2)
    emb = embed_subfield(F2, F4)
    # untwisted F_4[T], rho = Frobenius: fixed polynomials are exactly F_2[T]
    R = OreRing(F4, frobenius(F4, 0))
    act = induced_ring_aut(frobenius(F4, 1), R, emb)
    fixed = fixed_polys(R, [act], 3)
    assert len(fixed) == 2**4
    img = emb.image_set()
    for f in fixed:
        assert all(c in img for c in f.coeffs)


def test_induced_ring_aut_twisted_tower():
    F2, F16 = make_field(2, 1), make_field(2, 4)
    emb = embed_subfield(F2, F16)
    ring = OreRing(F16, frobenius(F16, 2))
    acts = [induced_ring_aut(frobenius(F16, k), ring, emb) for k in range(4)]
    # the full Galois action over F_2 fixes exactly the prime-field coefficients
    fixed = fixed_polys(ring, acts, 2)
    assert len(fixed) == 2**3
    img = emb.image_set()
    for f in fixed:
        assert all(c in img for c in f.coeffs)
    # each action is a ring homomorphism fixing T
    rng = random.Random(8)
    for _ in range(50):
        f, g = rand_poly(ring, rng, 3), rand_poly(ring, rng, 3)
        for a in acts:
            assert a(ore_mul(f, g)) == ore_mul(a(f), a(g))
            assert a(ring.T()) == ring.T()


def test_induced_ring_aut_rejects_nonfixing():
    F4, F16 = make_field(2, 2), make_field(2, 4)
    emb = embed_subfield(F4, F16)
    ring = OreRing(F16, frobenius(F16, 0))
    with pytest.raises(ValueError):
        induced_ring_aut(frobenius(F16, 1), ring, emb)  # does not fix F_4
    induced_ring_aut(frobenius(F16, 2), ring, emb)  # fixes F_4: fine


def test_json_roundtrip():
    F4, R = ring_f4()
    w = F4.gen()
    f = R.poly([w, 1, w * w])
    data = f.to_json()
    assert data["base"] == "2^2" and data["frob"] == 1
    g = ore_poly_from_json(data)
    assert g == f


def test_mismatched_rings_rejected():
    F4, R = ring_f4()
    R0 = OreRing(F4, frobenius(F4, 0))
    with pytest.raises(ValueError):
        ore_mul(R.T(), R0.T())
