import random

from skewgalois import zpoly as zp


def test_discriminant_known_values():
    assert zp.discriminant([-2, 0, 1]) == 8          # x^2 - 2
    assert zp.discriminant([1, 1, 1]) == -3          # x^2 + x + 1
    assert zp.discriminant([-1, -1, 0, 1]) == -23    # x^3 - x - 1
    assert zp.discriminant([-1, -3, 0, 1]) == 81     # x^3 - 3x - 1
    assert zp.discriminant([1, 1, 1, 1, 1]) == 125   # 5th cyclotomic
    assert zp.discriminant([1, 0, 0, 0, 1]) == 256   # x^4 + 1
    assert zp.discriminant([-1, -1, 0, 0, 1]) == -283


def test_resultant_shared_root_vanishes():
    # (x-1)(x-2) shares a root with (x-1)(x-3) but not with (x-4)(x-5)
    assert zp.resultant([2, -3, 1], [3, -4, 1]) == 0
    assert zp.resultant([2, -3, 1], [20, -9, 1]) != 0


def test_resultant_multiplicative_in_roots():
    # res(f, g) = prod g(root_i) for monic f; check on split polynomials
    rng = random.Random(3)
    for _ in range(50):
        roots_f = [rng.randrange(-5, 6) for _ in range(3)]
        g = [rng.randrange(-5, 6) for _ in range(3)] + [1]
        f = [1]
        for r in roots_f:
            f = zp.zmul(f, [-r, 1])
        expected = 1
        for r in roots_f:
            expected *= zp.zeval(g, r)
        assert zp.resultant(f, g) == expected


def test_count_real_roots_from_known_factors():
    # build polynomials with a prescribed number of real roots and count them
    rng = random.Random(4)
    for _ in range(60):
        n_real = rng.randrange(4)
        n_complex_pairs = rng.randrange(2)
        f = [1]
        used = set()
        for _ in range(n_real):
            while True:
                r = rng.randrange(-20, 21)
                if r not in used:
                    used.add(r)
                    break
            f = zp.zmul(f, [-r, 1])
        for _ in range(n_complex_pairs):
            a, b = rng.randrange(-4, 5), rng.randrange(1, 5)
            # (x - a)^2 + b^2: no real roots
            f = zp.zmul(f, [a * a + b * b, -2 * a, 1])
        assert zp.count_real_roots(f) == n_real


def test_count_real_roots_repeated_roots_deflated():
    # (x-1)^2 (x+2) has two distinct real roots
    f = zp.zmul(zp.zmul([-1, 1], [-1, 1]), [2, 1])
    assert zp.count_real_roots(f) == 2


def test_count_real_roots_huge_coefficients():
    s = 10**40
    f = [1]
    for j in (1, 2, 3):
        f = zp.zmul(f, [-j * s, 1])
    assert zp.count_real_roots(f) == 3


def test_integer_roots_monic():
    assert zp.integer_roots_monic([-6, 11, -6, 1]) == [1, 2, 3]
    assert zp.integer_roots_monic([2, 0, 1]) == []
    assert zp.integer_roots_monic([0, 0, 1]) == [0]
    # huge roots found without divisor enumeration
    r = 10**30 + 7
    f = zp.zmul([-r, 1], [5, 0, 1])
    assert zp.integer_roots_monic(f) == [r]


def test_integer_roots_vs_scan():
    rng = random.Random(8)
    for _ in range(100):
        roots = sorted({rng.randrange(-8, 9) for _ in range(rng.randrange(4))})
        f = [1]
        for r in roots:
            f = zp.zmul(f, [-r, 1])
        f = zp.zmul(f, [rng.randrange(1, 7), 0, 1])  # irrational/complex pad
        assert zp.integer_roots_monic(f) == roots


def test_count_between():
    f = [1]
    for j in (1, 5, 9):
        f = zp.zmul(f, [-j, 1])
    assert zp.count_real_roots_between(f, 0, 6) == 2
    assert zp.count_real_roots_between(f, 5, 9) == 1  # half-open (5, 9]
    assert zp.count_real_roots_between(f, 9, 20) == 0
