"""The twisted polynomial ring L[T, tau] over a finite field.

Multiplication follows the defining relation T*a = tau(a)*T, so the
coefficient of T^k in a product f*g is

    sum over l of  f_l * tau^l(g_{k-l}).

The ring has no zero divisors (degrees add on products) and both one-sided
divisions exist because tau is an automorphism.  Right division is the
primary primitive; the common-right-multiple witness for the Ore condition
is derived through the coefficientwise anti-isomorphism onto the ring
twisted by tau^{-1}.

Coefficients are stored ascending; the zero polynomial has an empty
coefficient tuple, so equality is bit-exact.
"""

from __future__ import annotations

from .ffield import FieldAut, FqElem, FqField, SubfieldEmbedding


class OreRing:
    """A handle for L[T, tau]: the base field plus the twist automorphism."""

    __slots__ = ("base", "twist", "_twist_powers", "_twist_tables", "_tw_cycle")

    def __init__(self, base: FqField, twist: FieldAut):
        if twist.field != base:
            raise ValueError("twist must be an automorphism of the base field")
        self.base = base
        self.twist = twist
        self._twist_powers: dict[int, FieldAut] = {}
        self._twist_tables: dict[int, dict | None] = {}
        self._tw_cycle: list | None = None

    def twist_power(self, l: int) -> FieldAut:
        l %= self.base.n if self.base.n else 1
        aut = self._twist_powers.get(l)
        if aut is None:
            aut = FieldAut(self.base, self.twist.k * l)
            self._twist_powers[l] = aut
        return aut

    def _twist_table(self, l: int) -> dict | None:
        """Raw tuple->tuple map for tau^l, cached; None for large fields."""
        l %= self.base.n
        if l not in self._twist_tables:
            self._twist_tables[l] = self.base._frobenius_map((self.twist.k * l) % self.base.n)
        return self._twist_tables[l]

    def _twist_cycle(self) -> list:
        """All n twist-power tables; tau^l equals tau^(l mod n) as a map."""
        if self._tw_cycle is None:
            self._tw_cycle = [self._twist_table(l) for l in range(self.base.n)]
        return self._tw_cycle

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, OreRing)
            and self.base == other.base
            and self.twist == other.twist
        )

    def __hash__(self) -> int:
        return hash((self.base, self.twist))

    def __repr__(self) -> str:
        return f"OreRing({self.base.descriptor()}[T, frob^{self.twist.k}])"

    def is_commutative(self) -> bool:
        return self.twist.is_identity()

    # -- constructors -------------------------------------------------------

    def poly(self, coeffs) -> "OrePoly":
        elems = [self.base.element(c) for c in coeffs]
        return OrePoly(self, tuple(elems))

    def zero(self) -> "OrePoly":
        return OrePoly(self, ())

    def one(self) -> "OrePoly":
        return self.poly([1])

    def T(self) -> "OrePoly":
        return self.poly([0, 1])

    def scalar(self, a) -> "OrePoly":
        return self.poly([a])

    def monomial(self, a, k: int) -> "OrePoly":
        coeffs = [self.base.zero()] * k + [self.base.element(a)]
        return OrePoly(self, tuple(coeffs))

    def mirror(self) -> "OreRing":
        """The ring twisted by tau^{-1} (target of the anti-isomorphism)."""
        return OreRing(self.base, self.twist.inverse_aut())


class OrePoly:
    """An element of L[T, tau] in canonical form (no trailing zeros)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: OreRing, coeffs: tuple):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> FqElem:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.base.one()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrePoly)
            and (self.ring is other.ring or self.ring == other.ring)
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "OrePoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            terms.append(f"{list(c.coeffs)}*T^{i}")
        return "OrePoly(" + " + ".join(terms) + f" over {self.ring!r})"

    def _check(self, other: "OrePoly"):
        if not isinstance(other, OrePoly):
            raise TypeError("expected an OrePoly")
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError("operands live in different twisted rings")

    def __add__(self, other: "OrePoly") -> "OrePoly":
        self._check(other)
        base = self.ring.base
        if base._add_pairs is not None or base._ensure_pair_tables():
            add_t = base._add_pairs
            zero_t = base.zero().coeffs
            n = max(len(self.coeffs), len(other.coeffs))
            a = [c.coeffs for c in self.coeffs] + [zero_t] * (n - len(self.coeffs))
            for i, c in enumerate(other.coeffs):
                a[i] = add_t[(a[i], c.coeffs)]
            return OrePoly(self.ring, tuple(FqElem(base, t) for t in a))
        zero = base.zero()
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [zero] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] = a[i] + c
        return OrePoly(self.ring, tuple(a))

    def __neg__(self) -> "OrePoly":
        return OrePoly(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "OrePoly") -> "OrePoly":
        return self + (-other)

    def __mul__(self, other: "OrePoly") -> "OrePoly":
        return ore_mul(self, other)

    def monic(self) -> "OrePoly":
        """Left-normalize by the inverse of the leading coefficient."""
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return OrePoly(self.ring, tuple(inv * c for c in self.coeffs))

    def to_json(self) -> dict:
        return {
            "base": self.ring.base.descriptor(),
            "frob": self.ring.twist.k,
            "coeffs": [list(c.coeffs) for c in self.coeffs],
        }


class OreDivResult:
    """Quotient and remainder of a right division f = q*g + r."""

    __slots__ = ("quotient", "remainder")

    def __init__(self, quotient: OrePoly, remainder: OrePoly):
        self.quotient = quotient
        self.remainder = remainder

    def __iter__(self):
        yield self.quotient
        yield self.remainder

    def __repr__(self) -> str:
        return f"OreDivResult(q={self.quotient!r}, r={self.remainder!r})"


# -- ring operations ----------------------------------------------------------


def ore_mul(f: OrePoly, g: OrePoly) -> OrePoly:
    """Product in L[T, tau]: coefficient k is sum_l f_l * tau^l(g_{k-l})."""
    f._check(g)
    ring = f.ring
    if f.is_zero() or g.is_zero():
        return ring.zero()
    base = ring.base
    fast = base._ensure_pair_tables()
    if fast:
        # raw tuple arithmetic through the cached pair and twist tables
        mul_t, add_t = base._mul_pairs, base._add_pairs
        zero_t = base.zero().coeffs
        n_base = base.n
        twc = ring._tw_cycle if ring._tw_cycle is not None else ring._twist_cycle()
        fc = [c.coeffs for c in f.coeffs]
        gc = [c.coeffs for c in g.coeffs]
        out_t = [zero_t] * (len(fc) + len(gc) - 1)
        for l, a in enumerate(fc):
            if a == zero_t:
                continue
            tw = twc[l % n_base]
            for j, b in enumerate(gc):
                t = mul_t[(a, tw[b])]
                if t != zero_t:
                    out_t[l + j] = add_t[(out_t[l + j], t)]
        return OrePoly(ring, tuple(FqElem(base, t) for t in out_t))
    zero = base.zero()
    out = [zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for l, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        aut = ring.twist_power(l)
        for j, b in enumerate(g.coeffs):
            if not b.is_zero():
                out[l + j] = out[l + j] + a * aut(b)
    return OrePoly(ring, tuple(out))


def ore_right_divmod(f: OrePoly, g: OrePoly) -> OreDivResult:
    """Right division: f = q*g + r with deg r < deg g; q and r are unique."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("right division by the zero polynomial")
    ring = f.ring
    zero = ring.base.zero()
    r = list(f.coeffs)
    d = g.degree
    gd = g.leading()
    q = [zero] * max(0, len(r) - d)
    while len(r) - 1 >= d and r:
        k = len(r) - 1 - d
        # leading term of q_k T^k * g is q_k * tau^k(g_d) T^{k+d}
        c = r[-1] * ring.twist_power(k)(gd).inverse()
        q[k] = c
        aut = ring.twist_power(k)
        for i, b in enumerate(g.coeffs):
            r[k + i] = r[k + i] - c * aut(b)
        while r and r[-1].is_zero():
            r.pop()
    return OreDivResult(OrePoly(ring, tuple(q)), OrePoly(ring, tuple(r)))


def ore_left_divmod(f: OrePoly, g: OrePoly) -> OreDivResult:
    """Left division: f = g*q + r with deg r < deg g (tau invertible)."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("left division by the zero polynomial")
    ring = f.ring
    zero = ring.base.zero()
    r = list(f.coeffs)
    d = g.degree
    gd_inv = g.leading().inverse()
    q = [zero] * max(0, len(r) - d)
    while len(r) - 1 >= d and r:
        k = len(r) - 1 - d
        # leading term of g * q_k T^k is g_d * tau^d(q_k) T^{k+d}
        c = ring.twist_power(-d)(gd_inv * r[-1])
        q[k] = c
        for i, b in enumerate(g.coeffs):
            r[k + i] = r[k + i] - b * ring.twist_power(i)(c)
        while r and r[-1].is_zero():
            r.pop()
    return OreDivResult(OrePoly(ring, tuple(q)), OrePoly(ring, tuple(r)))


def ore_right_gcd(f: OrePoly, g: OrePoly) -> OrePoly:
    """Monic greatest common right divisor, by the right Euclidean chain."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, ore_right_divmod(a, b).remainder
    return a.monic()


def ore_left_lcm(f: OrePoly, g: OrePoly) -> OrePoly:
    """Monic least common left multiple m = u*f = v*g.

    Computed by the extended right Euclidean algorithm; satisfies
    deg(lcm) = deg f + deg g - deg(right gcd).
    """
    m, _, _ = _left_lcm_with_multipliers(f, g)
    return m.monic()


def _left_lcm_with_multipliers(f: OrePoly, g: OrePoly) -> tuple[OrePoly, OrePoly, OrePoly]:
    """Return (m, u, v) with m = u*f = v*g of minimal degree."""
    if f.is_zero() or g.is_zero():
        raise ValueError("lcm witnesses need nonzero inputs")
    ring = f.ring
    one, zero = ring.one(), ring.zero()
    # r_i = s_i*f + t_i*g maintained under r_{i+1} = r_{i-1} - q_i*r_i
    r0, r1 = f, g
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = ore_right_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - ore_mul(q, s1)
        t0, t1 = t1, t0 - ore_mul(q, t1)
    # now r1 = 0, so s1*f = -t1*g is the least common left multiple
    m = ore_mul(s1, f)
    return m, s1, -t1


def ore_witness(x: OrePoly, y: OrePoly) -> tuple[OrePoly, OrePoly]:
    """Constructive right Ore condition: r, s with x*r = y*s != 0.

    The common right multiple is a left lcm computed in the mirror ring
    L[T, tau^{-1}] and carried back along the coefficientwise
    anti-isomorphism; the postcondition is re-verified by multiplication.
    """
    x._check(y)
    if x.is_zero() or y.is_zero():
        raise ValueError("Ore witnesses need nonzero inputs")
    _, u, v = _left_lcm_with_multipliers(anti_involution(x), anti_involution(y))
    r = anti_involution(u)
    s = anti_involution(v)
    left = ore_mul(x, r)
    right = ore_mul(y, s)
    if left != right or left.is_zero():
        raise AssertionError("Ore witness failed its re-verification")
    return r, s


def anti_involution(f: OrePoly) -> OrePoly:
    """The anti-isomorphism L[T, tau] -> L[T, tau^{-1}] fixing T.

    Sends sum a_i T^i to sum tau^{-i}(a_i) T^i and reverses products:
    phi(f*g) = phi(g)*phi(f).
    """
    ring = f.ring
    mirror = ring.mirror()
    out = []
    for i, a in enumerate(f.coeffs):
        out.append(ring.twist_power(-i)(a))
    return OrePoly(mirror, tuple(out))


class InducedRingAut:
    """The coefficientwise action of a base-field automorphism on L[T, tau].

    For rho commuting with tau the map sum a_i T^i -> sum rho(a_i) T^i is a
    ring automorphism fixing T; the handle supports application and a
    fixed-polynomial test.
    """

    __slots__ = ("ring", "rho")

    def __init__(self, ring: OreRing, rho: FieldAut):
        self.ring = ring
        self.rho = rho

    def apply(self, f: OrePoly) -> OrePoly:
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        return OrePoly(self.ring, tuple(self.rho(c) for c in f.coeffs))

    def __call__(self, f: OrePoly) -> OrePoly:
        return self.apply(f)

    def fixes(self, f: OrePoly) -> bool:
        return self.apply(f) == f


def induced_ring_aut(
    rho: FieldAut,
    ring: OreRing,
    fixed_subfield: SubfieldEmbedding | None = None,
) -> InducedRingAut:
    """Lift rho in Aut(L) to the coefficientwise ring automorphism of L[T, tau].

    Aut(L) is abelian so rho always commutes with the twist; when a
    designated subfield is supplied, rho must fix it pointwise.
    """
    if rho.field != ring.base:
        raise ValueError("rho must act on the ring's base field")
    if fixed_subfield is not None:
        if fixed_subfield.big != ring.base:
            raise ValueError("designated subfield does not embed in the base field")
        # rho = frob^k fixes F_{p^m} pointwise iff m divides k
        if rho.k % fixed_subfield.small.n != 0:
            raise ValueError("rho does not fix the designated subfield pointwise")
    return InducedRingAut(ring, rho)


def fixed_polys(ring: OreRing, auts: list[InducedRingAut], max_degree: int) -> list[OrePoly]:
    """All polynomials of degree <= max_degree fixed by every listed action
    (finite coefficient-set scan; intended for small base fields)."""
    base = ring.base
    if base.order ** (max_degree + 1) > 1 << 22:
        raise ValueError("fixed-subring scan is only supported at small sizes")
    out = []
    for idx in range(base.order ** (max_degree + 1)):
        coeffs = []
        k = idx
        for _ in range(max_degree + 1):
            coeffs.append(base.from_index(k % base.order))
            k //= base.order
        f = OrePoly(ring, tuple(coeffs))
        if all(a.fixes(f) for a in auts):
            out.append(f)
    return out


def ore_poly_from_json(data: dict, field_lookup=None) -> OrePoly:
    """Inverse of OrePoly.to_json; field_lookup maps descriptors to fields."""
    from .ffield import field_from_descriptor

    lookup = field_lookup or field_from_descriptor
    base = lookup(data["base"])
    ring = OreRing(base, FieldAut(base, data["frob"]))
    return ring.poly(data["coeffs"])
