"""Explicit finite groups as multiplication tables: nilpotency and
solvability tests, Fitting subgroups, semidirect products, and the
nilpotent-kernel reduction tower for solvable groups.

Element are indices 0..order-1 with 0 the identity.  Tables supplied
directly are fully validated (Latin square + associativity, O(order^3)),
which is fine at the desk scale this module targets; groups synthesized
from permutation generators or element/multiplication pairs skip the
associativity scan since it holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .zarith import factorize

TABLE_SYNTHESIS_CAP = 5040  # largest order synthesized from generators


class FiniteGroup:
    __slots__ = ("order", "table", "inv", "perm_gens", "name", "_orders", "_subgroup_cache")

    def __init__(self, table: list[list[int]], *, name: str = "G",
                 perm_gens: list | None = None, _trusted: bool = False):
        n = len(table)
        if n == 0:
            raise ValueError("a group has at least the identity")
        for row in table:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise ValueError("table is not square over element indices")
        if any(table[0][j] != j for j in range(n)) or any(table[i][0] != i for i in range(n)):
            raise ValueError("index 0 must be a two-sided identity")
        for i in range(n):
            if sorted(table[i]) != list(range(n)):
                raise ValueError("table rows must be permutations (Latin square)")
            if sorted(table[j][i] for j in range(n)) != list(range(n)):
                raise ValueError("table columns must be permutations (Latin square)")
        if not _trusted:
            for a in range(n):
                ta = table[a]
                for b in range(n):
                    tab = ta[b]
                    tb = table[b]
                    for c in range(n):
                        if table[tab][c] != ta[tb[c]]:
                            raise ValueError("table is not associative")
        inv = [0] * n
        for a in range(n):
            inv[a] = table[a].index(0)
        self.order = n
        self.table = tuple(tuple(row) for row in table)
        self.inv = tuple(inv)
        self.perm_gens = perm_gens
        self.name = name
        self._orders: tuple | None = None
        self._subgroup_cache: dict = {}

    # -- basic structure ----------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inv[g]]

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1."""
        t = self.table
        return t[t[t[a][b]][self.inv[a]]][self.inv[b]]

    def element_order(self, a: int) -> int:
        if self._orders is None:
            orders = []
            for g in range(self.order):
                x, k = g, 1
                while x != 0:
                    x = self.table[x][g]
                    k += 1
                orders.append(k)
            self._orders = tuple(orders)
        return self._orders[a]

    def power(self, a: int, e: int) -> int:
        e %= self.element_order(a)
        x = 0
        for _ in range(e):
            x = self.table[x][a]
        return x

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    # -- subgroup machinery ---------------------------------------------------

    def closure(self, gens) -> tuple[int, ...]:
        """Sorted element tuple of the subgroup generated by gens."""
        seen = {0}
        frontier = [0]
        gens = [g for g in gens if g]
        for g in gens:
            if g not in seen:
                seen.add(g)
                frontier.append(g)
        table = self.table
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    for b in (table[a][g], table[g][a]):
                        if b not in seen:
                            seen.add(b)
                            nxt.append(b)
            frontier = nxt
        return tuple(sorted(seen))

    def subgroup(self, gens) -> "Subgroup":
        return Subgroup(self, self.closure(gens))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,))

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    def normal_closure(self, seed) -> tuple[int, ...]:
        elems = set(self.closure(seed))
        while True:
            extra = set()
            for g in range(self.order):
                for x in elems:
                    c = self.conj(g, x)
                    if c not in elems:
                        extra.add(c)
            if not extra:
                break
            elems = set(self.closure(elems | extra))
        return tuple(sorted(elems))

    def all_normal_subgroups(self) -> list["Subgroup"]:
        """Every normal subgroup, as joins of principal normal closures."""
        cached = self._subgroup_cache.get("normals")
        if cached is not None:
            return cached
        principals = {self.normal_closure([g]) for g in range(self.order)}
        principals.add((0,))
        found = set(principals)
        frontier = set(principals)
        while frontier:
            nxt = set()
            for a in frontier:
                for b in principals:
                    j = self.closure(set(a) | set(b))
                    if j not in found:
                        found.add(j)
                        nxt.add(j)
            frontier = nxt
        out = sorted((Subgroup(self, t) for t in found), key=lambda s: (len(s.elements), s.elements))
        self._subgroup_cache["normals"] = out
        return out

    def all_subgroups(self, max_gens: int = 3) -> list["Subgroup"]:
        """Subgroups generated by up to max_gens elements (all of them, at
        desk scale: a subgroup of a group of order <= 24 needs <= 3
        generators unless it is elementary abelian of rank 4)."""
        key = ("subgroups", max_gens)
        cached = self._subgroup_cache.get(key)
        if cached is not None:
            return cached
        found: set[tuple[int, ...]] = {(0,)}
        singles = []
        for g in range(1, self.order):
            c = self.closure([g])
            singles.append(c)
            found.add(c)
        pair_closure: dict[tuple[int, int], tuple[int, ...]] = {}
        if max_gens >= 2:
            for g, h in combinations(range(1, self.order), 2):
                if h in set(singles[g - 1]):
                    pair_closure[(g, h)] = singles[g - 1]
                    continue
                c = self.closure([g, h])
                pair_closure[(g, h)] = c
                found.add(c)
        if max_gens >= 3:
            for (g, h), base_t in pair_closure.items():
                base = set(base_t)
                for k in range(h + 1, self.order):
                    if k in base:
                        continue
                    found.add(self.closure(base | {k}))
        out = sorted((Subgroup(self, t) for t in found), key=lambda s: (len(s.elements), s.elements))
        self._subgroup_cache[key] = out
        return out

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table]}


@dataclass(frozen=True)
class Subgroup:
    """A subgroup handle: the parent group plus a sorted element tuple."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        es = set(self.elements)
        if 0 not in es:
            raise ValueError("subgroup must contain the identity")
        for a in self.elements:
            if self.parent.inv[a] not in es:
                raise ValueError("subgroup not closed under inverses")
            for b in self.elements:
                if self.parent.table[a][b] not in es:
                    raise ValueError("subgroup not closed under products")

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, g: int) -> bool:
        return g in set(self.elements)

    def is_normal(self) -> bool:
        es = set(self.elements)
        return all(
            self.parent.conj(g, x) in es
            for g in range(self.parent.order)
            for x in self.elements
        )

    def as_group(self, name: str = "H") -> tuple[FiniteGroup, list[int]]:
        """Materialize as a standalone group; returns (group, index->parent map)."""
        order_map = list(self.elements)  # identity 0 first since elements sorted
        pos = {g: i for i, g in enumerate(order_map)}
        table = [
            [pos[self.parent.table[a][b]] for b in order_map] for a in order_map
        ]
        return FiniteGroup(table, name=name, _trusted=True), order_map

    def conjugate_by(self, g: int) -> "Subgroup":
        return Subgroup(self.parent, tuple(sorted(self.parent.conj(g, x) for x in self.elements)))


class GroupHom:
    """A homomorphism given by its full image list; verified exhaustively."""

    __slots__ = ("domain", "codomain", "images")

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, images: list[int]):
        if len(images) != domain.order:
            raise ValueError("image list length must equal the domain order")
        if any(not (0 <= v < codomain.order) for v in images):
            raise ValueError("images out of range")
        if images[0] != 0:
            raise ValueError("identity must map to identity")
        for a in range(domain.order):
            for b in range(domain.order):
                if images[domain.table[a][b]] != codomain.table[images[a]][images[b]]:
                    raise ValueError("map is not a homomorphism")
        self.domain = domain
        self.codomain = codomain
        self.images = tuple(images)

    def __call__(self, g: int) -> int:
        return self.images[g]

    def kernel(self) -> Subgroup:
        return Subgroup(self.domain, tuple(g for g in range(self.domain.order) if self.images[g] == 0))

    def image(self) -> Subgroup:
        return Subgroup(self.codomain, tuple(sorted(set(self.images))))

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.codomain.order

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.domain.order

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self after inner."""
        if inner.codomain is not self.domain and inner.codomain != self.domain:
            raise ValueError("composition mismatch")
        return GroupHom(inner.domain, self.codomain, [self.images[v] for v in inner.images])

    def __repr__(self) -> str:
        return f"GroupHom({self.domain.name} -> {self.codomain.name})"

    def to_json(self) -> dict:
        return {"map": list(self.images)}


# -- constructions -------------------------------------------------------------


def from_elements(elements: list, mult, *, name: str = "G") -> FiniteGroup:
    """Synthesize a table group from abstract elements and a product function.

    The identity is detected and moved to index 0; associativity holds by
    construction, so only the cheap checks run.
    """
    if len(elements) > TABLE_SYNTHESIS_CAP:
        raise ValueError(f"order {len(elements)} exceeds the synthesis cap {TABLE_SYNTHESIS_CAP}")
    identity = None
    for e in elements:
        if all(mult(e, x) == x and mult(x, e) == x for x in elements):
            identity = e
            break
    if identity is None:
        raise ValueError("no identity element found")
    ordered = [identity] + [e for e in elements if e != identity]
    pos = {e: i for i, e in enumerate(ordered)}
    table = [[pos[mult(a, b)] for b in ordered] for a in ordered]
    return FiniteGroup(table, name=name, _trusted=True)


def _perm_compose(a: tuple, b: tuple) -> tuple:
    """(a then b applied second): (a*b)(x) = a(b(x))."""
    return tuple(a[b[x]] for x in range(len(a)))


def perm_from_cycles(cycles: list[list[int]], degree: int) -> tuple:
    img = list(range(degree))
    for cyc in cycles:
        for i, v in enumerate(cyc):
            img[v] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


def from_permutations(gen_cycles: list[list[list[int]]], *, degree: int | None = None,
                      name: str = "G") -> FiniteGroup:
    """Group generated by permutations, given as 0-based cycle lists."""
    points = [v for g in gen_cycles for cyc in g for v in cyc]
    deg = degree if degree is not None else (max(points) + 1 if points else 1)
    gens = [perm_from_cycles(g, deg) for g in gen_cycles]
    identity = tuple(range(deg))
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                for b in (_perm_compose(a, g), _perm_compose(g, a)):
                    if b not in elements:
                        if len(elements) >= TABLE_SYNTHESIS_CAP:
                            raise ValueError("generated group exceeds the synthesis cap")
                        elements.add(b)
                        nxt.append(b)
        frontier = nxt
    group = from_elements(sorted(elements), _perm_compose, name=name)
    group.perm_gens = gen_cycles
    return group


def cyclic_group(n: int) -> FiniteGroup:
    """C_n with the distinguished generator at index 1 (when n > 1)."""
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, name=f"C{n}", _trusted=True)


def symmetric_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n >= 1")
    if n == 1:
        return cyclic_group(1)
    return from_permutations([[[0, 1]], [list(range(n))]], degree=n, name=f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    if n < 3:
        return cyclic_group(1)
    gens: list[list[list[int]]] = [[[0, 1, 2]]]
    if n > 3:
        # an n-cycle is even iff n is odd; otherwise use the (n-1)-cycle
        gens.append([list(range(n))] if n % 2 else [list(range(1, n))])
    return from_permutations(gens, degree=n, name=f"A{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """D_n of order 2n (symmetries of the n-gon), n >= 3.

    D_2 is the Klein four group and has no faithful action on 2 points;
    build it as a direct product instead.
    """
    if n < 3:
        raise ValueError("dihedral_group needs n >= 3")
    rot = [list(range(n))]
    refl = [[i, n - i] for i in range(1, (n + 1) // 2) if i != n - i]
    return from_permutations([rot, refl], degree=n, name=f"D{n}")


def dicyclic_group(n: int) -> FiniteGroup:
    """Dic_n of order 4n: <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>.

    Dic_2 is the quaternion group Q8, Dic_4 is Q16.
    """
    if n < 1:
        raise ValueError("n >= 1")
    elements = [(i, e) for e in (0, 1) for i in range(2 * n)]

    def mult(x, y):
        i, e = x
        j, d = y
        if e == 0:
            return ((i + j) % (2 * n), d)
        # a^i b a^j = a^(i-j) b ; b^2 = a^n
        if d == 0:
            return ((i - j) % (2 * n), 1)
        return ((i - j + n) % (2 * n), 0)

    return from_elements(elements, mult, name=f"Dic{n}")


def direct_product(A: FiniteGroup, B: FiniteGroup, *, name: str | None = None) -> FiniteGroup:
    elements = [(a, b) for a in range(A.order) for b in range(B.order)]

    def mult(x, y):
        return (A.table[x[0]][y[0]], B.table[x[1]][y[1]])

    return from_elements(elements, mult, name=name or f"{A.name}x{B.name}")


def automorphism_images(N: FiniteGroup, perm: tuple) -> bool:
    """Is the index permutation an automorphism of N?"""
    if perm[0] != 0 or sorted(perm) != list(range(N.order)):
        return False
    return all(
        perm[N.table[a][b]] == N.table[perm[a]][perm[b]]
        for a in range(N.order)
        for b in range(N.order)
    )


def semidirect_product(
    N: FiniteGroup, H: FiniteGroup, action: list[tuple]
) -> tuple[FiniteGroup, GroupHom, GroupHom]:
    """N x| H for an action H -> Aut(N) given as one N-permutation per H element.

    Multiplication: (n, h)(n', h') = (n * action[h](n'), h h').  Returns the
    product with the projection pr onto H and the section sec: h -> (1, h),
    so pr after sec is the identity of H.
    """
    if len(action) != H.order:
        raise ValueError("action must assign a permutation to every H element")
    for perm in action:
        if not automorphism_images(N, tuple(perm)):
            raise ValueError("action values must be automorphisms of N")
    if tuple(action[0]) != tuple(range(N.order)):
        raise ValueError("identity of H must act trivially")
    for h1 in range(H.order):
        for h2 in range(H.order):
            composed = tuple(action[h1][action[h2][x]] for x in range(N.order))
            if composed != tuple(action[H.table[h1][h2]]):
                raise ValueError("action is not a homomorphism into Aut(N)")

    elements = [(n, h) for n in range(N.order) for h in range(H.order)]

    def mult(x, y):
        n, h = x
        np_, hp = y
        return (N.table[n][action[h][np_]], H.table[h][hp])

    G = from_elements(elements, mult, name=f"{N.name}:{H.name}")
    # element (n, h) lands at index n*|H| + h because from_elements keeps
    # the identity-first sorted order of the tuples
    pos = {e: i for i, e in enumerate([(0, 0)] + [e for e in sorted(elements) if e != (0, 0)])}
    pr = GroupHom(G, H, [_decode_pair(i, H.order)[1] for i in range(G.order)])
    sec = GroupHom(H, G, [pos[(0, h)] for h in range(H.order)])
    return G, pr, sec


def _decode_pair(idx: int, h_order: int) -> tuple[int, int]:
    return idx // h_order, idx % h_order


def conjugation_action(G: FiniteGroup, N: Subgroup, H: Subgroup) -> list[tuple]:
    """The action of H on normal N by conjugation inside their common parent,
    expressed on N's local indices."""
    n_map = list(N.elements)
    n_pos = {g: i for i, g in enumerate(n_map)}
    action = []
    for h in H.elements:
        perm = tuple(n_pos[G.conj(h, x)] for x in n_map)
        action.append(perm)
    return action


# -- structural predicates ------------------------------------------------------


def _commutator_closure(G: FiniteGroup, A: tuple[int, ...], B: tuple[int, ...]) -> tuple[int, ...]:
    """[A, B]: subgroup generated by commutators of the two element sets."""
    comms = {G.commutator(a, b) for a in A for b in B}
    return G.closure(comms)


def derived_series(G: FiniteGroup) -> list[tuple[int, ...]]:
    series = [tuple(range(G.order))]
    while True:
        nxt = _commutator_closure(G, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt == (0,):
            break
    return series


def lower_central_series(G: FiniteGroup) -> list[tuple[int, ...]]:
    series = [tuple(range(G.order))]
    while True:
        nxt = _commutator_closure(G, tuple(range(G.order)), series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt == (0,):
            break
    return series


def is_solvable(G: FiniteGroup) -> bool:
    """Derived series reaches the trivial subgroup."""
    return derived_series(G)[-1] == (0,)


def is_nilpotent(G: FiniteGroup) -> bool:
    """Lower central series reaches the trivial subgroup."""
    return lower_central_series(G)[-1] == (0,)


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown deterministically from p-elements."""
    target = 1
    n = G.order
    while n % p == 0:
        n //= p
        target *= p
    elems = {0}
    while len(elems) < target:
        grown = False
        for g in range(1, G.order):
            if g in elems:
                continue
            o = G.element_order(g)
            fac = factorize(o)
            if len(fac) != 1 or fac[0][0] != p:
                continue
            # g must normalize the current p-subgroup for <P, g> to stay a p-group
            if all(G.conj(g, x) in elems for x in elems):
                new = set(G.closure(elems | {g}))
                if len(new) > len(elems) and target % len(new) == 0:
                    elems = new
                    grown = True
                    break
        if not grown:
            raise AssertionError("Sylow growth stalled; table is not a group?")
    return Subgroup(G, tuple(sorted(elems)))


def p_core(G: FiniteGroup, p: int) -> Subgroup:
    """O_p(G): the intersection of all conjugates of a Sylow p-subgroup."""
    if G.order % p != 0:
        return G.trivial_subgroup()
    P = sylow_subgroup(G, p)
    core = set(P.elements)
    for g in range(G.order):
        core &= {G.conj(g, x) for x in P.elements}
        if core == {0}:
            break
    return Subgroup(G, tuple(sorted(core)))


def fitting_subgroup(G: FiniteGroup) -> Subgroup:
    """The largest nilpotent normal subgroup: the product of the p-cores
    over the primes dividing the order."""
    elems = {0}
    for p, _ in factorize(G.order) if G.order > 1 else ():
        elems |= set(p_core(G, p).elements)
    sub = Subgroup(G, G.closure(elems))
    return sub


@dataclass(frozen=True)
class ReductionStep:
    """One step of the solvable-group reduction: a surjection
    phi : N x| G' -> G with N the Fitting subgroup and G' a proper subgroup
    (or N = G, G' = 1 when G is already nilpotent)."""

    group: FiniteGroup
    N: Subgroup
    Gp: Subgroup
    action: list[tuple]
    semidirect: FiniteGroup
    pr: GroupHom
    phi: GroupHom
    note: str

    def kernel_order(self) -> int:
        return self.phi.kernel().order


def shafarevich_step(G: FiniteGroup) -> ReductionStep:
    """Split a nontrivial solvable G as a quotient of Fitting x| G'.

    G' is the minimal-order proper subgroup with N*G' = G (ties broken by
    the lexicographically least element set); the action is conjugation and
    phi(n, g') = n*g'.  Surjectivity is re-verified on the result.
    """
    if G.order == 1:
        raise ValueError("the trivial group has no reduction step")
    if not is_solvable(G):
        raise ValueError("reduction step requires a solvable group")
    if is_nilpotent(G):
        N = G.full_subgroup()
        Gp = G.trivial_subgroup()
        note = "nilpotent: N = G, G' = 1"
    else:
        N = fitting_subgroup(G)
        n_set = set(N.elements)
        best: Subgroup | None = None
        for H in G.all_subgroups(max_gens=3):
            if H.order == G.order:
                continue
            if best is not None and (H.order, H.elements) >= (best.order, best.elements):
                continue
            prods = {G.table[a][b] for a in N.elements for b in H.elements}
            if len(prods) == G.order:
                best = H
        if best is None:
            raise AssertionError("no proper complement-like subgroup found")
        Gp = best
        note = "G' = minimal-order subgroup with N*G' = G (lex tie-break)"
    Ng, n_map = N.as_group("N")
    Hg, h_map = Gp.as_group("G'")
    action = conjugation_action(G, N, Gp)
    semi, pr, sec = semidirect_product(Ng, Hg, action)
    images = []
    for idx in range(semi.order):
        n_loc, h_loc = _decode_pair(idx, Hg.order)
        images.append(G.table[n_map[n_loc]][h_map[h_loc]])
    phi = GroupHom(semi, G, images)
    if not phi.is_surjective():
        raise AssertionError("reduction surjection failed verification")
    return ReductionStep(G, N, Gp, action, semi, pr, phi, note)


def solvable_tower(G: FiniteGroup) -> list[ReductionStep]:
    """Iterate the reduction step on the successive G' until trivial."""
    if not is_solvable(G):
        raise ValueError("tower requires a solvable group")
    steps = []
    current = G
    while current.order > 1:
        step = shafarevich_step(current)
        steps.append(step)
        current = step.Gp.as_group("G'")[0]
    return steps


# -- isomorphism search (test oracle grade) --------------------------------------


def generating_sequence(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    cl = {0}
    for g in sorted(range(G.order), key=lambda x: (-G.element_order(x), x)):
        if g not in cl:
            gens.append(g)
            cl = set(G.closure(gens))
            if len(cl) == G.order:
                break
    return gens


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> list[int] | None:
    """Backtracking on generator images; returns the image list or None."""
    if G.order != H.order:
        return None
    if sorted(G.element_order(g) for g in range(G.order)) != sorted(
        H.element_order(h) for h in range(H.order)
    ):
        return None
    gens = generating_sequence(G)
    candidates = [
        [h for h in range(H.order) if H.element_order(h) == G.element_order(g)]
        for g in gens
    ]

    def build(images: list[int]) -> list[int] | None:
        # grow the hom from generator images by BFS closure; None if inconsistent
        phi = {0: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g, hg in zip(gens, images):
                    b = G.table[a][g]
                    hb = H.table[phi[a]][hg]
                    if b in phi:
                        if phi[b] != hb:
                            return None
                    else:
                        phi[b] = hb
                        nxt.append(b)
            frontier = nxt
        if len(phi) != G.order or len(set(phi.values())) != G.order:
            return None
        out = [phi[g] for g in range(G.order)]
        for a in range(G.order):
            for b in range(G.order):
                if out[G.table[a][b]] != H.table[out[a]][out[b]]:
                    return None
        return out

    def backtrack(i: int, chosen: list[int]) -> list[int] | None:
        if i == len(gens):
            return build(chosen)
        for h in candidates[i]:
            res = backtrack(i + 1, chosen + [h])
            if res is not None:
                return res
        return None

    return backtrack(0, [])


def group_from_json(data: dict) -> FiniteGroup:
    if "table" in data:
        return FiniteGroup([list(r) for r in data["table"]], name=data.get("name", "G"))
    if "perm_gens" in data:
        return from_permutations(data["perm_gens"], name=data.get("name", "G"))
    raise ValueError("group JSON needs 'table' or 'perm_gens'")
