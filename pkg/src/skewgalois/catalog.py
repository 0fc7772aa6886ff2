"""Fixture catalog of finite groups of order <= 24, used by the exhaustive
desk-scale tests (Fitting subgroups, reduction towers, embedding-problem
enumeration).

Every group is synthesized from an explicit faithful model (cycle lists,
normal forms, or matrices), so the multiplication tables are correct by
construction; the catalog covers all isomorphism classes up to order 12
and order 18, and a broad spread at 16, 20, 24.
"""

from __future__ import annotations

from functools import lru_cache

from .groups import (
    FiniteGroup,
    alternating_group,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    direct_product,
    from_elements,
    semidirect_product,
    symmetric_group,
)


def _cyclic_aut_action(n: int, mult: int, h_order: int) -> list[tuple]:
    """Action of C_{h_order} on C_n where the generator acts by x -> mult*x."""
    action = []
    cur = 1
    for _ in range(h_order):
        action.append(tuple((cur * x) % n for x in range(n)))
        cur = (cur * mult) % n
    if action[0] != tuple(range(n)):
        raise ValueError("action does not close up")
    return action


def _semidirect_cyclic(n: int, h: int, mult: int, name: str) -> FiniteGroup:
    """C_n x| C_h with the generator of C_h acting by multiplication."""
    if pow(mult, h, n) != 1 % n:
        raise ValueError("multiplier order does not divide h")
    G, _, _ = semidirect_product(
        cyclic_group(n), cyclic_group(h), _cyclic_aut_action(n, mult, h)
    )
    G.name = name
    return G


def _sl23() -> FiniteGroup:
    """SL(2,3): 2x2 determinant-1 matrices over F_3."""
    els = []
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a * d - b * c) % 3 == 1:
                        els.append((a, b, c, d))

    def mult(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (
            (a * e + b * g) % 3,
            (a * f + b * h) % 3,
            (c * e + d * g) % 3,
            (c * f + d * h) % 3,
        )

    return from_elements(els, mult, name="SL(2,3)")


def _generalized_dihedral_3x3() -> FiniteGroup:
    """(C3 x C3) x| C2 with the inverting action, order 18."""
    N = direct_product(cyclic_group(3), cyclic_group(3))
    invert = []
    for idx in range(9):
        a, b = idx // 3, idx % 3
        invert.append(((-a) % 3) * 3 + ((-b) % 3))
    action = [tuple(range(9)), tuple(invert)]
    G, _, _ = semidirect_product(N, cyclic_group(2), action)
    G.name = "D(C3xC3)"
    return G


@lru_cache(maxsize=1)
def catalog() -> list[tuple[str, FiniteGroup]]:
    """The bundled groups of order <= 24, as (name, group) pairs."""
    groups: list[tuple[str, FiniteGroup]] = []

    def add(name: str, G: FiniteGroup):
        G.name = name
        groups.append((name, G))

    for n in range(1, 25):
        add(f"C{n}", cyclic_group(n))

    C2, C3, C4 = cyclic_group(2), cyclic_group(3), cyclic_group(4)
    add("C2xC2", direct_product(C2, C2))
    add("C2xC4", direct_product(C2, C4))
    add("C2xC2xC2", direct_product(C2, direct_product(C2, C2)))
    add("C3xC3", direct_product(C3, C3))
    add("C2xC6", direct_product(C2, cyclic_group(6)))
    add("C2xC8", direct_product(C2, cyclic_group(8)))
    add("C4xC4", direct_product(C4, C4))
    add("C2xC2xC4", direct_product(C2, direct_product(C2, C4)))
    add("C2xC2xC2xC2", direct_product(C2, direct_product(C2, direct_product(C2, C2))))
    add("C3xC6", direct_product(C3, cyclic_group(6)))
    add("C2xC10", direct_product(C2, cyclic_group(10)))
    add("C2xC12", direct_product(C2, cyclic_group(12)))
    add("C2xC2xC6", direct_product(C2, direct_product(C2, cyclic_group(6))))

    add("S3", symmetric_group(3))
    for n in range(4, 13):
        add(f"D{n}", dihedral_group(n))
    add("A4", alternating_group(4))
    add("S4", symmetric_group(4))

    add("Q8", dicyclic_group(2))
    add("Dic3", dicyclic_group(3))
    add("Q16", dicyclic_group(4))
    add("Dic5", dicyclic_group(5))
    add("Dic6", dicyclic_group(6))

    add("SD16", _semidirect_cyclic(8, 2, 3, "SD16"))
    add("M16", _semidirect_cyclic(8, 2, 5, "M16"))
    add("F20", _semidirect_cyclic(5, 4, 2, "F20"))
    add("F21", _semidirect_cyclic(7, 3, 2, "F21"))
    add("C3:C8", _semidirect_cyclic(3, 8, 2, "C3:C8"))

    add("C3xS3", direct_product(C3, symmetric_group(3)))
    add("D(C3xC3)", _generalized_dihedral_3x3())

    add("SL(2,3)", _sl23())
    add("C2xA4", direct_product(C2, alternating_group(4)))
    add("C2xD4", direct_product(C2, dihedral_group(4)))
    add("C2xQ8", direct_product(C2, dicyclic_group(2)))
    add("C3xD4", direct_product(C3, dihedral_group(4)))
    add("C3xQ8", direct_product(C3, dicyclic_group(2)))
    add("C2xD6", direct_product(C2, dihedral_group(6)))
    add("C4xS3", direct_product(C4, symmetric_group(3)))
    add("C2xC2xS3", direct_product(C2, direct_product(C2, symmetric_group(3))))

    assert all(G.order <= 24 for _, G in groups)
    return groups


def catalog_upto(max_order: int) -> list[tuple[str, FiniteGroup]]:
    return [(name, G) for name, G in catalog() if G.order <= max_order]
