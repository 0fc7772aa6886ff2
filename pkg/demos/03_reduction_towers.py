"""Fitting subgroups and the reduction tower of a solvable group.

Run with:  python demos/03_reduction_towers.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from skewgalois import fitting_subgroup, solvable_tower
from skewgalois.groups import dicyclic_group, symmetric_group

for G in (symmetric_group(3), symmetric_group(4), dicyclic_group(3)):
    print(f"\n{G.name} (order {G.order})")
    F = fitting_subgroup(G)
    print("  Fitting subgroup:", list(F.elements), f"(order {F.order})")
    for i, step in enumerate(solvable_tower(G), start=1):
        print(
            f"  step {i}: |G| = {step.group.order:>2}  "
            f"N order {step.N.order}, G' order {step.Gp.order}, "
            f"phi kernel order {step.kernel_order()}"
        )
        print("          ", step.note)
print("\nEvery step gives a surjection from the semidirect product N x| G'")
print("onto the group, with N nilpotent, so induction peels the group apart.")
