"""Quaternion arithmetic, levels of completions, and feasibility of the
level-4 hypothesis.

Run with:  python demos/05_quaternion_levels.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from skewgalois import Quaternion, is_division_ring, level_local, theorem13_feasible
from skewgalois.quat import QUAT_I, QUAT_J, QUAT_K

print("Hamilton relations: i*j =", (QUAT_I * QUAT_J) == QUAT_K, "; (1+i)(1-i) =",
      Quaternion.of(1, 1) * Quaternion.of(1, -1))

print("\nLevels of completions of Q (least number of squares summing to -1):")
for place in (5, 13, 3, 7, 2, "REAL"):
    res = level_local(place)
    print(f"  place {place!r:>6}: level {res.level}")
r2 = level_local(2)
print("  the 2-adic level 4 is re-derived: three squares never sum to -1 mod 16,")
print("  and the four-square witness", r2.witness["four_squares"]["vector"], "lifts.")

print("\nDoes some completion have level at least 4?")
for K in ("Q", "Q(sqrt:2)", "Q(sqrt:-1)", "Q(sqrt:-2)", "Q(sqrt:-7)"):
    f = theorem13_feasible(K)
    d = is_division_ring(K)
    print(f"  {K:>12}: feasible={f.feasible!s:>5} (witness {f.witness_place}), "
          f"quaternions form a division ring: {d.feasible}")
print("\nOver a base where -1 is already a sum of two squares the quaternions")
print("split, and no completion can reach level 4; both tests see the same")
print("local data (real places and the places over 2).")
