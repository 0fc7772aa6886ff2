"""Tour of the twisted polynomial ring L[T, tau] over F_4.

Run with:  python demos/01_twisted_polynomials.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from skewgalois import (
    OreRing,
    anti_involution,
    frobenius,
    make_field,
    ore_left_lcm,
    ore_mul,
    ore_right_divmod,
    ore_right_gcd,
    ore_witness,
)

F4 = make_field(2, 2)
w = F4.gen()  # a generator of F_4 with w^2 + w + 1 = 0
R = OreRing(F4, frobenius(F4, 1))
T = R.T()

print("The ring F_4[T, frob] multiplies by the rule T a = frob(a) T.")
print("  T * w           =", ore_mul(T, R.scalar(w)).to_json()["coeffs"], "(that is, w^2 T)")
print("  (wT) * (wT)     =", ore_mul(R.poly([0, w]), R.poly([0, w])).to_json()["coeffs"], "(= T^2)")

f = R.poly([1, 1])       # T + 1
g = R.poly([w, 1])       # T + w
fg = ore_mul(f, g)
print("  (T+1)(T+w)      =", fg.to_json()["coeffs"], "(= T^2 + wT + w)")
print("  (T+w)(T+1)      =", ore_mul(g, f).to_json()["coeffs"], "(noncommutative!)")

q, r = ore_right_divmod(fg, g)
print("Right division recovers the factor: quotient", q.to_json()["coeffs"], "remainder", r.to_json()["coeffs"])

print("Right gcd and left lcm satisfy the degree relation:")
a, b = R.poly([w, 1, 1]), R.poly([1, 0, 1])
d = ore_right_gcd(a, b)
m = ore_left_lcm(a, b)
print("  deg gcd =", d.degree, " deg lcm =", m.degree, " sum of degrees =", a.degree + b.degree)

print("Any two nonzero elements have a common right multiple x r = y s != 0:")
r_, s_ = ore_witness(T, R.scalar(w))
print("  x = T, y = w:  r =", r_.to_json()["coeffs"], " s =", s_.to_json()["coeffs"])
print("  x r =", ore_mul(T, r_).to_json()["coeffs"], "= y s =", ore_mul(R.scalar(w), s_).to_json()["coeffs"])

h = ore_mul(f, g)
print("The coefficientwise anti-isomorphism reverses products:")
print("  phi(fg) == phi(g) phi(f):", anti_involution(h) == ore_mul(anti_involution(g), anti_involution(f)))
