"""Exact arithmetic in Q(zeta_N): construction, Galois action, minimal polynomials, signs."""

from monodromy.cyclo import (cyc_make, galois_conjugates, minimal_polynomial, numeric_interval, sign_decide)

# zeta_12 + zeta_12^-1 is sqrt(3); its conjugates are +-sqrt(3)
r3 = cyc_make(12, 1) + cyc_make(12, -1)
print("r3 * r3 =", r3 * r3)
for k, c in galois_conjugates(r3):
    print(f"  sigma_{k}(r3) ~ {complex(c).real:+.6f}")

# minimal polynomial of 2cos(2pi/5)
print("minpoly:", minimal_polynomial(cyc_make(5, 1) + cyc_make(5, -1)))

# certified comparison: sqrt(3) < 2, and 2cos(2pi/97) sits just under 2
print("sign(r3 - 2):", sign_decide(r3, 2))
near = cyc_make(97, 1) + cyc_make(97, -1)
print("sign(2cos(2pi/97) - 2):", sign_decide(near, 2))

box = numeric_interval(near, 128)
print("128-bit box width:", float(box.width))
