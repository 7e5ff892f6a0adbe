"""Deciding projective order of rho(sigma) level by level."""

import time

from monodromy.orderlab import masbaum_scan, projective_order, sigma_matrix

start = time.perf_counter()
finite = []
for l in range(1, 31):
    v = projective_order(sigma_matrix(l))
    if v.is_finite:
        finite.append(l)
        print(f"l={l:2d}  finite, order {v.order}")
    else:
        w = v.witness
        print(f"l={l:2d}  infinite  (conjugate k={w['galois_k']} of beta: {w['reason']})")
print("finite levels:", finite, f"in {time.perf_counter() - start:.1f}s")

# the cheaper trace-only scan agrees
print("masbaum at l=10:", masbaum_scan(10)["kind"], "| at l=8:", masbaum_scan(8)["kind"])
