"""S and T at level l, their relations, the closure certificate and unitarity."""

import math

from monodromy.modular import build_modular, modular_image_finite, modular_relations_check, unitarity_defect

for l in (1, 2, 3):
    rep = build_modular(l)
    rel = modular_relations_check(rep)
    img = modular_image_finite(rep)
    bound = unitarity_defect(rep)
    print(f"l={l}: rank {rep.rank}, S^2 ~ (ST)^3: {rel['s_squared_vs_st_cubed']}, "
          f"projective image {img.order}, certificate {img.certificate_ok}, "
          f"|SS* - 1| <= 2^{math.log2(bound):.0f}")
