"""The finite projective images and the GL closure at the exceptional levels."""

from monodromy.orderlab import braid_generators, classify_group, group_closure, m_generators

for l in (1, 2, 4, 8):
    g = classify_group(m_generators(l))
    gl = group_closure(braid_generators(l), projective=False)
    print(f"l={l}: image of the four-point loops {g} (order {g.order}), "
          f"<g1, g2> in GL(2) has {len(gl)} elements")
    print("   element orders:", g.details["element_orders"])
