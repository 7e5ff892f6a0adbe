"""Block dimensions by fusion path counting, checked against the exact Verlinde sum."""

from monodromy.fusion import BlockSpec, block_dimension, factorization_rhs, fusion_product, verlinde_dimension

print("1 x 1 at l=1:", sorted(w.m for w in fusion_product(1, 1, 1)))
print("1 x 1 at l=3:", sorted(w.m for w in fusion_product(1, 1, 3)))

for l in range(1, 7):
    four = BlockSpec.of(l, 0, 1, 1, 1, 1)
    torus = BlockSpec.of(l, 1, 0)
    print(f"l={l}: four varpi points -> {block_dimension(four)} (Verlinde {verlinde_dimension(four)}), "
          f"torus -> {block_dimension(torus)}")

# cutting a handle: genus-2 count equals a sum of genus-1 counts
spec = BlockSpec.of(3, 2, 1, 1)
print("genus 2 with two varpi:", block_dimension(spec), "=", factorization_rhs(spec))
