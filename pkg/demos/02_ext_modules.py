"""Ext of a thickened determinantal variety, fully decomposed.

The quotient by the 7th power of the 2x2 minors of a generic 3x3 matrix is
filtered by factor modules labeled (z, l); every Ext component is a product
of two Weyl dimensions attached to a dominant weight.  This walks the whole
pipeline for the top cohomological index and splits the map induced by the
inclusion of consecutive powers.
"""

from detthick import ext_graded, ext_map_parts, power_gens, zset_general

m = n = 3
X7 = power_gens(2, 7, n)
X6 = power_gens(2, 6, n)

pairs = zset_general(X7).sorted_pairs()
print(f"factor labels of the 7th power: {len(pairs)}")
level0 = [p for p in pairs if p.l == 0]
print("level-0 labels: " + " ".join(f"({p.z})" for p in level0))

res = ext_graded(X7, 9, m, n)
print(f"\nExt^9, default window {res.window}:")
for deg, dim in res.table:
    print(f"  degree {deg}: dimension {dim}")

print("\ncomponents in the most negative degree:")
for comp in res.components:
    if comp.degree == res.window[0]:
        print(
            f"  z=({comp.pair.z}) weight {comp.lam} -> dim {comp.dim}"
        )
total = sum(c.dim for c in res.components if c.degree == res.window[0])
print(f"  total: {total}")

# the induced map Ext^9(S/I^6) -> Ext^9(S/I^7) splits along the labels
parts = ext_map_parts(X7, X6, 9, m, n)
print("\nsplitting of the map induced by I^7 inside I^6:")
print("  kernel labels:   " + " ".join(f"({p.z};{p.l})" for p in parts.kernel.pairs))
print("  image labels:    " + " ".join(f"({p.z};{p.l})" for p in parts.image.pairs))
print(f"  image dimensions by degree: {parts.image.graded()}")
