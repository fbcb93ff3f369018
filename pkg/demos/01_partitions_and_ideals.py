"""Tour of the combinatorial layer: partitions and invariant ideals.

Everything downstream (Ext, regularity, vanishing) reduces to bookkeeping
with partitions, so this demo starts with the lattice operations and the
two ideal families used throughout.
"""

from detthick import (
    Partition,
    enumerate_partitions,
    intersect,
    leq,
    member,
    normalize,
    power_gens,
    saturate,
    sup,
    succ_gens,
    symbolic_gens,
    yset_gens,
)

x = Partition([4, 4, 3])
print(f"x = ({x}), size {x.size}, conjugate ({x.conjugate()})")
print(f"x truncated to width 2: ({x.truncate(2)})")

y = Partition([5, 2, 2, 1])
print(f"\nleq(x, y) = {leq(x, y)}, sup = ({sup(x, y)})")

print("\npartitions inside a 2 x 3 box, enumeration order:")
print("  " + ", ".join(f"({p})" for p in enumerate_partitions(2, 3)))

# the d-th power of the p x p minors, cut down to n rows
n = 3
X = power_gens(2, 3, n)
print(f"\ngenerators of the cube of the 2x2 minors in {n} rows:")
for g in X.sorted_gens():
    print(f"  ({g})")

Y = symbolic_gens(2, 3, n)
print("generators of the matching symbolic cube:")
for g in Y.sorted_gens():
    print(f"  ({g})")

print(f"\nsymbolic contains power: {all(member(Y, g) for g in X.gens)}")
print(f"saturating the power by the 1x1 minors gives the symbolic cube: "
      f"{saturate(X, 1).gens == Y.gens}")

# successor ideals: everything strictly bigger below a level
z, l = Partition([4, 4, 4, 3, 1]), 2
S = succ_gens(z, l, 6)
print(f"\nsuccessors of ({z}) past level {l} in six rows:")
for g in S.sorted_gens():
    print(f"  ({g})")
YS = yset_gens(z, l, 6)
print("the same ideal as an intersection with a rectangle ideal:")
print(f"  ({z}) meet {{" + ", ".join(f"({g})" for g in YS.sorted_gens()) + "}")
P = normalize(6, [z])
print(f"  identity holds: {intersect(P, YS).gens == S.gens}")
