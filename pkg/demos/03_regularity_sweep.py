"""Castelnuovo-Mumford regularity of powers, symbolic powers, saturations.

For fixed minor size p the regularity of the d-th power is eventually an
explicit linear function of d, while small symbolic powers of wide minors
grow strictly faster than the linear-resolution bound.  The sweep prints
both regimes and flags which powers have linear resolutions.
"""

from detthick import has_linear_resolution, reg_power_family

n = 4
print(f"matrix size {n} x {n}")
for p in (2, 3):
    print(f"\nregularity for minors of size {p}:")
    header = f"  {'d':>2} {'power':>7} {'satpower':>9} {'symbolic':>9} {'linear?':>8}"
    print(header)
    for d in range(1, 8):
        a = reg_power_family(p, d, n, n, "power")
        b = reg_power_family(p, d, n, n, "satpower")
        c = reg_power_family(p, d, n, n, "symbolic")
        lin = "yes" if has_linear_resolution(p, d, n) else "no"
        print(f"  {d:>2} {a:>7} {b:>9} {c:>9} {lin:>8}")

print("\nstable regime: reg of the d-th power of 2x2 minors minus 2d")
for d in range(n - 1, n + 5):
    r = reg_power_family(2, d, n, n, "power")
    print(f"  d={d}: reg - 2d = {r - 2 * d}")
