"""Ext modules of invariant thickenings, by direct weight enumeration.

Each factor label (z, l) contributes to Ext in the cohomological degrees
cut out by chains 0 <= s <= t_1 <= ... <= t_{n-l} <= l; for one chain the
contribution is a sum of irreducibles indexed by the dominant weights in
an explicit box-like region.  Dimensions come from two Weyl products and
the internal degree of a weight is its total size, always negative here.
Degree windows keep the enumeration finite: a single chain can contribute
in infinitely many degrees.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .ideals import IdealSpec, subideal
from .partitions import Partition
from .schur import GradedTable, Weight, schur_dim, weight_expand
from .zset import ZPair, ZSet, zset_general


@dataclass(frozen=True)
class IndexTuple:
    """One chain (s, t_1 <= ... <= t_{n-l}) with its cohomological degree j."""

    s: int
    t: tuple[int, ...]
    j: int


@dataclass(frozen=True)
class ExtComponent:
    """One irreducible summand of an Ext module."""

    pair: ZPair
    s: int
    t: tuple[int, ...]
    lam: Weight
    lam_expanded: Weight
    degree: int
    dim: int

    def to_json(self) -> dict:
        return {
            "z": self.pair.z.to_json(),
            "l": self.pair.l,
            "s": self.s,
            "t": list(self.t),
            "lambda": list(self.lam),
            "lambda_expanded": list(self.lam_expanded),
            "degree": self.degree,
            "dim": str(self.dim),
        }

    def sort_key(self) -> tuple:
        return (self.degree, self.pair.sort_key(), self.s, self.t, self.lam)


@dataclass(frozen=True)
class ExtResult:
    """Components of one Ext module inside a degree window, plus totals."""

    j: int
    m: int
    n: int
    window: Optional[tuple[int, int]]
    components: tuple[ExtComponent, ...]
    table: tuple[tuple[int, int], ...]

    def graded(self) -> GradedTable:
        return dict(self.table)


def _check_weak_hypothesis(z: Partition, l: int, n: int) -> None:
    if z.nparts > n:
        raise ValueError(f"{z} has more than {n} parts")
    if not 0 <= l <= n:
        raise ValueError(f"need 0 <= l <= {n}, got l={l}")
    if any(z.part(i) != z.part(1) for i in range(2, l + 1)):
        raise ValueError(f"need z_1 = ... = z_{l} in {z}")


def index_tuples(z: Partition, l: int, m: int, n: int) -> list[IndexTuple]:
    """All chains for (z, l), each with j = mn - l^2 - s(m-n) - 2 sum(t)."""
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got m={m}, n={n}")
    _check_weak_hypothesis(z, l, n)
    out = []
    for chain in itertools.combinations_with_replacement(range(l + 1), n - l + 1):
        s, t = chain[0], chain[1:]
        j = m * n - l * l - s * (m - n) - 2 * sum(t)
        out.append(IndexTuple(s, t, j))
    return out


def _zpart(z: Partition, i: int) -> int:
    # z_i with the reading z_0 := z_1 (only row 0 is ever asked for)
    return z.part(max(i, 1))


def minimal_weight(
    z: Partition, l: int, t: Sequence[int], s: int, m: int, n: int
) -> Optional[Weight]:
    """The size-minimal weight for one chain, or None when the chain is infeasible.

    Feasible means: the chain shape 0 <= s <= t_1 <= ... <= t_{n-l} <= l holds,
    s >= t_1 - z_n, consecutive t-differences are bounded by the mirrored
    z-differences, and l - t_{n-l} <= z_l - z_{l+1}.
    """
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got m={m}, n={n}")
    if not 0 <= l <= n - 1:
        raise ValueError(f"need 0 <= l <= {n - 1}, got l={l}")
    _check_weak_hypothesis(z, l, n)
    t = tuple(t)
    k = n - l
    if len(t) != k:
        raise ValueError(f"chain {t} should have {k} entries")
    if not (0 <= s <= t[0] and all(t[i] <= t[i + 1] for i in range(k - 1)) and t[-1] <= l):
        return None
    if s < t[0] - z.part(n):
        return None
    for i in range(1, k):
        if t[i] - t[i - 1] > z.part(n - i) - z.part(n + 1 - i):
            return None
    if l - t[-1] > _zpart(z, l) - z.part(l + 1):
        return None

    lam = [0] * n
    lam[0:s] = [s - n] * s
    lam[s : t[0] + 1] = [t[0] - z.part(n) - m] * (t[0] + 1 - s)
    for i in range(1, k):
        lo, hi = t[i - 1] + i, t[i] + i + 1
        lam[lo:hi] = [t[i] - z.part(n - i) - m] * (hi - lo)
    tail_start = t[-1] + k
    lam[tail_start:n] = [l - _zpart(z, l) - m] * (n - tail_start)
    w = tuple(lam)
    assert all(w[i] >= w[i + 1] for i in range(n - 1)), (z, l, t, s, w)
    return w


def enumerate_weights(
    z: Partition,
    l: int,
    t: Sequence[int],
    s: int,
    m: int,
    n: int,
    lo: int,
    hi: int,
) -> list[Weight]:
    """All contributing dominant weights for one chain with lo <= total <= hi.

    The defining region fixes the entries at positions t_i + i, bounds the
    last entry below by l - z_l - m, and imposes entry_s >= s - n and
    entry_{s+1} <= s - m.  Contradictory constraints give an empty list.
    """
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got m={m}, n={n}")
    if not 0 <= l <= n:
        raise ValueError(f"need 0 <= l <= {n}, got l={l}")
    _check_weak_hypothesis(z, l, n)
    if lo > hi:
        raise ValueError(f"empty degree window [{lo}, {hi}]")
    t = tuple(t)
    k = n - l
    if len(t) != k:
        raise ValueError(f"chain {t} should have {k} entries")
    if not (0 <= s <= (t[0] if k else l)):
        return []
    if any(t[i] > t[i + 1] for i in range(k - 1)) or (k and t[-1] > l):
        return []

    floor = l - _zpart(z, l) - m
    fixed: dict[int, int] = {}
    for i in range(1, k + 1):
        pos = t[i - 1] + i - 1  # 0-based
        fixed[pos] = t[i - 1] - z.part(n + 1 - i) - m

    lower = [floor] * n
    for j in range(n):
        for pos, val in fixed.items():
            if pos >= j:
                lower[j] = max(lower[j], val)
        if j <= s - 1:
            lower[j] = max(lower[j], s - n)
    upper_cap = [None] * n  # type: list[Optional[int]]
    run: Optional[int] = None
    for j in range(n):
        if j in fixed:
            run = fixed[j] if run is None else min(run, fixed[j])
        cap = run
        if j >= s and s <= n - 1:
            cap = s - m if cap is None else min(cap, s - m)
        upper_cap[j] = cap

    min_rest = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        min_rest[j] = min_rest[j + 1] + lower[j]

    out: list[Weight] = []

    def rec(j: int, prev: Optional[int], partial: int, acc: list[int]) -> None:
        if j == n:
            if lo <= partial <= hi:
                out.append(tuple(acc))
            return
        vmax_budget = hi - partial - min_rest[j + 1]
        caps = [vmax_budget]
        if prev is not None:
            caps.append(prev)
        if upper_cap[j] is not None:
            caps.append(upper_cap[j])
        vmax = min(caps)
        vmin = lower[j]
        if j in fixed:
            v = fixed[j]
            if vmin <= v <= vmax:
                rec(j + 1, v, partial + v, acc + [v])
            return
        for v in range(vmax, vmin - 1, -1):
            best_rest = partial + v
            for kk in range(j + 1, n):
                c = v if upper_cap[kk] is None else min(v, upper_cap[kk])
                best_rest += c
            if best_rest < lo:
                break
            rec(j + 1, v, partial + v, acc + [v])

    rec(0, None, 0, [])
    out.sort()
    return out


def _component_degree_floor(
    pair: ZPair, tup: IndexTuple, m: int, n: int
) -> Optional[int]:
    w = minimal_weight(pair.z, pair.l, tup.t, tup.s, m, n)
    return None if w is None else sum(w)


def default_window(
    pairs: Sequence[ZPair], j: int, m: int, n: int, width: int = 10
) -> Optional[tuple[int, int]]:
    """[lo, lo + width] with lo the least total of any feasible minimal weight at j."""
    floors = []
    for pair in pairs:
        for tup in index_tuples(pair.z, pair.l, m, n):
            if tup.j != j:
                continue
            f = _component_degree_floor(pair, tup, m, n)
            if f is not None:
                floors.append(f)
    if not floors:
        return None
    lo = min(floors)
    return (lo, lo + width)


def _components_for_pairs(
    pairs: Sequence[ZPair],
    j: int,
    m: int,
    n: int,
    window: tuple[int, int],
) -> list[ExtComponent]:
    lo, hi = window
    comps = []
    for pair in pairs:
        z, l = pair.z, pair.l
        for tup in index_tuples(z, l, m, n):
            if tup.j != j:
                continue
            for lam in enumerate_weights(z, l, tup.t, tup.s, m, n, lo, hi):
                if z.part(l + 1) == _zpart(z, l):
                    assert lam[n - 1] == l - _zpart(z, l) - m, (pair, tup, lam)
                lam_exp = weight_expand(lam, tup.s, m, n)
                dim = schur_dim(lam_exp, m) * schur_dim(lam, n)
                comps.append(
                    ExtComponent(pair, tup.s, tup.t, lam, lam_exp, sum(lam), dim)
                )
    comps.sort(key=ExtComponent.sort_key)
    return comps


def _tabulate(comps: Sequence[ExtComponent]) -> tuple[tuple[int, int], ...]:
    table: GradedTable = {}
    for c in comps:
        table[c.degree] = table.get(c.degree, 0) + c.dim
    return tuple(sorted(table.items()))


def ext_graded(
    X: IdealSpec,
    j: int,
    m: int,
    n: int,
    window: Optional[tuple[int, int]] = None,
) -> ExtResult:
    """Ext^j of S/I_X against S inside a degree window.

    With no window given, the window starts at the least degree any chain
    at this j can reach and spans 10 further degrees.
    """
    if X.n != n:
        raise ValueError(f"ideal lives in P_{X.n}, not P_{n}")
    pairs = zset_general(X).sorted_pairs()
    if window is None:
        window = default_window(pairs, j, m, n)
    if window is None:
        return ExtResult(j, m, n, None, (), ())
    comps = _components_for_pairs(pairs, j, m, n, window)
    return ExtResult(j, m, n, window, tuple(comps), _tabulate(comps))


@dataclass(frozen=True)
class ExtMapPart:
    """One side of an induced Ext map: its labels and their components at j."""

    pairs: tuple[ZPair, ...]
    components: tuple[ExtComponent, ...]
    table: tuple[tuple[int, int], ...]

    def graded(self) -> GradedTable:
        return dict(self.table)


@dataclass(frozen=True)
class ExtMapResult:
    """Kernel, image and cokernel data of Ext^j(S/I_super) -> Ext^j(S/I_sub)."""

    j: int
    m: int
    n: int
    window: Optional[tuple[int, int]]
    kernel: ExtMapPart
    image: ExtMapPart
    cokernel: ExtMapPart


def ext_map_parts(
    sub: IdealSpec,
    sup: IdealSpec,
    j: int,
    m: int,
    n: int,
    window: Optional[tuple[int, int]] = None,
) -> ExtMapResult:
    """Split the induced map on Ext for an inclusion I_sub inside I_sup.

    The label sets split the map: kernel labels are those of the bigger
    ideal missing from the smaller one, image labels are shared, cokernel
    labels belong to the smaller ideal only.
    """
    if not subideal(sub, sup):
        raise ValueError("first ideal is not contained in the second")
    if sub.n != n:
        raise ValueError(f"ideals live in P_{sub.n}, not P_{n}")
    zsub = zset_general(sub).pairs
    zsup = zset_general(sup).pairs
    split = {
        "kernel": sorted(zsup - zsub, key=ZPair.sort_key),
        "image": sorted(zsup & zsub, key=ZPair.sort_key),
        "cokernel": sorted(zsub - zsup, key=ZPair.sort_key),
    }
    if window is None:
        window = default_window(sorted(zsub | zsup, key=ZPair.sort_key), j, m, n)
    parts = {}
    for name, pairs in split.items():
        if window is None:
            comps: list[ExtComponent] = []
        else:
            comps = _components_for_pairs(pairs, j, m, n, window)
        parts[name] = ExtMapPart(tuple(pairs), tuple(comps), _tabulate(comps))
    return ExtMapResult(j, m, n, window, parts["kernel"], parts["image"], parts["cokernel"])
