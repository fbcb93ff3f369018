"""Dimensions of irreducible GL representations and graded Hilbert data.

Everything reduces to the Weyl dimension product, evaluated exactly on
dominant integer weights (negative entries included); translation of a
weight by a constant vector never changes the dimension.
"""

from __future__ import annotations

from math import comb
from typing import Sequence, Union

from .ideals import IdealSpec, member
from .partitions import Partition, enumerate_partitions

Weight = tuple[int, ...]
GradedTable = dict[int, int]

WeightLike = Union[Partition, Sequence[int]]


def _as_weight(lam: WeightLike, k: int) -> Weight:
    entries = list(lam.parts if isinstance(lam, Partition) else lam)
    if len(entries) > k:
        raise ValueError(f"weight {entries} has more than {k} entries")
    entries += [0] * (k - len(entries))
    for i in range(k - 1):
        if entries[i] < entries[i + 1]:
            raise ValueError(f"weight {entries} is not dominant")
    return tuple(entries)


def schur_dim(lam: WeightLike, k: int) -> int:
    """Dimension of the irreducible GL_k representation of highest weight lam.

    Weyl's product over pairs i < j of (lam_i - lam_j + j - i) / (j - i),
    computed exactly; partitions shorter than k are padded with zeros,
    which is only valid when the last given entry is >= 0.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    w = _as_weight(lam, k)
    num = 1
    den = 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= w[i] - w[j] + j - i
            den *= j - i
    assert num % den == 0, (lam, k)
    return num // den


def weight_expand(lam: WeightLike, s: int, m: int, n: int) -> Weight:
    """Expand a GL_n weight to a GL_m weight by the degree-preserving rule.

    Keeps the first s entries, inserts m-n copies of s-n, and shifts the
    remaining n-s entries up by m-n.  Requires lam_s >= s-n and
    lam_{s+1} <= s-m so the result stays dominant; the total is preserved.
    """
    if not n <= m:
        raise ValueError(f"need n <= m, got m={m}, n={n}")
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= {n}, got s={s}")
    w = _as_weight(lam, n)
    if s >= 1 and w[s - 1] < s - n:
        raise ValueError(f"entry {s} of {w} is below {s - n}; expansion not dominant")
    if s <= n - 1 and w[s] > s - m:
        raise ValueError(f"entry {s + 1} of {w} is above {s - m}; expansion not dominant")
    out = w[:s] + (s - n,) * (m - n) + tuple(e + (m - n) for e in w[s:])
    assert sum(out) == sum(w), (lam, s, m, n)
    return out


def j_graded_dim(z: Partition, l: int, r: int, m: int, n: int) -> int:
    """Degree-r dimension of the factor module labeled (z, l) over an m x n matrix.

    Sums dim(x, m) * dim(x, n) over the partitions x >= z that agree with z
    beyond row l, in the single degree |x| = r.
    """
    if not z.nparts <= n <= m:
        raise ValueError(f"need nparts(z) <= n <= m for {z}, n={n}, m={m}")
    if not 0 <= l <= n:
        raise ValueError(f"need 0 <= l <= {n}, got l={l}")
    if r < 0:
        return 0
    total = 0
    for x in _factor_partitions(z, l, r, n):
        total += schur_dim(x, m) * schur_dim(x, n)
    return total


def _factor_partitions(z: Partition, l: int, r: int, n: int) -> list[Partition]:
    # partitions x with x >= z, x_i = z_i for i > l and |x| = r
    tail = [z.part(i) for i in range(l + 1, n + 1)]
    budget = r - sum(tail)
    out: list[Partition] = []

    def rec(i: int, prev: int, left: int, acc: list[int]) -> None:
        if i > l:
            if left == 0:
                out.append(Partition(acc + tail))
            return
        floor = z.part(i)
        rest_min = sum(z.part(j) for j in range(i + 1, l + 1))
        hi = min(prev, left - rest_min)
        for v in range(floor, hi + 1):
            rec(i + 1, v, left - v, acc + [v])

    if budget >= 0:
        rec(1, budget + z.part(1), budget, [])
    return out


def quotient_graded_dim(X: IdealSpec, r: int, m: int, n: int) -> int:
    """Degree-r dimension of S/I_X: sum of dim(x, m) * dim(x, n) over x outside the ideal."""
    if X.n != n:
        raise ValueError(f"ideal lives in P_{X.n}, not P_{n}")
    if not n <= m:
        raise ValueError(f"need n <= m, got m={m}, n={n}")
    if r < 0:
        return 0
    total = 0
    for x in enumerate_partitions(n, r, size=r):
        if not member(X, x):
            total += schur_dim(x, m) * schur_dim(x, n)
    return total


def ring_graded_dim(r: int, m: int, n: int) -> int:
    """Degree-r dimension of the full polynomial ring in m*n variables."""
    if r < 0:
        return 0
    return comb(m * n + r - 1, r)


def graded_table_to_json(table: GradedTable) -> dict[str, str]:
    """Serialize degrees to keys and dimensions to strings (exact big ints)."""
    return {str(r): str(v) for r, v in sorted(table.items())}
