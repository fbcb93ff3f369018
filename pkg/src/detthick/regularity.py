"""Castelnuovo-Mumford regularity from the factor-label combinatorics.

The regularity of a single factor (z, l) is a maximum over lattice chains
bounded by the successive differences of z; the regularity of a quotient
is the maximum over its factor labels.  For powers, saturated powers and
symbolic powers of minors the per-level maxima reduce to an optimization
over pairs of partitions with an explicit closed form once d is large.
Minus infinity (the regularity of the zero module) is float("-inf"); all
finite values are exact integers.
"""

from __future__ import annotations

from typing import Iterator, Union

from .ideals import IdealSpec
from .partitions import Partition, enumerate_partitions
from .zset import zset_general

NEG_INF = float("-inf")
RegValue = Union[int, float]

KINDS = ("power", "satpower", "symbolic")


def _zpart(z: Partition, i: int) -> int:
    # z_i with the reading z_0 := z_1
    return z.part(max(i, 1))


def _check_zl(z: Partition, l: int, n: int) -> None:
    if z.nparts > n:
        raise ValueError(f"{z} has more than {n} parts")
    if not 0 <= l <= n - 1:
        raise ValueError(f"need 0 <= l <= {n - 1}, got l={l}")
    if any(z.part(i) != z.part(1) for i in range(2, l + 2)):
        raise ValueError(f"need z_1 = ... = z_{l + 1} in {z}")


def reg_tuples(z: Partition, l: int, n: int) -> list[tuple[int, ...]]:
    """Chains (t_1, ..., t_{n-l}, l) with increments between 0 and the z-differences.

    Increment i is bounded by z_{n-i} - z_{n+1-i}; with l = 0 the only
    chain is all zeros.
    """
    _check_zl(z, l, n)
    K = n - l
    out: list[tuple[int, ...]] = []

    def rec(i: int, nxt: int, acc: list[int]) -> None:
        if i == 0:
            out.append(tuple(acc))
            return
        zdiff = _zpart(z, n - i) - z.part(n + 1 - i)
        for delta in range(zdiff + 1):
            ti = nxt - delta
            if ti < 0:
                break
            rec(i - 1, ti, [ti] + acc)

    rec(K, l, [l])
    out.sort()
    return out


def f_value(z: Partition, l: int, t: tuple[int, ...]) -> int:
    """The correction sum t_i (z_{n-i} - z_{n+1-i} - t_{i+1} + t_i) over i <= n-l."""
    n = len(t) + l - 1
    _check_zl(z, l, n)
    if t[-1] != l:
        raise ValueError(f"chain {t} must end at l={l}")
    total = 0
    for i in range(1, n - l + 1):
        zdiff = _zpart(z, n - i) - z.part(n + 1 - i)
        total += t[i - 1] * (zdiff - t[i] + t[i - 1])
    return total


def reg_j(z: Partition, l: int, n: int) -> int:
    """Regularity of the factor module labeled (z, l): max of |z| + |t| - l - f."""
    _check_zl(z, l, n)
    return max(z.size + sum(t) - l - f_value(z, l, t) for t in reg_tuples(z, l, n))


def reg_quotient(X: IdealSpec, m: int, n: int) -> RegValue:
    """Regularity of S/I_X: the maximum factor regularity over all labels.

    The unit ideal gives the zero module, regularity -inf.  The zero ideal
    is rejected (S itself has regularity 0 but no factor labels).
    """
    if X.n != n:
        raise ValueError(f"ideal lives in P_{X.n}, not P_{n}")
    if not n <= m:
        raise ValueError(f"need n <= m, got m={m}, n={n}")
    if X.is_zero:
        raise ValueError("zero ideal: S/0 = S has regularity 0 but no factor labels")
    if X.is_unit:
        return NEG_INF
    return max(reg_j(pair.z, pair.l, n) for pair in zset_general(X).pairs)


def _u_candidates(l: int, k: int) -> list[Partition]:
    # u in P_k with u_1 = l (u empty when l = 0)
    if l == 0:
        return [Partition()]
    return [Partition((l,) + tail.parts) for tail in enumerate_partitions(k - 1, l)]


def _yu_values(l: int, p: int, n: int, d: int) -> Iterator[int]:
    k = n - l
    us = _u_candidates(l, k)
    for y in enumerate_partitions(k, d - 1):
        if y.size > d * (p - l) - 1:
            continue
        if y.size - y.part(1) < d * (p - 1 - l):
            continue
        for u in us:
            if any(
                y.part(i) - y.part(i + 1) < u.part(i) - u.part(i + 1)
                for i in range(1, k)
            ):
                continue
            corr = sum(
                u.part(i + 1) * ((y.part(i) - y.part(i + 1)) - (u.part(i) - u.part(i + 1)))
                for i in range(1, k)
            )
            yield l * y.part(1) + y.size + u.size - corr


def r_bruteforce(l: int, p: int, n: int, d: int) -> RegValue:
    """Level-l regularity bound by direct search over the partition-pair region.

    Enumeration uses the proven caps y_1 <= d-1 and u inside the l-column
    box; returns -inf when the region is empty.
    """
    if not 0 <= l < p <= n:
        raise ValueError(f"need 0 <= l < p <= n, got l={l}, p={p}, n={n}")
    if d < 1:
        raise ValueError(f"need d >= 1, got d={d}")
    return max(_yu_values(l, p, n, d), default=NEG_INF)


def closed_form_valid(l: int, p: int, n: int, d: int) -> bool:
    """Where the closed form for the level-l bound is proven."""
    if not 0 <= l < p <= n or d < 1:
        return False
    if p == n:
        return True
    return d >= n - 1


def r_closed(l: int, p: int, n: int, d: int) -> RegValue:
    """Closed form: p d - 1 + l (p - 1 - l) for p < n and large d or for the
    top level of maximal minors; -inf below the top level when p = n."""
    if not closed_form_valid(l, p, n, d):
        raise ValueError(f"closed form not proven for l={l}, p={p}, n={n}, d={d}")
    if p == n:
        return n * d - 1 if l == n - 1 else NEG_INF
    return p * d - 1 + l * (p - 1 - l)


def reg_power_details(
    p: int, d: int, m: int, n: int, kind: str
) -> tuple[RegValue, dict[int, RegValue]]:
    """Regularity of the chosen thickening ideal plus its per-level bounds.

    Levels are 0..p-1 for powers, 1..p-1 for saturated powers and p-1 alone
    for symbolic powers; the ideal regularity is one more than the best
    level.  Brute force always runs; the closed form is asserted wherever
    it is proven.
    """
    if not 1 <= p <= n <= m:
        raise ValueError(f"need 1 <= p <= n <= m, got p={p}, n={n}, m={m}")
    if d < 1:
        raise ValueError(f"need d >= 1, got d={d}")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if kind == "satpower" and p < 2:
        raise ValueError("saturated powers need p >= 2 (p = 1 saturates to the unit ideal)")
    levels = {
        "power": range(p),
        "satpower": range(1, p),
        "symbolic": range(p - 1, p),
    }[kind]
    per_level: dict[int, RegValue] = {}
    for l in levels:
        val = r_bruteforce(l, p, n, d)
        if closed_form_valid(l, p, n, d):
            closed = r_closed(l, p, n, d)
            assert val == closed, (l, p, n, d, val, closed)
        per_level[l] = val
    best = max(per_level.values())
    return best + 1, per_level


def reg_power_family(p: int, d: int, m: int, n: int, kind: str) -> RegValue:
    """Regularity of I_p^d, its saturation, or I_p^(d), as an ideal."""
    return reg_power_details(p, d, m, n, kind)[0]


def has_linear_resolution(p: int, d: int, n: int) -> bool:
    """A power of minors has a linear resolution iff its regularity equals p*d."""
    return reg_power_family(p, d, n, n, "power") == p * d
