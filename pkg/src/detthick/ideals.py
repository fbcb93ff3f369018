"""GL-invariant ideals of a generic m x n matrix, encoded combinatorially.

An invariant ideal of the coordinate ring is determined by the antichain of
minimal partitions indexing its irreducible summands; every operation here
(membership, intersection, saturation, powers, symbolic powers) is pure
partition combinatorics on that antichain.  The matrix never appears.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .partitions import EMPTY, Partition, enumerate_partitions, leq, sup


@dataclass(frozen=True)
class IdealSpec:
    """An invariant ideal: the antichain of its minimal generators in P_n.

    ``gens == frozenset()`` is the zero ideal (flagged, not an error) and
    ``gens == {empty partition}`` is the unit ideal.
    """

    n: int
    gens: frozenset[Partition]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        for g in self.gens:
            if g.nparts > self.n:
                raise ValueError(f"generator {g} has more than {self.n} parts")
        if EMPTY in self.gens and len(self.gens) != 1:
            raise ValueError("the unit ideal must be generated by the empty partition alone")
        gl = list(self.gens)
        for i, a in enumerate(gl):
            for b in gl[i + 1 :]:
                if leq(a, b) or leq(b, a):
                    raise ValueError(f"generators {a} and {b} are comparable; not an antichain")

    @classmethod
    def zero(cls, n: int) -> "IdealSpec":
        return cls(n, frozenset())

    @classmethod
    def unit(cls, n: int) -> "IdealSpec":
        return cls(n, frozenset([EMPTY]))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == frozenset([EMPTY])

    def sorted_gens(self) -> list[Partition]:
        return sorted(self.gens, key=lambda g: (g.size, g.parts))

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [g.to_json() for g in self.sorted_gens()]}

    def __str__(self) -> str:
        if self.is_zero:
            return f"<zero ideal, n={self.n}>"
        return "{" + "; ".join(str(g) for g in self.sorted_gens()) + "}" + f" in P_{self.n}"


def normalize(n: int, raw: Iterable[Partition]) -> IdealSpec:
    """Build an IdealSpec from any generator list, keeping minimal elements."""
    pool = list(raw)
    for g in pool:
        if g.nparts > n:
            raise ValueError(f"generator {g} has more than {n} parts")
    minimal: list[Partition] = []
    for g in pool:
        if any(leq(h, g) and h != g for h in pool):
            continue
        if g not in minimal:
            minimal.append(g)
    return IdealSpec(n, frozenset(minimal))


def member(X: IdealSpec, y: Partition) -> bool:
    """Is the irreducible indexed by y contained in the ideal?

    True iff some generator g satisfies g <= y componentwise.
    """
    if y.nparts > X.n:
        raise ValueError(f"{y} has more than {X.n} parts")
    return any(leq(g, y) for g in X.gens)


def subideal(X: IdealSpec, Y: IdealSpec) -> bool:
    """Is I_X contained in I_Y?  True iff every generator of X lies in I_Y."""
    if X.n != Y.n:
        raise ValueError(f"mismatched n: {X.n} vs {Y.n}")
    return all(member(Y, g) for g in X.gens)


def intersect(X: IdealSpec, Y: IdealSpec) -> IdealSpec:
    """Intersection: generated by the pointwise sups of generator pairs."""
    if X.n != Y.n:
        raise ValueError(f"mismatched n: {X.n} vs {Y.n}")
    return normalize(X.n, [sup(a, b) for a in X.gens for b in Y.gens])


def saturate(X: IdealSpec, p: int) -> IdealSpec:
    """Saturate with respect to the ideal of p x p minors.

    Each generator keeps exactly its columns of height > p; with p=0
    nothing is stripped from nonempty generators.  p=1 is saturation by
    the irrelevant maximal ideal.
    """
    if not 0 <= p:
        raise ValueError(f"saturation index {p} is negative")
    if p > X.n:
        raise ValueError(f"saturation index {p} exceeds n={X.n}")
    stripped = []
    for g in X.gens:
        c = sum(1 for h in g.conjugate().parts if h > p)
        stripped.append(g.truncate(c))
    return normalize(X.n, stripped)


def power_gens(p: int, d: int, n: int) -> IdealSpec:
    """Generators of the d-th power of the ideal of p x p minors.

    All partitions of total size p*d with first part at most d.
    """
    _check_pdn(p, d, n)
    return IdealSpec(n, frozenset(enumerate_partitions(n, d, size=p * d)))


def symbolic_gens(p: int, d: int, n: int) -> IdealSpec:
    """Generators of the d-th symbolic power of the p x p minors.

    All x with x_1 = ... = x_p and x_p + ... + x_n = d.
    """
    _check_pdn(p, d, n)
    out = []
    for c0 in range(1, d + 1):
        for tail in enumerate_partitions(n - p, c0, size=d - c0):
            out.append(Partition((c0,) * p + tail.parts))
    return IdealSpec(n, frozenset(out))


def _check_pdn(p: int, d: int, n: int) -> None:
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got p={p}, n={n}")
    if d < 1:
        raise ValueError(f"need d >= 1, got d={d}")


def succ_gens(z: Partition, l: int, n: int) -> IdealSpec:
    """Minimal generators of the strict-successor ideal of (z, l).

    Its members are the x >= z with x_i > z_i for some row i > l.  For each
    row i the minimal such x bumps every row tied with row i, so a single
    added box does not always suffice.
    """
    if z.nparts > n:
        raise ValueError(f"{z} has more than {n} parts")
    if not 0 <= l <= n:
        raise ValueError(f"need 0 <= l <= {n}, got l={l}")
    bumps = []
    for i in range(l + 1, n + 1):
        v = z.part(i)
        j0 = next(j for j in range(1, i + 1) if z.part(j) == v)
        parts = [z.part(j) for j in range(1, n + 1)]
        for j in range(j0, i + 1):
            parts[j - 1] = v + 1
        bumps.append(Partition(parts))
    return normalize(n, bumps)


def yset_gens(z: Partition, l: int, n: int) -> IdealSpec:
    """Rectangular companion generators for (z, l) with z_1 = ... = z_{l+1}.

    The rectangle ((z_1+1)^(l+1)) together with ((z_i+1)^i) for each i > l+1
    where z strictly drops entering row i.
    """
    if z.nparts > n:
        raise ValueError(f"{z} has more than {n} parts")
    if not 0 <= l <= n - 1:
        raise ValueError(f"need 0 <= l <= {n - 1}, got l={l}")
    if any(z.part(i) != z.part(1) for i in range(2, l + 2)):
        raise ValueError(f"need z_1 = ... = z_{l + 1} in {z}")
    rects = [Partition([z.part(1) + 1] * (l + 1))]
    for i in range(l + 2, n + 1):
        if z.part(i - 1) > z.part(i):
            rects.append(Partition([z.part(i) + 1] * i))
    return normalize(n, rects)


def pieri_vertical(z: Partition, p: int, n: int) -> list[Partition]:
    """All partitions obtained from z by adding a vertical strip of p boxes.

    Vertical strip: at most one box per row, so t - z is a 0/1 vector.
    """
    if z.nparts > n:
        raise ValueError(f"{z} has more than {n} parts")
    if not 0 <= p <= n:
        raise ValueError(f"strip size {p} outside 0..{n}")
    out = []
    for rows in itertools.combinations(range(1, n + 1), p):
        parts = [z.part(i) + (1 if i in rows else 0) for i in range(1, n + 1)]
        if all(parts[i] >= parts[i + 1] for i in range(n - 1)):
            out.append(Partition(parts))
    out.sort(key=lambda t: tuple(-q for q in t.parts))
    return out


def radical_index(X: IdealSpec) -> int:
    """The radical is the ideal of p x p minors with p = min first-column height."""
    if X.is_zero or X.is_unit:
        raise ValueError("radical index needs a proper nonzero ideal")
    return min(g.nparts for g in X.gens)
