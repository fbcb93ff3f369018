"""Ext of invariant thickenings, one graded component at a time.

Each factor label (z, l) contributes chains 0 <= s <= t_1 <= ... <= t_{n-l} <= l,
every chain carries a convex set of dominant weights, and the dimension of a
component is a product of two Weyl dimensions.  All expected numbers below are
either produced by an in-test brute force or cross-checked against the graded
dimensions of the quotient.
"""

from math import comb

import pytest

from detthick.ext import (
    default_window,
    enumerate_weights,
    ext_graded,
    ext_map_parts,
    index_tuples,
    minimal_weight,
)
from detthick.ideals import normalize, power_gens, saturate, symbolic_gens
from detthick.partitions import Partition
from detthick.schur import ring_graded_dim, schur_dim
from detthick.zset import ZPair, zset_general, zset_power


def test_index_tuples_shape_and_count():
    # chains with n - l + 1 distinguished nondecreasing entries capped by l
    z = Partition([3, 3, 1, 1])
    for (l, n, expect) in [(0, 3, 1), (2, 4, 10), (2, 5, 15)]:
        zz = Partition([3] * (l + 1))
        tuples = index_tuples(zz, l, n + 1, n)
        assert len(tuples) == expect
        for tup in tuples:
            assert 0 <= tup.s <= tup.t[0]
            assert all(a <= b for a, b in zip(tup.t, tup.t[1:]))
            assert tup.t[-1] <= l
            assert len(tup.t) == n - l


def test_index_tuple_count_formula():
    # the number of chains is a binomial coefficient
    for n in range(1, 6):
        for l in range(0, n):
            zz = Partition([2] * (l + 1))
            got = len(index_tuples(zz, l, n, n))
            assert got == comb(n + 1, l)


def test_cohomological_degree():
    z = Partition([2, 2])
    for tup in index_tuples(z, 1, 3, 3):
        ssum = sum(tup.t)
        assert tup.j == 9 - 1 - 0 * tup.s - 2 * ssum
    # rectangular case picks up s (m - n)
    for tup in index_tuples(z, 1, 5, 3):
        assert tup.j == 15 - 1 - 2 * tup.s - 2 * sum(tup.t)


def test_minimal_weight_worked_cases():
    # top chain for the determinant hypersurface in P_2, m = n = 2
    lam = minimal_weight(Partition([]), 1, (1,), 1, 2, 2)
    assert lam == (-1, -1)
    assert minimal_weight(Partition([4, 4, 3]), 0, (0, 0, 0), 0, 3, 3) == (-6, -7, -7)
    # infeasible: last entry of the chain must reach l when z_l = z_{l+1}
    assert minimal_weight(Partition([2, 2]), 1, (0, 0), 0, 3, 3) is None
    # infeasible: s must cover t_1 - z_n
    assert minimal_weight(Partition([]), 1, (1,), 0, 2, 2) is None


def test_minimal_weight_is_least_total():
    cases = [
        (Partition([4, 4, 3]), 0, (0, 0, 0), 0, 3, 3),
        (Partition([2, 2]), 1, (0, 1), 0, 3, 3),
        (Partition([2, 2]), 1, (1, 1), 1, 4, 3),
        (Partition([1, 1, 1]), 2, (2,), 1, 4, 3),
    ]
    for z, l, t, s, m, n in cases:
        lam = minimal_weight(z, l, t, s, m, n)
        assert lam is not None
        total = sum(lam)
        got = enumerate_weights(z, l, t, s, m, n, total, total)
        assert lam in got
        # nothing lives strictly below the minimum
        assert enumerate_weights(z, l, t, s, m, n, total - 3, total - 1) == []


def test_enumerate_weights_are_valid_components():
    z = Partition([2, 2])
    for tup in index_tuples(z, 1, 3, 3):
        lam = minimal_weight(z, 1, tup.t, tup.s, 3, 3)
        if lam is None:
            continue
        lo = sum(lam)
        for w in enumerate_weights(z, 1, tup.t, tup.s, 3, 3, lo, lo + 4):
            assert all(a >= b for a, b in zip(w, w[1:]))
            assert lo <= sum(w) <= lo + 4
            # fixed positions forced by the chain
            for i in range(1, len(tup.t) + 1):
                pos = tup.t[i - 1] + i  # 1-based
                assert w[pos - 1] == tup.t[i - 1] - z.part(3 + 1 - i) - 3


def test_top_ext_of_determinant_hypersurface():
    # S/(det) for the generic 2x2 matrix; Ext^1 is the twisted hypersurface ring
    X = normalize(2, [Partition([1, 1])])
    res = ext_graded(X, 1, 2, 2, window=(-2, 1))
    table = dict(res.table)
    for comp in res.components:
        assert comp.dim == schur_dim(comp.lam, 2) ** 2
    # graded dims equal those of S/(det) shifted by deg det = 2
    from detthick.schur import quotient_graded_dim

    for deg, dim in table.items():
        assert dim == quotient_graded_dim(X, deg + 2, 2, 2)
    assert table[-2] == 1
    assert table[-1] == 4
    assert table[0] == 9


def test_worked_example_full_slice():
    # Ext^9 at the most negative degree for the 7th power of 2x2 minors, 3x3
    res = ext_graded(power_gens(2, 7, 3), 9, 3, 3, window=(-22, -22))
    by_z = {comp.pair.z.parts: comp.dim for comp in res.components}
    assert by_z == {
        (5, 5, 3): 36,
        (5, 4, 4): 9,
        (6, 6, 1): 441,
        (6, 5, 2): 576,
        (6, 4, 3): 225,
    }
    assert sum(by_z.values()) == 1287
    assert dict(res.table) == {-22: 1287}
    # every component at this j has the all-zero chain
    for comp in res.components:
        assert comp.s == 0 and tuple(comp.t) == (0, 0, 0)
        assert comp.degree == sum(comp.lam)


def test_default_window_starts_at_least_degree():
    pairs = zset_power(2, 7, 3).sorted_pairs()
    assert default_window(pairs, 9, 3, 3) == (-22, -12)
    # no feasible chain at this j: no window at all
    assert default_window(pairs, 7, 3, 3) is None


def test_ext_vanishes_outside_feasible_degrees():
    res = ext_graded(power_gens(2, 3, 3), 5, 3, 3)
    assert res.window is None and res.components == ()
    assert ext_graded(power_gens(2, 3, 3), 8, 3, 3).components == ()


def test_ext_zero_for_trivial_thickening():
    # Ext^9 of the quotient by the maximal ideal itself: top local cohomology
    X = power_gens(1, 1, 3)
    res = ext_graded(X, 9, 3, 3, window=(-12, -9))
    assert dict(res.table)[-9] == 1  # socle in degree -mn
    top = [c for c in res.components if c.degree == -9]
    assert len(top) == 1 and top[0].lam == (-3, -3, -3)


def test_ext_map_parts_label_split():
    sub, sup = power_gens(2, 7, 3), power_gens(2, 6, 3)
    parts = ext_map_parts(sub, sup, 9, 3, 3)
    Zsub = zset_general(sub).pairs
    Zsup = zset_general(sup).pairs
    assert set(parts.kernel.pairs) == set(Zsup - Zsub)
    assert set(parts.image.pairs) == set(Zsup & Zsub)
    assert set(parts.cokernel.pairs) == set(Zsub - Zsup)


def test_ext_map_image_slice_worked_example():
    parts = ext_map_parts(power_gens(2, 7, 3), power_gens(2, 6, 3), 9, 3, 3)
    img = parts.image.graded()
    assert img == {-20: 9}
    comps = parts.image.components
    assert len(comps) == 1
    assert comps[0].pair == ZPair(Partition([4, 4, 3]), 0)


def test_ext_map_rejects_non_inclusion():
    with pytest.raises(ValueError):
        ext_map_parts(power_gens(2, 2, 3), power_gens(2, 3, 3), 9, 3, 3)


def test_saturation_map_is_injective():
    # Z labels of the saturation form a subset, so the kernel part is empty
    X = power_gens(3, 2, 4)
    S = saturate(X, 1)
    for j in range(1, 17):
        parts = ext_map_parts(X, S, j, 4, 4)
        assert not parts.kernel.pairs


def test_symbolic_chain_maps_are_injective():
    for d in range(1, 4):
        sub, sup = symbolic_gens(2, d + 1, 3), symbolic_gens(2, d, 3)
        for j in range(1, 10):
            assert not ext_map_parts(sub, sup, j, 3, 3).kernel.pairs


def test_component_dims_square_for_square_matrix():
    res = ext_graded(power_gens(2, 4, 3), 9, 3, 3)
    assert res.components
    for comp in res.components:
        assert comp.dim == schur_dim(comp.lam, 3) ** 2


def test_component_dims_rectangular():
    res = ext_graded(power_gens(2, 2, 2), 3, 3, 2)
    assert res.components
    for comp in res.components:
        assert comp.dim == schur_dim(comp.lam_expanded, 3) * schur_dim(comp.lam, 2)
        assert sum(comp.lam_expanded) == sum(comp.lam)


def test_ext_json_dims_are_strings():
    res = ext_graded(power_gens(2, 7, 3), 9, 3, 3, window=(-22, -22))
    doc = res.components[0].to_json()
    assert isinstance(doc["dim"], str)
