"""Factor labels: the finite set of (z, l) pairs attached to an invariant ideal.

Every quotient by a proper nonzero invariant ideal filters into factor
modules indexed by these pairs; the closed-form enumerations for powers and
symbolic powers must agree with the general algorithm.
"""

import random

import pytest

from detthick.ideals import (
    IdealSpec,
    normalize,
    power_gens,
    saturate,
    symbolic_gens,
)
from detthick.partitions import Partition
from detthick.zset import ZPair, zset_general, zset_power, zset_symbolic


def random_proper_ideal(rng, n, max_part=5):
    while True:
        raws = []
        for _ in range(rng.randint(1, 4)):
            k = rng.randint(1, n)
            raws.append(
                Partition(sorted((rng.randint(1, max_part) for _ in range(k)), reverse=True))
            )
        X = normalize(n, raws)
        if not (X.is_zero or X.is_unit):
            return X


def test_all_produced_pairs_satisfy_head_equality():
    # any emitted label has z_1 = ... = z_{l+1} and 0 <= l < n
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(1, 4)
        X = random_proper_ideal(rng, n)
        for pr in zset_general(X).pairs:
            assert 0 <= pr.l <= n - 1
            head = [pr.z.part(i) for i in range(1, pr.l + 2)]
            assert len(set(head)) == 1


def test_trivial_ideals_rejected():
    with pytest.raises(ValueError):
        zset_general(IdealSpec.zero(3))
    with pytest.raises(ValueError):
        zset_general(IdealSpec.unit(3))


def test_reduced_determinantal_labels():
    # I_{p x p minors} has the single label (0, p-1)
    for n in range(1, 5):
        for p in range(1, n + 1):
            X = normalize(n, [Partition([1] * p)])
            Z = zset_general(X)
            assert {(pr.z.parts, pr.l) for pr in Z.pairs} == {((), p - 1)}


def test_principal_single_row():
    X = normalize(2, [Partition([3]), Partition([1, 1])])
    Z = zset_general(X)
    assert {(pr.z.parts, pr.l) for pr in Z.pairs} == {((), 0), ((1,), 0), ((2,), 0)}


def test_closed_forms_match_general_algorithm():
    for n in range(1, 6):
        for p in range(1, n + 1):
            for d in range(1, 7):
                assert (
                    zset_general(power_gens(p, d, n)).pairs
                    == zset_power(p, d, n).pairs
                )
                assert (
                    zset_general(symbolic_gens(p, d, n)).pairs
                    == zset_symbolic(p, d, n).pairs
                )


def test_power_labels_level_bound():
    # a d-th power of the p x p minors only produces levels below p
    for n in range(2, 5):
        for p in range(1, n + 1):
            for d in range(1, 5):
                for pr in zset_power(p, d, n).pairs:
                    assert 0 <= pr.l <= p - 1


def test_symbolic_labels():
    # symbolic powers live entirely at level p-1, cut out by a tail bound
    for n in range(2, 5):
        for p in range(1, n + 1):
            for d in range(1, 5):
                Z = zset_symbolic(p, d, n)
                for pr in Z.pairs:
                    assert pr.l == p - 1
                    tail = sum(pr.z.part(i) for i in range(p, n + 1))
                    assert tail <= d - 1


def test_worked_example_top_level_slice():
    # d = 7 power of 2 x 2 minors in three rows: the level-0 labels
    Z = zset_power(2, 7, 3)
    level0 = sorted(pr.z.parts for pr in Z.pairs if pr.l == 0)
    assert level0 == [
        (4, 4, 3),
        (4, 4, 4),
        (5, 4, 3),
        (5, 4, 4),
        (5, 5, 2),
        (5, 5, 3),
        (6, 4, 3),
        (6, 5, 2),
        (6, 6, 1),
    ]
    assert len(Z.pairs) == 25


def test_saturation_drops_low_levels():
    rng = random.Random(3)
    cases = 0
    while cases < 30:
        n = rng.randint(2, 4)
        X = random_proper_ideal(rng, n)
        Z = zset_general(X)
        for p in range(1, n):
            S = saturate(X, p)
            kept = frozenset(pr for pr in Z.pairs if pr.l >= p)
            if S.is_unit:
                assert not kept
            else:
                assert zset_general(S).pairs == kept
        cases += 1


def test_sorted_pairs_deterministic():
    Z = zset_power(2, 3, 3)
    sp = Z.sorted_pairs()
    assert sp == sorted(sp, key=ZPair.sort_key)
    assert len(sp) == len(Z.pairs)


def test_to_json_shape():
    Z = zset_power(2, 2, 3)
    doc = Z.to_json()
    assert doc["n"] == 3
    assert all(set(item) == {"z", "l"} for item in doc["pairs"])
