import pytest

from detthick.ideals import IdealSpec, normalize, power_gens, saturate, symbolic_gens
from detthick.kodaira import kodaira_check, sing_codim
from detthick.partitions import Partition


def test_sing_codim_values():
    assert sing_codim(2, 3, 3) == 4
    assert sing_codim(2, 6, 4) == 8
    assert sing_codim(3, 4, 4) == 5
    assert sing_codim(4, 6, 5) == 6
    with pytest.raises(ValueError):
        sing_codim(1, 3, 3)
    with pytest.raises(ValueError):
        sing_codim(4, 3, 3)


def test_vanishing_square_power():
    rep = kodaira_check(power_gens(2, 2, 3), 3, 3, jmax=12)
    assert rep.passed
    assert rep.mechanism_ok
    assert rep.violations == ()
    assert rep.k_checked == tuple(range(3 + 3 - 2))


def test_vanishing_across_small_corpus():
    for n in range(2, 5):
        for m in (n, n + 1):
            for p in range(2, n + 1):
                for d in range(1, 4):
                    for X in (
                        power_gens(p, d, n),
                        symbolic_gens(p, d, n),
                        saturate(power_gens(p, d, n), 1),
                    ):
                        if X.is_unit:
                            continue
                        rep = kodaira_check(X, m, n, jmax=15)
                        assert rep.passed and rep.mechanism_ok, (n, m, p, d)


def test_vanishing_for_random_antichains():
    # any invariant ideal whose radical is at least the 2x2 minors qualifies
    import random

    rng = random.Random(23)
    done = 0
    while done < 12:
        n = rng.randint(2, 4)
        gens = []
        for _ in range(rng.randint(1, 3)):
            k = rng.randint(2, n)  # no single-row generators: keeps p >= 2
            parts = sorted((rng.randint(1, 4) for _ in range(k)), reverse=True)
            parts = [max(v, 1) for v in parts]
            gens.append(Partition(parts))
        X = normalize(n, gens)
        if X.is_unit or X.is_zero:
            continue
        if min(g.nparts for g in X.gens) < 2:
            continue
        rep = kodaira_check(X, n + 1, n, jmax=15)
        assert rep.passed and rep.mechanism_ok, X
        done += 1


def test_report_json():
    rep = kodaira_check(power_gens(2, 2, 3), 3, 3, jmax=6)
    doc = rep.to_json()
    assert doc["passed"] is True
    assert doc["violations"] == []
    assert doc["jmax"] == 6


def test_validation_errors():
    with pytest.raises(ValueError):
        kodaira_check(power_gens(2, 2, 3), 2, 3, jmax=5)  # m < n
    with pytest.raises(ValueError):
        kodaira_check(power_gens(2, 2, 3), 3, 3, jmax=0)
    with pytest.raises(ValueError):
        kodaira_check(IdealSpec.unit(3), 3, 3, jmax=5)
