"""Acceptance criteria, one test each.

Every test records a one-line verdict that the terminal summary prints, so
``pytest tests/test_acceptance.py`` ends with a PASS/FAIL line per criterion.
"""
import contextlib
import time
from fractions import Fraction as F

import pytest

from helpers import ACCEPTANCE, d
from oracles import all_simple_games, naive_alpha, swing_count, walk_hit_probability
from recpower import (
    POSTULATES, Game, add_yes_blocker, alpha, alpha_table, audit, audit_all, bloc, donate,
    from_weighted, pb, rm, ss,
)
from recpower.generate import random_simple_games, weighted_games
from recpower.measures import clear_cache
from recpower.transforms import remove_dummy


@contextlib.contextmanager
def criterion(k, title):
    info = {"detail": ""}
    try:
        yield info
    except BaseException as exc:
        ACCEPTANCE[k] = (False, f"{title}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
        raise
    ACCEPTANCE[k] = (True, f"{title}: {info['detail']}")


def small_games():
    return [Game(n, arr) for n in range(1, 5) for arr in all_simple_games(n)]


def test_1_golden_rm_values():
    with criterion(1, "RM of player 2 in {8;5,4,3,2}") as info:
        clear_cache()
        start = time.perf_counter()
        v = rm(from_weighted(8, [5, 4, 3, 2]))[1]
        elapsed = time.perf_counter() - start
        assert (v.plus, v.minus, v.total) == (F(33, 128), F(113, 384), F(53, 96))
        assert elapsed < 1.0
        info["detail"] = f"{v.plus}, {v.minus}, {v.total} in {elapsed * 1000:.1f} ms"


def test_2_efficacy_figure_values():
    with criterion(2, "efficacy values of player 2 at annotated divisions") as info:
        g = from_weighted(8, [5, 4, 3, 2])
        expected = {"1234": F(5, 8), "123": F(1, 2), "124": F(1), "134": F(0), "234": F(1),
                    "12": F(1), "14": F(1), "34": F(1), "13": F(0), "1": F(1),
                    "3": F(1, 2), "4": F(2, 3), "∅": F(13, 24)}
        for node, value in expected.items():
            assert alpha(g, 1, d(node)) == value, node
        info["detail"] = f"{len(expected)} divisions exact"


def test_3_shapley_shubik_counterexample():
    with criterion(3, "Shapley-Shubik added-blocker counterexample") as info:
        base, blocked = from_weighted(3, [2, 1, 1]), from_weighted(8, [2, 1, 1, 5])
        assert [v.plus for v in ss(base)] == [F(2, 3), F(1, 6), F(1, 6)]
        assert [v.plus for v in ss(blocked)] == [F(5, 12), F(1, 12), F(1, 12), F(5, 12)]
        assert add_yes_blocker(base)[0] == blocked
        report = audit(base, "ss", "add-1")
        assert report.verdict == "fail"
        w = next(w for w in report.witnesses if w.players == (0, 1))
        assert (w.expected, w.actual) == (4, 5)
        info["detail"] = f"add-1 fails, ratio {w.expected} before vs {w.actual} after"


def test_4_postulate_property_suite():
    with criterion(4, "RM satisfies all twelve postulates") as info:
        start = time.perf_counter()
        games, specs = {}, 0
        for quota, weights, game in weighted_games(4, 5):
            specs += 1
            games.setdefault(game, (quota, weights))
        randoms = random_simple_games(5, 1000, seed=2024)
        failures, verdicts = [], {"pass": 0, "skipped": 0}
        for game in list(games) + randoms:
            for report in audit_all(game, "rm"):
                if report.verdict == "fail":
                    failures.append(report.to_json())
                else:
                    verdicts[report.verdict] += 1
        elapsed = time.perf_counter() - start
        assert not failures, failures[:3]
        assert verdicts["pass"] > 10 * verdicts["skipped"]
        assert elapsed < 300
        info["detail"] = (f"{specs} weighted specs ({len(games)} distinct games) + {len(randoms)} random n=5 games, "
                          f"{verdicts['pass']} pass, {verdicts['skipped']} skipped, 0 fail, {elapsed:.1f} s")


def test_5_oracle_equivalence():
    with criterion(5, "efficacy tables equal naive recursion and walk enumeration, n <= 4") as info:
        checked = 0
        for g in small_games():
            for i in range(g.n):
                plus, minus = alpha_table(g, i)
                for s in range(1 << g.n):
                    assert plus[s] == naive_alpha(g, i, s, "plus") == walk_hit_probability(g, i, s, "plus")
                    assert minus[s] == naive_alpha(g, i, s, "minus") == walk_hit_probability(g, i, s, "minus")
                    checked += 1
        info["detail"] = f"{len(small_games())} games, {checked} (player, division) pairs"


def test_6_penrose_banzhaf_cross_check():
    with criterion(6, "generalized PB equals swing count / 2^(n-1)") as info:
        games = small_games() + random_simple_games(5, 200, seed=6)
        for g in games:
            assert [v.total for v in pb(g)] == [F(swing_count(g, i), 2 ** (g.n - 1)) for i in range(g.n)]
        g = from_weighted(8, [5, 4, 3, 2])
        assert [F(swing_count(g, i), 8) for i in range(4)] == [F(5, 8), F(3, 8), F(3, 8), F(1, 8)]
        assert [v.total for v in pb(g)] == [F(5, 8), F(3, 8), F(3, 8), F(1, 8)]
        info["detail"] = f"{len(games)} games, {{8;5,4,3,2}} -> 5/8, 3/8, 3/8, 1/8"


def test_7_monte_carlo_convergence():
    from recpower.montecarlo import walk_estimate
    with criterion(7, "walk estimate of 13/24") as info:
        g = from_weighted(8, [5, 4, 3, 2])
        start = time.perf_counter()
        est = walk_estimate(g, 1, 0, "minus", 100_000, seed=20240601)
        elapsed = time.perf_counter() - start
        err = abs(float(est.estimate) - 13 / 24)
        assert err <= 3 * est.std_error
        assert err <= 0.02
        assert elapsed < 10
        info["detail"] = (f"{float(est.estimate):.5f} (|err| {err:.5f}, 3 sigma {3 * est.std_error:.5f}) "
                          f"in {elapsed:.2f} s")


def test_8_transform_identities():
    with criterion(8, "bloc = donation + dummy removal; added yes-blocker") as info:
        games = small_games()
        pairs = 0
        for g in games:
            for i in range(g.n):
                for j in range(g.n):
                    if i != j:
                        donated, _ = donate(g, j, i)
                        assert bloc(g, i, j)[0] == remove_dummy(donated, j)[0]
                        pairs += 1
        blocked, record = add_yes_blocker(from_weighted(3, [2, 1, 1]))
        assert blocked == from_weighted(8, [2, 1, 1, 5])
        assert record.index_map == {0: 0, 1: 1, 2: 2}
        info["detail"] = f"{pairs} ordered pairs over {len(games)} games; blocker game equals {{8;2,1,1,5}}"


@pytest.mark.slow
def test_rm_postulates_on_every_five_player_game():
    # exhaustive version of the random sweep: every simple game on 5 players
    for arr in all_simple_games(5):
        g = Game(5, arr)
        for p in POSTULATES:
            assert audit(g, "rm", p).verdict != "fail"


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-v", "-m", "not slow"]))
