from fractions import Fraction as F

import numpy as np
import pytest

from helpers import d
from recpower import alpha_minus, alpha_plus, from_weighted, rm
from recpower.errors import SignMismatch
from recpower.game import Game, WeightedRule
from recpower.generate import random_simple_game
from recpower.montecarlo import rm_estimate, walk_estimate, walk_rng

GOLDEN_SEED0 = [
    0.9429375528828794, 0.3163371523854981, 0.7223425886498254, 0.12560308543269327,
    0.42297636251497006, 0.6480380975872828, 0.05667724203060187, 0.8189170364051791,
    0.26869672058841676, 0.6792473568670983,
]


def test_generator_sequence_is_frozen():
    assert walk_rng(0).random(10).tolist() == GOLDEN_SEED0
    assert walk_rng(12345, 1).random(3).tolist() == [0.37707540876459267, 0.6895475248090975, 0.7434723509594571]


def test_workers_get_distinct_streams():
    assert walk_rng(5, 0).random() != walk_rng(5, 1).random()


def test_estimate_near_exact(example_game):
    est = walk_estimate(example_game, 1, 0, "minus", 20_000, seed=1)
    target = alpha_minus(example_game, 1, 0)
    assert target == F(13, 24)
    assert abs(float(est.estimate) - float(target)) <= 3 * est.std_error


def test_reproducible(example_game):
    a = walk_estimate(example_game, 1, 0, "minus", 1000, seed=7)
    b = walk_estimate(example_game, 1, 0, "minus", 1000, seed=7)
    assert a == b and a.hits == 542


def test_weighted_rule_gives_same_walks(example_game):
    rule = WeightedRule(8, (5, 4, 3, 2))
    assert walk_estimate(rule, 1, 0, "minus", 500, seed=3) == walk_estimate(example_game, 1, 0, "minus", 500, seed=3)


def test_decisive_start_is_certain(example_game):
    assert walk_estimate(example_game, 1, d("12"), "plus", 50, seed=0).estimate == 1
    assert walk_estimate(example_game, 1, d("1"), "minus", 50, seed=0).estimate == 1


def test_absent_player_plus_is_zero(example_game):
    assert walk_estimate(example_game, 1, d("134"), "plus", 200, seed=0).estimate == 0


def test_sign_mismatch(example_game):
    with pytest.raises(SignMismatch):
        walk_estimate(example_game, 1, 0, "plus", 10, seed=0)
    with pytest.raises(SignMismatch):
        walk_estimate(example_game, 1, example_game.full, "minus", 10, seed=0)


def test_estimate_is_in_unit_interval(example_game):
    est = walk_estimate(example_game, 2, d("1234"), "plus", 300, seed=9)
    assert 0 <= est.hits <= est.trials
    assert 0 <= est.estimate <= 1


def test_dummy_rm_estimate_zero():
    g = from_weighted(4, [2, 2, 1])
    est = rm_estimate(g, 2, 2000, seed=0)
    assert est.hits_plus == est.hits_minus == 0
    assert est.rm == (0, 0.0)


def test_rm_estimate_example_game(example_game):
    est = rm_estimate(example_game, 1, 40_000, seed=2)
    value, err = est.rm
    assert abs(float(value) - 53 / 96) <= 3 * err


def test_random_ten_player_game_within_three_sigma():
    game = random_simple_game(10, np.random.default_rng(11))
    exact = rm(game)
    for i in (0, 5):
        est = rm_estimate(game, i, 20_000, seed=4)
        for (value, err), want in zip((est.rm_plus, est.rm_minus, est.rm), exact[i]):
            assert abs(float(value) - float(want)) <= 3 * err + 1e-12


def test_point_estimates_beyond_exact_cap(monkeypatch):
    monkeypatch.setenv("RECPOWER_MAX_PLAYERS", "8")
    rule = WeightedRule(13, (1,) * 25)
    est = walk_estimate(rule, 0, 0, "minus", 500, seed=0)
    assert 0 < est.hits <= 500


def test_workers_merge(example_game):
    est = walk_estimate(example_game, 1, 0, "minus", 4001, seed=5, workers=3)
    assert est.trials == 4001
    again = walk_estimate(example_game, 1, 0, "minus", 4001, seed=5, workers=3)
    assert est == again
    assert abs(float(est.estimate) - 13 / 24) <= 3 * est.std_error


def test_alpha_plus_estimate_matches(example_game):
    est = walk_estimate(example_game, 1, d("1234"), "plus", 20_000, seed=8)
    assert abs(float(est.estimate) - float(alpha_plus(example_game, 1, d("1234")))) <= 3 * est.std_error


