import numpy as np
import pytest
from hypothesis import given

from helpers import d, simple_games
from recpower import (
    Game, add_dummy, add_no_blocker, add_yes_blocker, bloc, blocker_status, donate,
    from_weighted, from_winning_coalitions, is_dummy, quarrel, rm, validate_simple,
)
from recpower.errors import NonSimpleResult, SamePlayer
from recpower.transforms import remove_dummy


def test_add_dummy(ss_game):
    g, rec = add_dummy(ss_game)
    assert g == from_weighted(3, [2, 1, 1, 0])
    assert is_dummy(g, 3)
    assert rec.kind == "add_dummy" and rec.result_n == 4
    assert [v.total for v in rm(g)[:3]] == [v.total for v in rm(ss_game)]


def test_donate_example(example_game):
    g, rec = donate(example_game, 3, 2)
    assert g == from_weighted(8, [5, 4, 5, 0])
    assert is_dummy(g, 3)
    assert rec.params == (3, 2)


def test_donate_recipient_gains(example_game):
    before = rm(example_game)
    g, _ = donate(example_game, 3, 2)
    assert rm(g)[2].total >= max(before[2].total, before[3].total)


def test_same_player_rejected(example_game):
    for op in (donate, bloc, quarrel):
        with pytest.raises(SamePlayer):
            op(example_game, 1, 1)


def test_bloc_example(example_game):
    g, rec = bloc(example_game, 2, 3)
    assert g == from_weighted(8, [5, 4, 5])
    assert rec.index_map == {0: 0, 1: 1, 2: 2}


def test_bloc_with_dummy():
    g = from_weighted(4, [2, 2, 1])
    merged, rec = bloc(g, 0, 2)
    assert rm(merged)[rec.index_map[0]].total == rm(g)[0].total


def test_bloc_annexer_above_annexed(example_game):
    g, rec = bloc(example_game, 3, 0)
    assert rec.index_map == {1: 0, 2: 1, 3: 2}
    assert g == from_weighted(8, [4, 3, 7])


def test_quarrel_example(example_game):
    g, _ = quarrel(example_game, 2, 3)
    changed = [s for s in range(16) if g.wins(s) != example_game.wins(s)]
    assert changed == [d("234")]


def test_quarrel_unanimity_two_players():
    g = from_winning_coalitions(2, [{0, 1}])
    with pytest.raises(NonSimpleResult) as exc:
        quarrel(g, 0, 1)
    assert not exc.value.report.unanimity


def test_quarrel_does_not_raise_power(example_game):
    before = rm(example_game)
    after = rm(quarrel(example_game, 2, 3)[0])
    assert after[2].total <= before[2].total and after[3].total <= before[3].total


def test_add_yes_blocker_example(ss_game):
    g, rec = add_yes_blocker(ss_game)
    assert g == from_weighted(8, [2, 1, 1, 5])
    assert rec.index_map == {0: 0, 1: 1, 2: 2}
    assert blocker_status(g, 3).yes_blocker


def test_add_no_blocker_example(ss_game):
    g, _ = add_no_blocker(ss_game)
    assert g.wins(1 << 3)
    assert blocker_status(g, 3).no_blocker
    for s in range(8):
        if not ss_game.wins(s):
            assert not g.wins(s)


@given(simple_games(max_n=4))
def test_outputs_are_simple(game):
    outs = [add_dummy(game)[0], add_yes_blocker(game)[0], add_no_blocker(game)[0]]
    for i in range(game.n):
        for j in range(game.n):
            if i == j:
                continue
            outs += [donate(game, j, i)[0], bloc(game, i, j)[0]]
            try:
                outs.append(quarrel(game, i, j)[0])
            except NonSimpleResult:
                pass
    assert all(validate_simple(g).ok for g in outs)


@given(simple_games(min_n=2, max_n=5))
def test_donate_rules(game):
    for j in range(game.n):
        for i in range(game.n):
            if i == j:
                continue
            g, _ = donate(game, j, i)
            bi, bj = 1 << i, 1 << j
            assert is_dummy(g, j)
            for s in range(1 << game.n):
                if s & (bi | bj):
                    continue
                assert g.wins(s | bj) == game.wins(s)
                assert g.wins(s | bi) == game.wins(s | bi | bj)


@given(simple_games(min_n=2, max_n=5))
def test_quarrel_excluded_patterns(game):
    for i in range(game.n):
        for j in range(i + 1, game.n):
            try:
                g, _ = quarrel(game, i, j)
            except NonSimpleResult:
                continue
            bi, bj = 1 << i, 1 << j
            for s in range(1 << game.n):
                if s & (bi | bj):
                    continue
                assert not (not g.wins(s | bi) and not g.wins(s | bj) and g.wins(s | bi | bj))
                assert not (g.wins(s | bi) and g.wins(s | bj) and not g.wins(s))


@given(simple_games(min_n=2, max_n=5))
def test_bloc_is_donation_then_removal(game):
    for i in range(game.n):
        for j in range(game.n):
            if i != j:
                donated, _ = donate(game, j, i)
                assert bloc(game, i, j)[0] == remove_dummy(donated, j)[0]


@given(simple_games(max_n=4))
def test_yes_blocker_restriction(game):
    g, _ = add_yes_blocker(game)
    top = 1 << game.n
    assert [g.wins(s | top) for s in range(top)] == [game.wins(s) for s in range(top)]
    assert sum(g.array) == sum(game.array)


def test_remove_dummy_inverts_add_dummy(example_game):
    g, _ = add_dummy(example_game)
    assert remove_dummy(g, 4)[0] == example_game


def test_transforms_do_not_mutate(example_game):
    snapshot = np.array(example_game.array)
    donate(example_game, 2, 1)
    quarrel(example_game, 1, 2)
    bloc(example_game, 1, 2)
    assert np.array_equal(snapshot, example_game.array)
    assert isinstance(example_game, Game)
