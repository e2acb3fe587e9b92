"""Game generators for property checks and demos."""
from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .game import Game, all_masks, from_weighted


def weighted_games(max_n: int, max_weight: int, *, min_weight: int = 1,
                   distinct: bool = False) -> Iterator[tuple[int, tuple[int, ...], Game]]:
    """Every ``{q; w1..wn}`` with n <= max_n, weights in [min_weight, max_weight], 1 <= q <= sum.

    With ``distinct=True`` games with an identical winning table are yielded once.
    """
    seen = set()
    for n in range(1, max_n + 1):
        for weights in itertools.product(range(min_weight, max_weight + 1), repeat=n):
            for quota in range(1, sum(weights) + 1):
                game = from_weighted(quota, weights)
                if distinct:
                    if game in seen:
                        continue
                    seen.add(game)
                yield quota, weights, game


def upward_closure(n: int, generators) -> np.ndarray:
    masks = all_masks(n)
    winning = np.zeros(masks.shape, dtype=bool)
    for g in generators:
        winning |= (masks & g) == g
    return winning


def random_simple_game(n: int, rng: np.random.Generator, max_generators: int | None = None) -> Game:
    """Upward closure of a few random non-empty coalitions (plus the grand coalition).

    Closure guarantees monotonicity; excluding the empty set from the
    generators guarantees the empty coalition loses.
    """
    full = (1 << n) - 1
    k = int(rng.integers(1, (max_generators or 2 * n) + 1))
    # coalition sizes spread over 1..n so both sparse and dense games appear
    gens = []
    for _ in range(k):
        size = int(rng.integers(1, n + 1))
        members = rng.choice(n, size=size, replace=False)
        gens.append(int(sum(1 << int(p) for p in members)))
    gens.append(full)
    return Game(n, upward_closure(n, gens))


def random_simple_games(n: int, count: int, seed: int) -> list[Game]:
    rng = np.random.default_rng(seed)
    return [random_simple_game(n, rng) for _ in range(count)]
