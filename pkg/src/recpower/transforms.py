"""Game transformations: added dummy, donation, bloc, quarrel, added blockers.

Each returns ``(new_game, TransformRecord)``. Appended players (dummy,
blockers) take index ``n``; the record's ``index_map`` says where every
surviving original player ended up.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import IndexOutOfRange, InternalInvariant, NonSimpleResult, SamePlayer, VotingGameError
from .game import Game, all_masks, check_size, is_dummy, validate_simple

Kind = Literal["add_dummy", "donate", "bloc", "quarrel", "add_yes_blocker", "add_no_blocker", "remove_dummy"]


@dataclass(frozen=True)
class TransformRecord:
    kind: Kind
    params: tuple[int, ...]
    source_n: int
    result_n: int
    index_map: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": list(self.params),
            "source_n": self.source_n,
            "result_n": self.result_n,
            "index_map": {str(k): v for k, v in sorted(self.index_map.items())},
        }


def _identity(n: int) -> dict[int, int]:
    return {k: k for k in range(n)}


def _pair(game: Game, a: int, b: int) -> None:
    for p in (a, b):
        if not 0 <= p < game.n:
            raise IndexOutOfRange(f"player {p} outside 0..{game.n - 1}")
    if a == b:
        raise SamePlayer(f"transformation needs two distinct players, got {a} twice")


def _grown(game: Game) -> np.ndarray:
    """Winning array of ``game`` repeated over the two votes of a new top player."""
    check_size(game.n + 1)
    return np.concatenate([game.array, game.array])


def add_dummy(game: Game) -> tuple[Game, TransformRecord]:
    new = Game(game.n + 1, _grown(game))
    return new, TransformRecord("add_dummy", (game.n,), game.n, game.n + 1, _identity(game.n))


def add_yes_blocker(game: Game) -> tuple[Game, TransformRecord]:
    """New player wins only together with an old winning coalition."""
    check_size(game.n + 1)
    new = Game(game.n + 1, np.concatenate([np.zeros(1 << game.n, dtype=bool), game.array]))
    return new, TransformRecord("add_yes_blocker", (game.n,), game.n, game.n + 1, _identity(game.n))


def add_no_blocker(game: Game) -> tuple[Game, TransformRecord]:
    """New player's yes vote alone carries; otherwise the old rule applies."""
    check_size(game.n + 1)
    new = Game(game.n + 1, np.concatenate([game.array, np.ones(1 << game.n, dtype=bool)]))
    return new, TransformRecord("add_no_blocker", (game.n,), game.n, game.n + 1, _identity(game.n))


def _quadrants(game: Game, i: int, j: int):
    """Index arrays of S, S+i, S+j, S+i+j over all S avoiding i and j."""
    masks = all_masks(game.n)
    bi, bj = 1 << i, 1 << j
    s = masks[(masks & (bi | bj)) == 0]
    return s, s | bi, s | bj, s | bi | bj


def donate(game: Game, j: int, i: int) -> tuple[Game, TransformRecord]:
    """Player ``j`` hands its vote to player ``i``; ``j`` becomes a dummy."""
    _pair(game, i, j)
    w = game.array
    s, si, sj, sij = _quadrants(game, i, j)
    new = np.empty_like(w)
    new[sij] = w[sij]
    new[si] = w[sij]
    new[sj] = w[s]
    new[s] = w[s]
    result = Game(game.n, new)
    report = validate_simple(result)
    if not report:
        raise InternalInvariant(f"donation produced a non-simple game: {report.message}")
    return result, TransformRecord("donate", (j, i), game.n, game.n, _identity(game.n))


def _drop_player(arr: np.ndarray, n: int, k: int) -> np.ndarray:
    """Restrict a winning array to divisions in which player ``k`` votes no, then delete ``k``."""
    masks = all_masks(n - 1)
    low = masks & ((1 << k) - 1)
    high = (masks >> k) << (k + 1)
    return arr[low | high]


def _drop_map(n: int, k: int) -> dict[int, int]:
    return {p: (p if p < k else p - 1) for p in range(n) if p != k}


def remove_dummy(game: Game, d: int) -> tuple[Game, TransformRecord]:
    """Delete a dummy player (inverse of :func:`add_dummy` up to relabelling)."""
    if not 0 <= d < game.n:
        raise IndexOutOfRange(f"player {d} outside 0..{game.n - 1}")
    if game.n == 1:
        raise VotingGameError("cannot remove the only player")
    if not is_dummy(game, d):
        raise VotingGameError(f"player {d} is not a dummy")
    new = Game(game.n - 1, _drop_player(game.array, game.n, d))
    return new, TransformRecord("remove_dummy", (d,), game.n, game.n - 1, _drop_map(game.n, d))


def bloc(game: Game, i: int, j: int) -> tuple[Game, TransformRecord]:
    """Player ``i`` annexes ``j``; the bloc sits in ``i``'s slot after ``j`` is removed."""
    _pair(game, i, j)
    index_map = _drop_map(game.n, j)
    masks = all_masks(game.n - 1)
    # old division for each new one: the bloc's vote is cast by both i and j
    old = np.zeros_like(masks)
    for p, q in index_map.items():
        old |= ((masks >> q) & 1) << p
    old |= ((masks >> index_map[i]) & 1) << j
    new = Game(game.n - 1, game.array[old])
    return new, TransformRecord("bloc", (i, j), game.n, game.n - 1, index_map)


def quarrel(game: Game, i: int, j: int) -> tuple[Game, TransformRecord]:
    """Weak symmetric quarrel between ``i`` and ``j``.

    Raises :class:`NonSimpleResult` when the rules break unanimity, e.g. in
    a two-player unanimity game where no coalition survives.
    """
    _pair(game, i, j)
    w = game.array
    s, si, sj, sij = _quadrants(game, i, j)
    new = np.empty_like(w)
    new[sij] = w[si] | w[sj]
    new[s] = w[si] & w[sj]
    new[si] = w[si]
    new[sj] = w[sj]
    result = Game(game.n, new)
    report = validate_simple(result)
    if not report:
        if not report.monotone:
            raise InternalInvariant(f"quarrel produced a non-monotone game: {report.message}")
        raise NonSimpleResult(f"quarrel({i}, {j}) is not a simple game: {report.message}", report)
    return result, TransformRecord("quarrel", (i, j), game.n, game.n, _identity(game.n))


TRANSFORMS = {
    "add_dummy": (add_dummy, 0),
    "donate": (donate, 2),
    "bloc": (bloc, 2),
    "quarrel": (quarrel, 2),
    "add_yes_blocker": (add_yes_blocker, 0),
    "add_no_blocker": (add_no_blocker, 0),
}
