"""Decisiveness and the recursive yes/no efficacy scores.

Each (player, sign) table is filled in one pass over the bitmasks. Yes-side
loyal children are numerically smaller than their parent and no-side ones
larger, so ascending order for the yes side and descending order for the no
side are topological orders; no call-stack recursion is involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, NamedTuple, Sequence

import numpy as np

from .errors import IndexOutOfRange, InternalInvariant
from .game import Game, all_masks, check_size

Sign = Literal["plus", "minus"]

ZERO = Fraction(0)
ONE = Fraction(1)


class Decisiveness(NamedTuple):
    yes_decisive: bool
    no_decisive: bool

    def __bool__(self):
        return self.yes_decisive or self.no_decisive


def decisive(game, i: int, division: int) -> Decisiveness:
    b = 1 << i
    if division & b:
        return Decisiveness(game.wins(division) and not game.wins(division ^ b), False)
    return Decisiveness(False, not game.wins(division) and game.wins(division | b))


@dataclass(frozen=True, eq=False)
class EfficacyTable:
    """Dense scores of one player for one sign, indexed by division bitmask."""

    player: int
    sign: Sign
    values: Sequence  # ints 0/1 or Fractions

    def __getitem__(self, division: int) -> Fraction:
        v = self.values[division]
        return v if isinstance(v, Fraction) else (ONE if v else ZERO)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return (self[m] for m in range(len(self.values)))

    def total(self) -> Fraction:
        """Sum over all divisions (times 1/2^n this is the a priori power)."""
        return Fraction(sum(self.values))

    def __eq__(self, other):
        if not isinstance(other, EfficacyTable):
            return NotImplemented
        return (self.player, self.sign) == (other.player, other.sign) and list(self) == list(other)


def _fill_plus(game: Game, i: int, recursive: bool) -> list:
    t = game.table
    size = 1 << game.n
    bi = 1 << i
    bits = [1 << k for k in range(game.n)]
    vals: list = [0] * size
    for m in range(bi, size):
        if not m & bi or not t[m]:
            continue
        if not t[m ^ bi]:
            vals[m] = 1
            continue
        if not recursive:
            continue
        total = 0
        count = 0
        for b in bits:
            if m & b and t[m ^ b]:
                total += vals[m ^ b]
                count += 1
        if count == 0:
            raise InternalInvariant(f"winning division {m:b} has no loyal children")
        if total:
            vals[m] = total / count if isinstance(total, Fraction) else Fraction(total, count)
    return vals


def _fill_minus(game: Game, i: int, recursive: bool) -> list:
    t = game.table
    size = 1 << game.n
    bi = 1 << i
    bits = [1 << k for k in range(game.n)]
    vals: list = [0] * size
    for m in range(size - 1, -1, -1):
        if m & bi or t[m]:
            continue
        if t[m | bi]:
            vals[m] = 1
            continue
        if not recursive:
            continue
        total = 0
        count = 0
        for b in bits:
            if not m & b and not t[m | b]:
                total += vals[m | b]
                count += 1
        if count == 0:
            raise InternalInvariant(f"losing division {m:b} has no loyal children")
        if total:
            vals[m] = total / count if isinstance(total, Fraction) else Fraction(total, count)
    return vals


@lru_cache(maxsize=512)
def _tables(game: Game, i: int, recursive: bool) -> tuple[EfficacyTable, EfficacyTable]:
    return (
        EfficacyTable(i, "plus", _fill_plus(game, i, recursive)),
        EfficacyTable(i, "minus", _fill_minus(game, i, recursive)),
    )


def alpha_table(game: Game, i: int, *, recursive: bool = True) -> tuple[EfficacyTable, EfficacyTable]:
    """Exact (plus, minus) efficacy tables for player ``i``.

    With ``recursive=False`` the averaging case scores 0, which gives the
    decisiveness indicator used by Penrose-Banzhaf.
    """
    if not 0 <= i < game.n:
        raise IndexOutOfRange(f"player {i} outside 0..{game.n - 1}")
    check_size(game.n)
    return _tables(game, i, recursive)


def alpha_plus(game: Game, i: int, division: int) -> Fraction:
    return alpha_table(game, i)[0][division]


def alpha_minus(game: Game, i: int, division: int) -> Fraction:
    return alpha_table(game, i)[1][division]


def alpha(game: Game, i: int, division: int) -> Fraction:
    plus, minus = alpha_table(game, i)
    return plus[division] + minus[division]


def clear_cache() -> None:
    _tables.cache_clear()


# -- floating point mode ----------------------------------------------------

@lru_cache(maxsize=8)
def _layers(n: int) -> list[np.ndarray]:
    masks = all_masks(n)
    pc = np.zeros(masks.shape, dtype=np.int8)
    for k in range(n):
        pc += ((masks >> k) & 1).astype(np.int8)
    return [masks[pc == c] for c in range(n + 1)]


def alpha_table_float(winning: np.ndarray, i: int) -> tuple[np.ndarray, np.ndarray]:
    """Approximate (float64) efficacy tables from a boolean winning array.

    Vectorized by popcount layer; meant for games past the exact-mode cap
    whose winning array still fits in memory.
    """
    winning = np.asarray(winning, dtype=bool)
    n = winning.size.bit_length() - 1
    if winning.size != 1 << n or not 0 <= i < n:
        raise IndexOutOfRange(f"bad winning array size {winning.size} or player {i}")
    bi = 1 << i
    layers = _layers(n)
    plus = np.zeros(winning.size)
    minus = np.zeros(winning.size)
    for c in range(1, n + 1):
        layer = layers[c]
        m = layer[((layer & bi) != 0) & winning[layer]]
        plus[m] = _layer_average(winning, plus, m, n, bi, yes_side=True)
    for c in range(n - 1, -1, -1):
        layer = layers[c]
        m = layer[((layer & bi) == 0) & ~winning[layer]]
        minus[m] = _layer_average(winning, minus, m, n, bi, yes_side=False)
    return plus, minus


def _layer_average(winning, vals, m, n, bi, yes_side):
    if m.size == 0:
        return np.zeros(0)
    if yes_side:
        dec = ~winning[m ^ bi]
    else:
        dec = winning[m | bi]
    total = np.zeros(m.size)
    count = np.zeros(m.size)
    for k in range(n):
        b = 1 << k
        if yes_side:
            child = m ^ b
            ok = ((m & b) != 0) & winning[child]
        else:
            child = m | b
            ok = ((m & b) == 0) & ~winning[child]
        total += np.where(ok, vals[child], 0.0)
        count += ok
    avg = np.divide(total, count, out=np.zeros(m.size), where=count > 0)
    return np.where(dec, 1.0, avg)
