"""Simple voting games stored as full winning tables over bitmask divisions.

A division is an ``int`` whose bit ``i`` is set when player ``i`` votes yes.
Players are 0-indexed here; :func:`label` gives the 1-indexed names used in
human-facing output ("134", "∅").
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import (
    IndexOutOfRange,
    InvalidPermutation,
    NonMonotone,
    NonSimple,
    SamePlayer,
    SizeLimit,
)

DEFAULT_MAX_PLAYERS = 20
MAX_PLAYERS_ENV = "RECPOWER_MAX_PLAYERS"


def max_players() -> int:
    """Exact-mode player cap, overridable through ``RECPOWER_MAX_PLAYERS``."""
    raw = os.environ.get(MAX_PLAYERS_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_PLAYERS
    try:
        value = int(raw)
    except ValueError:
        raise SizeLimit(f"{MAX_PLAYERS_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise SizeLimit(f"{MAX_PLAYERS_ENV} must be positive, got {value}")
    return value


def check_size(n: int, what: str = "exact mode") -> None:
    cap = max_players()
    if n > cap:
        raise SizeLimit(f"{n} players exceeds the {what} cap of {cap}")


# -- division helpers -------------------------------------------------------

def mask_of(players: Iterable[int]) -> int:
    m = 0
    for p in players:
        m |= 1 << p
    return m


def players_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def label(mask: int, n: int | None = None) -> str:
    """1-indexed name of a division, e.g. ``label(0b1101) == "134"``.

    Digits are run together while every index fits in one digit, otherwise
    they are comma separated.
    """
    ps = players_of(mask)
    if not ps:
        return "∅"
    wide = (n is not None and n > 9) or ps[-1] >= 9
    sep = "," if wide else ""
    return sep.join(str(p + 1) for p in ps)


def parse_label(text: str) -> int:
    """Inverse of :func:`label` (also accepts "" and "0" style empties)."""
    text = text.strip()
    if text in ("", "∅", "{}", "-"):
        return 0
    parts = text.split(",") if "," in text else list(text)
    return mask_of(int(p) - 1 for p in parts if p.strip())


@lru_cache(maxsize=32)
def all_masks(n: int) -> np.ndarray:
    arr = np.arange(1 << n, dtype=np.int64)
    arr.setflags(write=False)
    return arr


# -- winning rules ----------------------------------------------------------

@dataclass(frozen=True)
class WeightedRule:
    """Point-query evaluator for a weighted game ``{quota; w1, ..., wn}``.

    Needs no 2^n table, so it is what the Monte Carlo walks use beyond the
    exact-mode cap.
    """

    quota: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise NonSimple("a weighted game needs at least one player")
        if any(w < 0 for w in self.weights):
            raise NonSimple("weights must be non-negative")
        if self.quota <= 0:
            raise NonSimple(f"quota {self.quota} lets the empty coalition win", witness=0)
        total = sum(self.weights)
        if total < self.quota:
            raise NonSimple(
                f"quota {self.quota} exceeds total weight {total}: grand coalition loses",
                witness=(1 << len(self.weights)) - 1,
            )

    @property
    def n(self) -> int:
        return len(self.weights)

    def wins(self, mask: int) -> bool:
        total = 0
        i = 0
        w = self.weights
        while mask:
            if mask & 1:
                total += w[i]
            mask >>= 1
            i += 1
        return total >= self.quota

    def winning_array(self) -> np.ndarray:
        masks = all_masks(self.n)
        sums = np.zeros(masks.shape, dtype=np.int64)
        for k, w in enumerate(self.weights):
            if w:
                sums += ((masks >> k) & 1) * w
        return sums >= self.quota

    def __str__(self):
        return f"{self.quota};" + ",".join(map(str, self.weights))


class Game:
    """Immutable simple voting game: ``n`` players plus the 2^n winning table.

    The constructor does not validate; use :func:`from_weighted`,
    :func:`from_winning_coalitions` or :func:`from_table` to get a game that
    is known to be simple.
    """

    __slots__ = ("n", "table", "_arr", "_hash")

    def __init__(self, n: int, table):
        if n < 1:
            raise SizeLimit("a game needs at least one player")
        check_size(n)
        if isinstance(table, np.ndarray):
            table = np.asarray(table, dtype=bool).astype(np.uint8).tobytes()
        else:
            table = bytes(bool(x) for x in table) if not isinstance(table, bytes) else table
        if len(table) != 1 << n:
            raise ValueError(f"winning table has {len(table)} entries, expected {1 << n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_arr", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Game is immutable")

    def __reduce__(self):
        return (Game, (self.n, self.table))

    def wins(self, mask: int) -> bool:
        return self.table[mask] != 0

    @property
    def array(self) -> np.ndarray:
        """Read-only boolean view of the winning table."""
        if self._arr is None:
            arr = np.frombuffer(self.table, dtype=np.uint8).astype(bool)
            arr.setflags(write=False)
            object.__setattr__(self, "_arr", arr)
        return self._arr

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def winning_coalitions(self) -> Iterator[int]:
        return (m for m in range(1 << self.n) if self.table[m])

    def minimal_winning(self) -> list[int]:
        t = self.table
        out = []
        for m in range(1 << self.n):
            if t[m] and all(not t[m & ~(1 << k)] for k in players_of(m)):
                out.append(m)
        return out

    def __eq__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return self.n == other.n and self.table == other.table

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.table)))
        return self._hash

    def __repr__(self):
        mins = ", ".join("{" + label(m, self.n) + "}" for m in self.minimal_winning()[:8])
        return f"Game(n={self.n}, minimal winning: {mins}{'...' if len(self.minimal_winning()) > 8 else ''})"


# -- construction -----------------------------------------------------------

def from_weighted(quota: int, weights: Sequence[int]) -> Game:
    rule = WeightedRule(quota, tuple(weights))
    check_size(rule.n)
    return Game(rule.n, rule.winning_array())


def from_table(n: int, table) -> Game:
    game = Game(n, table)
    validate_simple(game).raise_if_failed()
    return game


def from_winning_coalitions(n: int, coalitions: Iterable[Iterable[int]]) -> Game:
    check_size(n)
    table = bytearray(1 << n)
    for coalition in coalitions:
        members = list(coalition)
        for p in members:
            if not 0 <= p < n:
                raise IndexOutOfRange(f"player index {p} outside 0..{n - 1}")
        table[mask_of(members)] = 1
    return from_table(n, bytes(table))


def outcome(game: Game, division: int) -> bool:
    """True for a yes outcome."""
    return game.table[division] != 0


# -- validation -------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    monotone: bool = True
    unanimity: bool = True
    witness: tuple[int, ...] | int | None = None
    message: str = ""

    def __bool__(self):
        return self.ok

    def raise_if_failed(self):
        if self.ok:
            return
        if not self.monotone:
            raise NonMonotone(self.message, witness=self.witness)
        raise NonSimple(self.message, witness=self.witness)


def validate_simple(game: Game) -> ValidationReport:
    """Check monotonicity and unanimity, returning a witness on failure.

    Monotonicity is checked first, against single-bit supersets only,
    O(n 2^n).
    """
    arr = game.array
    masks = all_masks(game.n)
    for k in range(game.n):
        b = 1 << k
        low = masks[(masks & b) == 0]
        bad = np.flatnonzero(arr[low] & ~arr[low | b])
        if bad.size:
            s = int(low[bad[0]])
            return ValidationReport(
                False, monotone=False, witness=(s, s | b),
                message=f"monotonicity violated: {{{label(s, game.n)}}} wins "
                        f"but {{{label(s | b, game.n)}}} loses",
            )
    t = game.table
    if t[0]:
        return ValidationReport(False, unanimity=False, witness=0,
                                message="unanimity violated: the empty coalition wins")
    if not t[game.full]:
        return ValidationReport(False, unanimity=False, witness=game.full,
                                message="unanimity violated: the grand coalition loses")
    return ValidationReport(True)


# -- structure --------------------------------------------------------------

def _check_player(game: Game, i: int) -> None:
    if not 0 <= i < game.n:
        raise IndexOutOfRange(f"player {i} outside 0..{game.n - 1}")


def relabel(game: Game, permutation: Sequence[int]) -> Game:
    """Game in which old player ``i`` is renamed ``permutation[i]``."""
    perm = [int(p) for p in permutation]
    if sorted(perm) != list(range(game.n)):
        raise InvalidPermutation(f"{perm} is not a permutation of 0..{game.n - 1}")
    masks = all_masks(game.n)
    image = np.zeros_like(masks)
    for i, p in enumerate(perm):
        image |= ((masks >> i) & 1) << p
    new = np.empty(masks.shape, dtype=bool)
    new[image] = game.array
    return Game(game.n, new)


def is_dummy(game: Game, i: int) -> bool:
    _check_player(game, i)
    arr = game.array
    masks = all_masks(game.n)
    without = masks[(masks >> i) & 1 == 0]
    return bool(np.array_equal(arr[without], arr[without | (1 << i)]))


class BlockerStatus(NamedTuple):
    yes_blocker: bool
    no_blocker: bool


def blocker_status(game: Game, i: int) -> BlockerStatus:
    _check_player(game, i)
    arr = game.array
    masks = all_masks(game.n)
    without = masks[(masks >> i) & 1 == 0]
    return BlockerStatus(
        yes_blocker=not bool(arr[without].any()),
        no_blocker=bool(arr[without | (1 << i)].all()),
    )


class Dominance(NamedTuple):
    weak: bool
    strict: bool


def _weakly_dominates(game: Game, j: int, i: int) -> bool:
    arr = game.array
    masks = all_masks(game.n)
    rest = masks[(masks & ((1 << i) | (1 << j))) == 0]
    return not bool((arr[rest | (1 << i)] & ~arr[rest | (1 << j)]).any())


def dominance(game: Game, j: int, i: int) -> Dominance:
    """Does ``j`` dominate ``i``?"""
    _check_player(game, i)
    _check_player(game, j)
    if i == j:
        raise SamePlayer(f"dominance needs two distinct players, got {i} twice")
    weak = _weakly_dominates(game, j, i)
    return Dominance(weak, weak and not _weakly_dominates(game, i, j))
