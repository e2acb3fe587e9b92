"""Power measures: the recursive measure, Penrose-Banzhaf and Shapley-Shubik.

All values are exact :class:`fractions.Fraction`. ``profile=None`` means
the a priori case, every division having weight 1/2^n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple, Sequence

import numpy as np

from .efficacy import alpha_table, alpha_table_float
from .efficacy import clear_cache as _clear_tables
from .errors import VotingGameError
from .game import Game, check_size


class VoteProfile:
    """Independent per-player yes-probabilities."""

    __slots__ = ("yes_prob",)

    def __init__(self, yes_prob: Sequence):
        probs = tuple(Fraction(p) for p in yes_prob)
        for p in probs:
            if not 0 <= p <= 1:
                raise VotingGameError(f"yes-probability {p} outside [0, 1]")
        object.__setattr__(self, "yes_prob", probs)

    def __setattr__(self, name, value):
        raise AttributeError("VoteProfile is immutable")

    @classmethod
    def equiprobable(cls, n: int) -> "VoteProfile":
        return cls([Fraction(1, 2)] * n)

    @property
    def n(self) -> int:
        return len(self.yes_prob)

    def is_equiprobable(self) -> bool:
        return all(p == Fraction(1, 2) for p in self.yes_prob)

    def __eq__(self, other):
        return isinstance(other, VoteProfile) and self.yes_prob == other.yes_prob

    def __hash__(self):
        return hash(self.yes_prob)

    def __repr__(self):
        return f"VoteProfile({[str(p) for p in self.yes_prob]})"


def division_probability(profile: VoteProfile, division: int) -> Fraction:
    prob = Fraction(1)
    for i, p in enumerate(profile.yes_prob):
        prob *= p if division >> i & 1 else 1 - p
    return prob


@lru_cache(maxsize=64)
def division_weights(profile: VoteProfile) -> tuple[Fraction, ...]:
    """ℙ(S) for every division, built by doubling one player at a time."""
    weights = [Fraction(1)]
    for p in profile.yes_prob:
        q = 1 - p
        weights = [w * q for w in weights] + [w * p for w in weights]
    return tuple(weights)


class SignedPower(NamedTuple):
    plus: Fraction
    minus: Fraction
    total: Fraction


def _resolve(game: Game, profile: VoteProfile | None) -> VoteProfile | None:
    if profile is None:
        return None
    if profile.n != game.n:
        raise VotingGameError(f"profile has {profile.n} entries for a {game.n}-player game")
    return None if profile.is_equiprobable() else profile


def _weighted_sum(values, weights) -> Fraction:
    return sum((w * v for v, w in zip(values, weights) if v), Fraction(0))


@lru_cache(maxsize=4096)
def _efficacy_power(game: Game, profile: VoteProfile | None, recursive: bool) -> tuple[SignedPower, ...]:
    out = []
    scale = Fraction(1, 1 << game.n)
    weights = division_weights(profile) if profile is not None else None
    for i in range(game.n):
        plus_t, minus_t = alpha_table(game, i, recursive=recursive)
        if weights is None:
            plus = plus_t.total() * scale
            minus = minus_t.total() * scale
        else:
            plus = _weighted_sum(plus_t.values, weights)
            minus = _weighted_sum(minus_t.values, weights)
        out.append(SignedPower(plus, minus, plus + minus))
    return tuple(out)


def rm(game: Game, profile: VoteProfile | None = None) -> list[SignedPower]:
    """Recursive measure per player: (RM+, RM-, RM)."""
    check_size(game.n)
    return list(_efficacy_power(game, _resolve(game, profile), True))


def pb(game: Game, profile: VoteProfile | None = None) -> list[SignedPower]:
    """Generalized Penrose-Banzhaf per player: (PB+, PB-, PB).

    Under the a priori profile PB+ = PB- and PB equals swings / 2^(n-1).
    """
    check_size(game.n)
    return list(_efficacy_power(game, _resolve(game, profile), False))


def swing_counts(game: Game) -> list[int]:
    """Number of winning divisions in which each player is yes-decisive."""
    arr = game.array
    out = []
    for i in range(game.n):
        b = 1 << i
        idx = np.arange(1 << game.n)
        with_i = idx[(idx & b) != 0]
        out.append(int((arr[with_i] & ~arr[with_i ^ b]).sum()))
    return out


def pb_shortcut(game: Game) -> list[Fraction]:
    denom = 1 << (game.n - 1)
    return [Fraction(c, denom) for c in swing_counts(game)]


@lru_cache(maxsize=4096)
def _ss(game: Game) -> tuple[SignedPower, ...]:
    n = game.n
    nf = factorial(n)
    # weight of a yes-swing at S (i in S): |S-i|! (n-|S|)! / n!
    coef = [Fraction(factorial(s) * factorial(n - s - 1), nf) for s in range(n)]
    t = game.table
    plus = [0] * n
    minus = [0] * n
    popcount = [bin(m).count("1") for m in range(1 << n)]
    for m in range(1, 1 << n):
        if not t[m]:
            continue
        size = popcount[m]
        for i in range(n):
            b = 1 << i
            if m & b and not t[m ^ b]:
                # yes-pivot after the |S|-1 others; no-pivot after the n-|S| outsiders
                plus[i] += coef[size - 1]
                minus[i] += coef[n - size]
    return tuple(SignedPower(Fraction(p), Fraction(q), Fraction(p + q)) for p, q in zip(plus, minus))


def clear_cache() -> None:
    """Drop memoized efficacy tables and power values."""
    _clear_tables()
    _efficacy_power.cache_clear()
    _ss.cache_clear()


def ss(game: Game) -> list[SignedPower]:
    """Shapley-Shubik per player: (SS+, SS-, SS+ + SS-), by coalition counting."""
    check_size(game.n)
    return list(_ss(game))


# -- float mode -------------------------------------------------------------

def rm_approx(rule, profile: Sequence[float] | None = None) -> list[tuple[float, float, float]]:
    """Floating-point recursive measure for games past the exact cap.

    ``rule`` is a :class:`Game` or :class:`WeightedRule`; the winning array
    is still materialized, so memory is O(2^n). Results are approximate.
    """
    winning = rule.array if isinstance(rule, Game) else rule.winning_array()
    n = rule.n
    if profile is None:
        weights = np.full(1 << n, 1.0 / (1 << n))
    else:
        weights = np.ones(1)
        for p in profile:
            weights = np.concatenate([weights * (1 - p), weights * p])
    out = []
    for i in range(n):
        plus, minus = alpha_table_float(winning, i)
        a, b = float(plus @ weights), float(minus @ weights)
        out.append((a, b, a + b))
    return out


# -- report -----------------------------------------------------------------

MEASURES = ("rm", "pb", "ss")


@dataclass
class PowerReport:
    """Per-player power values for any subset of the three measures."""

    n: int
    rm: list[SignedPower] | None = None
    pb: list[SignedPower] | None = None
    ss: list[SignedPower] | None = None
    profile: VoteProfile | None = None
    names: list[str] = field(default_factory=list)

    def rows(self):
        for i in range(self.n):
            row = {"player": self.names[i] if self.names else str(i + 1)}
            for name in MEASURES:
                values = getattr(self, name)
                if values is None:
                    continue
                v = values[i]
                row[f"{name}_plus"] = v.plus
                row[f"{name}_minus"] = v.minus
                row[name] = v.total
            yield row


def power_report(game: Game, measures=MEASURES, profile: VoteProfile | None = None,
                 names: Sequence[str] | None = None) -> PowerReport:
    unknown = set(measures) - set(MEASURES)
    if unknown:
        raise VotingGameError(f"unknown measure(s): {', '.join(sorted(unknown))}")
    if "ss" in measures and profile is not None and not profile.is_equiprobable():
        raise VotingGameError("Shapley-Shubik is defined for the a priori profile only")
    report = PowerReport(game.n, profile=profile, names=list(names or []))
    if "rm" in measures:
        report.rm = rm(game, profile)
    if "pb" in measures:
        report.pb = pb(game, profile)
    if "ss" in measures:
        report.ss = ss(game)
    return report
