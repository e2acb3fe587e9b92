"""Monte Carlo estimates of efficacy scores via uniform walks on the posets.

A yes-side walk starts at a winning division and repeatedly steps to a
uniformly chosen loyal child; it scores a hit as soon as the player is
yes-decisive at the current node (the start included). The no side is the
mirror image. Only point queries ``rule.wins(mask)`` are needed, so a
:class:`~recpower.game.WeightedRule` can stand in for a table when n is past
the exact-mode cap.

Randomness comes from numpy's PCG64 seeded through ``SeedSequence(seed,
spawn_key=(worker,))``; results are reproducible for a given (seed,
workers) pair.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .errors import IndexOutOfRange, SignMismatch, VotingGameError

Sign = Literal["plus", "minus"]

_BUFFER = 4096


def walk_rng(seed: int, worker: int = 0) -> np.random.Generator:
    if not 0 <= seed < 1 << 64:
        raise VotingGameError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(worker,))))


class _Uniforms:
    """Buffered U[0,1) draws; far cheaper than one generator call per step."""

    def __init__(self, rng: np.random.Generator):
        self.rng = rng
        self.buf = rng.random(_BUFFER)
        self.pos = 0

    def __call__(self) -> float:
        if self.pos == _BUFFER:
            self.buf = self.rng.random(_BUFFER)
            self.pos = 0
        u = self.buf[self.pos]
        self.pos += 1
        return u


def _walk_plus(rule, bi: int, bits, m: int, uniform) -> bool:
    wins = rule.wins
    while True:
        if not m & bi:
            return False  # player left the yes-set; descendants cannot contain it
        if not wins(m ^ bi):
            return True
        kids = [m ^ b for b in bits if m & b and wins(m ^ b)]
        if not kids:
            return False
        m = kids[int(uniform() * len(kids))]


def _walk_minus(rule, bi: int, bits, m: int, uniform) -> bool:
    wins = rule.wins
    while True:
        if m & bi:
            return False
        if wins(m | bi):
            return True
        kids = [m | b for b in bits if not m & b and not wins(m | b)]
        if not kids:
            return False
        m = kids[int(uniform() * len(kids))]


def _std_error(hits: int, trials: int) -> float:
    p = hits / trials
    return math.sqrt(p * (1 - p) / trials)


@dataclass(frozen=True)
class WalkEstimate:
    player: int
    division: int
    sign: Sign
    trials: int
    hits: int
    seed: int

    @property
    def estimate(self) -> Fraction:
        return Fraction(self.hits, self.trials)

    @property
    def std_error(self) -> float:
        """Normal-approximation standard error (approximate, float)."""
        return _std_error(self.hits, self.trials)


def _split(trials: int, workers: int) -> list[int]:
    return [trials // workers + (w < trials % workers) for w in range(workers)]


def _walk_chunk(rule, i, division, sign, trials, seed, worker) -> int:
    uniform = _Uniforms(walk_rng(seed, worker))
    bits = [1 << k for k in range(rule.n)]
    step = _walk_plus if sign == "plus" else _walk_minus
    bi = 1 << i
    return sum(step(rule, bi, bits, division, uniform) for _ in range(trials))


def _run(func, rule, args, trials, seed, workers):
    if workers < 1:
        raise VotingGameError("workers must be at least 1")
    chunks = _split(trials, workers)
    if workers == 1:
        return [func(rule, *args, chunks[0], seed, 0)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, rule, *args, c, seed, w) for w, c in enumerate(chunks)]
        return [f.result() for f in futures]


def walk_estimate(rule, i: int, division: int, sign: Sign, trials: int, seed: int,
                  workers: int = 1) -> WalkEstimate:
    """Fraction of ``trials`` uniform walks from ``division`` that hit a decisive node."""
    if not 0 <= i < rule.n:
        raise IndexOutOfRange(f"player {i} outside 0..{rule.n - 1}")
    if not 0 <= division < 1 << rule.n:
        raise IndexOutOfRange(f"division {division} outside the {rule.n}-player lattice")
    if trials < 1:
        raise VotingGameError("trials must be at least 1")
    if sign not in ("plus", "minus"):
        raise VotingGameError(f"sign must be 'plus' or 'minus', got {sign!r}")
    if rule.wins(division) != (sign == "plus"):
        side = "winning" if rule.wins(division) else "losing"
        raise SignMismatch(f"division is {side}; a {sign} walk needs a "
                           f"{'winning' if sign == 'plus' else 'losing'} start")
    hits = sum(_run(_walk_chunk, rule, (i, division, sign), trials, seed, workers))
    return WalkEstimate(i, division, sign, trials, hits, seed)


@dataclass(frozen=True)
class RMEstimate:
    """Sampled recursive measure: one uniform division and one walk per trial."""

    player: int
    trials: int
    hits_plus: int
    hits_minus: int
    seed: int

    @property
    def rm_plus(self) -> tuple[Fraction, float]:
        return Fraction(self.hits_plus, self.trials), _std_error(self.hits_plus, self.trials)

    @property
    def rm_minus(self) -> tuple[Fraction, float]:
        return Fraction(self.hits_minus, self.trials), _std_error(self.hits_minus, self.trials)

    @property
    def rm(self) -> tuple[Fraction, float]:
        hits = self.hits_plus + self.hits_minus
        return Fraction(hits, self.trials), _std_error(hits, self.trials)


def _random_division(rng: np.random.Generator, n: int) -> int:
    m = 0
    for start in range(0, n, 62):
        width = min(62, n - start)
        m |= int(rng.integers(0, 1 << width)) << start
    return m


def _rm_chunk(rule, i, trials, seed, worker) -> tuple[int, int]:
    rng = walk_rng(seed, worker)
    uniform = _Uniforms(rng)
    bits = [1 << k for k in range(rule.n)]
    bi = 1 << i
    plus = minus = 0
    for _ in range(trials):
        d = _random_division(rng, rule.n)
        if rule.wins(d):
            plus += _walk_plus(rule, bi, bits, d, uniform)
        else:
            minus += _walk_minus(rule, bi, bits, d, uniform)
    return plus, minus


def rm_estimate(rule, i: int, trials: int, seed: int, workers: int = 1) -> RMEstimate:
    """Unbiased a priori estimate of (RM+, RM-, RM) for player ``i``."""
    if not 0 <= i < rule.n:
        raise IndexOutOfRange(f"player {i} outside 0..{rule.n - 1}")
    if trials < 1:
        raise VotingGameError("trials must be at least 1")
    parts = _run(_rm_chunk, rule, (i,), trials, seed, workers)
    return RMEstimate(i, trials, sum(p for p, _ in parts), sum(q for _, q in parts), seed)
