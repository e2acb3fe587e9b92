"""Implicit navigation of the division lattice.

Nothing is materialized: loyal children are read off the winning rule in
O(n). Works with a :class:`~recpower.game.Game` or any object exposing ``n``
and ``wins(mask)`` (e.g. :class:`~recpower.game.WeightedRule`).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Protocol

Side = Literal["yes", "no"]


class WinningRule(Protocol):
    n: int

    def wins(self, mask: int) -> bool: ...


@dataclass(frozen=True)
class LoyalChildSet:
    parent: int
    children: tuple[int, ...]
    side: Side

    def __len__(self):
        return len(self.children)

    def __iter__(self):
        return iter(self.children)


def loyal_children(rule: WinningRule, division: int) -> LoyalChildSet:
    """Same-outcome neighbours with one fewer voter on the outcome side.

    For a winning division these are the winning ``S - {k}``; for a losing
    one the losing ``S + {k}`` (the no-poset is read upside down).
    """
    if rule.wins(division):
        kids = tuple(
            division ^ (1 << k)
            for k in range(rule.n)
            if division >> k & 1 and rule.wins(division ^ (1 << k))
        )
        return LoyalChildSet(division, kids, "yes")
    kids = tuple(
        division | (1 << k)
        for k in range(rule.n)
        if not division >> k & 1 and not rule.wins(division | (1 << k))
    )
    return LoyalChildSet(division, kids, "no")


def covering_edges(n: int):
    """All (lower, upper) covering pairs of the full lattice, n 2^(n-1) of them."""
    for m in range(1 << n):
        for k in range(n):
            if not m >> k & 1:
                yield m, m | (1 << k)
