"""Audit harness for the voting-power postulates.

``audit(game, "rm", "don-1")`` applies the relevant transformation(s),
recomputes the measure and compares exact values, collecting a witness for
every violated instance. All comparisons are between Fractions; the ratio
postulates cross-multiply.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import NonSimpleResult, UnsupportedCombination
from .formats import rational_str
from .game import Game, dominance, is_dummy, label, relabel
from .measures import SignedPower, pb, rm, ss
from .transforms import add_dummy, add_no_blocker, add_yes_blocker, bloc, donate, quarrel

POSTULATES = (
    "iso", "dum-1", "dum-2", "dum-3", "dom-1", "dom-2",
    "don-1", "bloc-1", "quar-1", "quar-2", "add-1", "add-2",
)
# rejected formulation of the added-blocker postulate, kept for demonstration only
EXTRA_POSTULATES = ("add-0",)

MEASURE_FUNCS: dict[str, Callable[[Game], list[SignedPower]]] = {"rm": rm, "pb": pb, "ss": ss}

MeasureLike = Union[str, Callable[[Game], Sequence]]


@dataclass
class Witness:
    players: tuple[int, ...]
    expected: Fraction | str | None = None
    actual: Fraction | str | None = None
    divisions: tuple[int, ...] = ()
    detail: str = ""

    def to_dict(self, n: int | None = None) -> dict:
        def fmt(v):
            if isinstance(v, (Fraction, int)):
                return rational_str(v)
            return v

        return {
            "players": [p + 1 for p in self.players],
            "divisions": [label(d, n) for d in self.divisions],
            "expected": fmt(self.expected),
            "actual": fmt(self.actual),
            "detail": self.detail,
        }


@dataclass
class AuditReport:
    postulate: str
    measure: str
    game: str
    n: int
    verdict: str = "pass"
    witnesses: list[Witness] = field(default_factory=list)
    checked: int = 0
    skipped: list[tuple[tuple[int, ...], str]] = field(default_factory=list)
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict != "fail"

    def _fail(self, witness: Witness) -> None:
        self.witnesses.append(witness)

    def _finish(self) -> "AuditReport":
        if self.witnesses:
            self.verdict = "fail"
        elif self.checked == 0:
            self.verdict = "skipped"
            if not self.reason:
                self.reason = "no applicable instances"
        else:
            self.verdict = "pass"
        return self

    def to_dict(self) -> dict:
        return {
            "postulate": self.postulate,
            "measure": self.measure,
            "game": self.game,
            "verdict": self.verdict,
            "checked": self.checked,
            "reason": self.reason,
            "witnesses": [w.to_dict(self.n) for w in self.witnesses],
            "skipped": [{"players": [p + 1 for p in ps], "reason": r} for ps, r in self.skipped],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def describe(game: Game) -> str:
    return "min-winning: " + " ".join(label(m, game.n) for m in game.minimal_winning())


class _Measure:
    """Uniform access to a measure's total and, when available, signed parts."""

    def __init__(self, measure: MeasureLike):
        if isinstance(measure, str):
            if measure not in MEASURE_FUNCS:
                raise UnsupportedCombination(f"unknown measure {measure!r}")
            self.name = measure
            self.func = MEASURE_FUNCS[measure]
        else:
            self.name = getattr(measure, "__name__", "custom")
            self.func = measure

    def values(self, game: Game) -> list:
        return list(self.func(game))

    def total(self, game: Game) -> list[Fraction]:
        return [v.total if isinstance(v, SignedPower) else Fraction(v) for v in self.values(game)]

    def signed(self, game: Game, which: str, postulate: str) -> list[Fraction]:
        vals = self.values(game)
        if not all(isinstance(v, SignedPower) for v in vals):
            raise UnsupportedCombination(
                f"{postulate} needs yes/no components, which measure {self.name!r} does not provide")
        return [getattr(v, which) for v in vals]


def _ordered_pairs(n: int):
    return itertools.permutations(range(n), 2)


def _permutations(n: int, exhaustive_n: int, samples: int, seed: int):
    if n <= exhaustive_n:
        yield from itertools.permutations(range(n))
        return
    rng = random.Random(seed)
    yield tuple(range(n))
    for _ in range(samples):
        perm = list(range(n))
        rng.shuffle(perm)
        yield tuple(perm)


def audit(game: Game, measure: MeasureLike, postulate: str, *, description: str | None = None,
          iso_samples: int = 50, iso_exhaustive_n: int = 5, seed: int = 0) -> AuditReport:
    """Check one postulate for one measure on one game (a priori profile).

    Verdict is ``fail`` when any instance is violated, ``pass`` when at least
    one instance was checked, ``skipped`` when none applies (e.g. pairwise
    postulates on a one-player game).
    """
    m = _Measure(measure)
    if postulate not in POSTULATES + EXTRA_POSTULATES:
        raise UnsupportedCombination(f"unknown postulate {postulate!r}")
    report = AuditReport(postulate, m.name, description or describe(game), game.n)
    _CHECKS[postulate](game, m, report, iso_samples=iso_samples,
                       iso_exhaustive_n=iso_exhaustive_n, seed=seed)
    return report._finish()


def audit_all(game: Game, measure: MeasureLike, postulates: Sequence[str] = POSTULATES,
              **kwargs) -> list[AuditReport]:
    return [audit(game, measure, p, **kwargs) for p in postulates]


# -- individual checks ------------------------------------------------------

def _iso(game, m, report, *, iso_samples, iso_exhaustive_n, seed, **_):
    base = m.total(game)
    for perm in _permutations(game.n, iso_exhaustive_n, iso_samples, seed):
        moved = m.total(relabel(game, perm))
        for i in range(game.n):
            report.checked += 1
            if moved[perm[i]] != base[i]:
                report._fail(Witness((i, perm[i]), base[i], moved[perm[i]],
                                     detail=f"relabelling {[p + 1 for p in perm]}"))


def _dummies(game):
    return [i for i in range(game.n) if is_dummy(game, i)]


def _dum1(game, m, report, **_):
    values = m.total(game)
    for d in _dummies(game):
        report.checked += 1
        if values[d] != 0:
            report._fail(Witness((d,), Fraction(0), values[d], detail="dummy with nonzero power"))
    bigger, _rec = add_dummy(game)
    report.checked += 1
    added = m.total(bigger)[game.n]
    if added != 0:
        report._fail(Witness((game.n,), Fraction(0), added, detail="added dummy with nonzero power"))


def _dum2(game, m, report, **_):
    values = m.total(game)
    dummies = set(_dummies(game))
    for i in range(game.n):
        if i in dummies:
            continue
        report.checked += 1
        if values[i] <= 0:
            report._fail(Witness((i,), "> 0", values[i], detail="non-dummy with zero power"))


def _dum3(game, m, report, **_):
    before = m.total(game)
    after = m.total(add_dummy(game)[0])
    for i in range(game.n):
        report.checked += 1
        if after[i] != before[i]:
            report._fail(Witness((i,), before[i], after[i], detail="power changed by an added dummy"))


def _dom(strict):
    def check(game, m, report, **_):
        values = m.total(game)
        for j, i in _ordered_pairs(game.n):
            dom = dominance(game, j, i)
            if strict and dom.strict:
                report.checked += 1
                if not values[j] > values[i]:
                    report._fail(Witness((j, i), f"> {rational_str(values[i])}", values[j],
                                         detail=f"player {j + 1} strictly dominates {i + 1}"))
            elif not strict and dom.weak:
                report.checked += 1
                if not values[j] >= values[i]:
                    report._fail(Witness((j, i), f">= {rational_str(values[i])}", values[j],
                                         detail=f"player {j + 1} weakly dominates {i + 1}"))
    return check


def _don1(game, m, report, **_):
    values = m.total(game)
    for j, i in _ordered_pairs(game.n):
        new, _rec = donate(game, j, i)
        got = m.total(new)[i]
        report.checked += 1
        floor = max(values[i], values[j])
        if got < floor:
            report._fail(Witness((j, i), f">= {rational_str(floor)}", got,
                                 detail=f"player {j + 1} donates to {i + 1}"))


def _bloc1(game, m, report, **_):
    values = m.total(game)
    for i, j in _ordered_pairs(game.n):
        new, rec = bloc(game, i, j)
        got = m.total(new)[rec.index_map[i]]
        report.checked += 1
        floor = max(values[i], values[j])
        if got < floor:
            report._fail(Witness((i, j), f">= {rational_str(floor)}", got,
                                 detail=f"player {i + 1} annexes {j + 1}"))


def _quar(second):
    def check(game, m, report, **_):
        values = m.total(game)
        for i, j in _ordered_pairs(game.n):
            try:
                new, _rec = quarrel(game, i, j)
            except NonSimpleResult as exc:
                report.skipped.append(((i, j), str(exc)))
                continue
            who = j if second else i
            got = m.total(new)[who]
            report.checked += 1
            if got > values[who]:
                report._fail(Witness((i, j), f"<= {rational_str(values[who])}", got,
                                     detail=f"quarrel between {i + 1} and {j + 1} raised player {who + 1}"))
    return check


def _ratio(which, transform):
    def check(game, m, report, **_):
        if which == "total":
            before, after = m.total(game), m.total(transform(game)[0])
        else:
            before = m.signed(game, which, report.postulate)
            after = m.signed(transform(game)[0], which, report.postulate)
        for i, j in _ordered_pairs(game.n):
            if before[j] == 0 or after[j] == 0:
                report.skipped.append(((i, j), f"zero {which} power of player {j + 1}: ratio undefined"))
                continue
            report.checked += 1
            if before[i] * after[j] != after[i] * before[j]:
                report._fail(Witness((i, j), before[i] / before[j], after[i] / after[j],
                                     detail=f"{which} ratio of players {i + 1}/{j + 1} changed"))
    return check


_CHECKS = {
    "iso": _iso,
    "dum-1": _dum1,
    "dum-2": _dum2,
    "dum-3": _dum3,
    "dom-1": _dom(strict=False),
    "dom-2": _dom(strict=True),
    "don-1": _don1,
    "bloc-1": _bloc1,
    "quar-1": _quar(second=False),
    "quar-2": _quar(second=True),
    "add-1": _ratio("plus", add_yes_blocker),
    "add-2": _ratio("minus", add_no_blocker),
    "add-0": _ratio("total", add_yes_blocker),
}
