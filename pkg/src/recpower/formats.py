"""Textual game specifications, JSON serialization and DOT lattice export.

Two input forms are accepted:

* weighted: ``"8;5,4,3,2"`` (optionally wrapped in braces, as printed in the
  literature: ``"{8; 5,4,3,2}"``)
* explicit JSON: ``{"n": 3, "winning": [[1,2],[1,3],[1,2,3]], "names": [...]}``
  with 1-indexed players and the complete list of winning coalitions.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .game import Game, WeightedRule, check_size, from_weighted, from_winning_coalitions, label, players_of
from .lattice import covering_edges


@dataclass(frozen=True)
class GameSpec:
    weighted: tuple[int, tuple[int, ...]] | None = None
    explicit: tuple[int, tuple[tuple[int, ...], ...]] | None = None
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if (self.weighted is None) == (self.explicit is None):
            raise ParseError("a game spec is either weighted or explicit")
        if self.names is not None and len(self.names) != self.n:
            raise ParseError(f"{len(self.names)} names given for {self.n} players")

    @property
    def n(self) -> int:
        return len(self.weighted[1]) if self.weighted else self.explicit[0]

    def build(self) -> Game:
        """Exact-mode game (subject to the size cap)."""
        if self.weighted:
            return from_weighted(*self.weighted)
        n, coalitions = self.explicit
        return from_winning_coalitions(n, coalitions)

    def rule(self):
        """Point-query rule; weighted specs avoid the table and the size cap."""
        if self.weighted:
            return WeightedRule(*self.weighted)
        return self.build()

    def display_names(self) -> list[str]:
        return list(self.names) if self.names else [str(i + 1) for i in range(self.n)]


_INT = re.compile(r"\s*(-?\d+)\s*")


def _parse_weighted(text: str) -> GameSpec:
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
        offset += 1
    quota_part, sep, rest = body.partition(";")
    if not sep:
        raise ParseError("expected 'quota;w1,w2,...'", position=offset + len(body))
    m = _INT.fullmatch(quota_part)
    if not m:
        raise ParseError(f"quota {quota_part.strip()!r} is not an integer", position=offset)
    quota = int(m.group(1))
    pos = offset + len(quota_part) + 1
    if not rest.strip():
        raise ParseError("empty weight list", position=pos)
    weights = []
    for chunk in rest.split(","):
        m = _INT.fullmatch(chunk)
        if not m:
            raise ParseError(f"weight {chunk.strip()!r} is not an integer", position=pos)
        weights.append(int(m.group(1)))
        pos += len(chunk) + 1
    return GameSpec(weighted=(quota, tuple(weights)))


def _parse_json(text: str) -> GameSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", position=exc.pos) from None
    if not isinstance(doc, dict):
        raise ParseError("JSON game must be an object")
    unknown = set(doc) - {"n", "winning", "names", "transform"}
    if unknown:
        raise ParseError(f"unexpected key(s): {', '.join(sorted(unknown))}")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("'n' must be a positive integer")
    winning = doc.get("winning")
    if not isinstance(winning, list):
        raise ParseError("'winning' must be a list of coalitions")
    coalitions = set()
    for k, coalition in enumerate(winning):
        if not isinstance(coalition, list) or not all(
                isinstance(p, int) and not isinstance(p, bool) for p in coalition):
            raise ParseError(f"winning[{k}] must be a list of player numbers")
        for p in coalition:
            if not 1 <= p <= n:
                raise ParseError(f"winning[{k}] names player {p}, outside 1..{n}")
        coalitions.add(tuple(sorted({p - 1 for p in coalition})))
    names = doc.get("names")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
            raise ParseError("'names' must be a list of strings")
        names = tuple(names)
    return GameSpec(explicit=(n, tuple(sorted(coalitions))), names=names)


def parse_game_spec(text: str) -> GameSpec:
    """Parse a weighted string, a JSON document, or a path to a file holding either."""
    if "\n" not in text and len(text) < 4096 and os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty game specification", position=0)
    # JSON keys are quoted; the weighted grammar never contains a quote
    if stripped[0] in "{[" and '"' in stripped:
        return _parse_json(stripped)
    return _parse_weighted(text)


# -- output -----------------------------------------------------------------

def rational_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def game_to_dict(game: Game, names: Sequence[str] | None = None) -> dict:
    doc = {
        "n": game.n,
        "winning": [[p + 1 for p in players_of(m)] for m in game.winning_coalitions()],
    }
    if names is not None:
        doc["names"] = list(names)
    return doc


def game_to_json(game: Game, names: Sequence[str] | None = None, **extra) -> str:
    doc = game_to_dict(game, names)
    doc.update(extra)
    return json.dumps(doc, ensure_ascii=False)


def lattice_dot(game: Game, scores: dict[int, Fraction] | None = None,
                decisive: set[int] | None = None, title: str = "division_lattice") -> str:
    """DOT digraph of the full division lattice, top element drawn highest.

    Winning divisions are filled grey. ``scores`` annotates nodes (e.g. a
    player's efficacy) and nodes in ``decisive`` get a heavy border.
    """
    check_size(game.n)
    n = game.n
    lines = [f"digraph {title} {{", "  rankdir=BT;", '  node [shape=circle, fontsize=10];']
    by_rank: dict[int, list[int]] = {}
    for m in range(1 << n):
        by_rank.setdefault(bin(m).count("1"), []).append(m)
        attrs = [f'label="{label(m, n)}' + (f"\\n{_frac_text(scores[m])}" if scores is not None else "") + '"']
        if game.wins(m):
            attrs.append('style=filled, fillcolor="gray85"')
        if decisive and m in decisive:
            attrs.append("penwidth=3")
        lines.append(f"  d{m} [{', '.join(attrs)}];")
    for rank in sorted(by_rank):
        lines.append("  { rank=same; " + " ".join(f"d{m};" for m in by_rank[rank]) + " }")
    for lower, upper in covering_edges(n):
        lines.append(f"  d{lower} -> d{upper} [dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _frac_text(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
