"""Shared hypothesis strategies and small helpers for the tests."""
from hypothesis import strategies as st

from recpower import Game, parse_label
from recpower.generate import upward_closure


def d(text):
    """Division from a 1-indexed figure label such as "134"."""
    return parse_label(text)


@st.composite
def weighted_games(draw, max_n=6, max_weight=6):
    n = draw(st.integers(1, max_n))
    weights = draw(st.lists(st.integers(0, max_weight), min_size=n, max_size=n).filter(lambda w: sum(w) > 0))
    quota = draw(st.integers(1, sum(weights)))
    return quota, weights


@st.composite
def simple_games(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    full = (1 << n) - 1
    gens = draw(st.lists(st.integers(1, full), min_size=0, max_size=2 * n))
    return Game(n, upward_closure(n, gens + [full]))


# acceptance outcomes, printed by the terminal-summary hook in conftest
ACCEPTANCE: dict[int, tuple[bool, str]] = {}
