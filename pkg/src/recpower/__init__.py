"""Exact voting-power analysis of simple voting games.

Computes the recursive measure (RM, with its yes/no parts) next to
Penrose-Banzhaf and Shapley-Shubik, applies the standard game
transformations and audits the voting-power postulates.
"""
from .efficacy import alpha, alpha_minus, alpha_plus, alpha_table, decisive
from .errors import (
    InternalInvariant,
    NonMonotone,
    NonSimple,
    NonSimpleResult,
    ParseError,
    SizeLimit,
    VotingGameError,
)
from .game import (
    Game,
    WeightedRule,
    blocker_status,
    dominance,
    from_table,
    from_weighted,
    from_winning_coalitions,
    is_dummy,
    label,
    mask_of,
    outcome,
    parse_label,
    relabel,
    validate_simple,
)
from .lattice import loyal_children
from .measures import VoteProfile, division_probability, pb, power_report, rm, ss
from .postulates import POSTULATES, audit, audit_all
from .transforms import add_dummy, add_no_blocker, add_yes_blocker, bloc, donate, quarrel

__version__ = "0.1.0"
