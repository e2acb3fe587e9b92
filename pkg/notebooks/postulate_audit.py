"""
Auditing power measures against the postulates
===============================================

Run every postulate for RM, PB and SS on a handful of games and tabulate
the verdicts. Only SS should ever fail, and only on the added-blocker
ratio check.
"""

import numpy as np

import recpower as rp
from recpower.generate import random_simple_games

games = {
    "8;5,4,3,2": rp.from_weighted(8, [5, 4, 3, 2]),
    "3;2,1,1": rp.from_weighted(3, [2, 1, 1]),
    "4;2,2,1": rp.from_weighted(4, [2, 2, 1]),
}
for k, g in enumerate(random_simple_games(5, 3, seed=1)):
    games[f"random-{k}"] = g

###############################################################################
# Verdict matrix: rows are games, columns postulates.

for measure in ("rm", "pb", "ss"):
    print(f"\n{measure}")
    print(f"{'':12}" + " ".join(f"{p:>6}" for p in rp.POSTULATES))
    for name, g in games.items():
        cells = [r.verdict[:4] for r in rp.audit_all(g, measure)]
        print(f"{name:12}" + " ".join(f"{c:>6}" for c in cells))

###############################################################################
# A witness is a concrete violated instance, reported 1-indexed.

report = rp.audit(games["3;2,1,1"], "ss", "add-1")
for w in report.witnesses:
    print(w.to_dict(3))

###############################################################################
# Dominance versus power for RM on a larger random game.

g = random_simple_games(6, 1, seed=9)[0]
power = np.array([float(v.total) for v in rp.rm(g)])
for j in range(g.n):
    for i in range(g.n):
        if i != j and rp.dominance(g, j, i).strict:
            print(f"{j + 1} > {i + 1}: {power[j]:.4f} > {power[i]:.4f}")
