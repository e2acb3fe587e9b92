"""
Efficacy as a hitting probability
=================================

A walk starts at a division, steps to a uniformly chosen loyal child and
stops at a node without children. The chance of passing a node where the
player is decisive equals the exact efficacy score. Here we watch the
estimate converge and then go past the table size limit.
"""

import numpy as np

import recpower as rp
from recpower.game import WeightedRule
from recpower.montecarlo import rm_estimate, walk_estimate

game = rp.from_weighted(8, [5, 4, 3, 2])
exact = float(rp.alpha_minus(game, 1, 0))

###############################################################################
# Convergence at the empty division, no side.

for trials in (100, 1_000, 10_000, 100_000):
    est = walk_estimate(game, 1, 0, "minus", trials, seed=7)
    z = (float(est.estimate) - exact) / max(est.std_error, 1e-12)
    print(f"{trials:>7}  {float(est.estimate):.4f}  +- {est.std_error:.4f}  z={z:+.2f}")

###############################################################################
# Sampling divisions as well as walks estimates the whole measure.

est = rm_estimate(game, 1, 50_000, seed=3)
value, err = est.rm
print(f"RM ~ {float(value):.4f} +- {err:.4f}   exact {float(rp.rm(game)[1].total):.4f}")

###############################################################################
# Forty players with equal weight and a two-thirds quota. No table is
# built; the rule answers one division at a time.

rule = WeightedRule(27, tuple([1] * 40))
est = rm_estimate(rule, 0, 20_000, seed=11, workers=2)
for name in ("rm_plus", "rm_minus", "rm"):
    value, err = getattr(est, name)
    print(f"{name:8} {float(value):.4f} +- {err:.4f}")

###############################################################################
# Same seed, same answer.

runs = [walk_estimate(rule, 3, 0, "minus", 2_000, seed=5).hits for _ in range(3)]
print(runs, np.unique(runs).size == 1)
