"""
Recursive power in a four-player weighted game
==============================================

Quota 8, weights 5, 4, 3, 2. We follow player 2 through the yes- and
no-posets and compare the recursive measure with Penrose-Banzhaf and
Shapley-Shubik.
"""

from fractions import Fraction

import recpower as rp

game = rp.from_weighted(8, [5, 4, 3, 2])
print(game)

###############################################################################
# Each division is an int; bit i set means player i+1 votes yes.
# ``label`` prints it the way a reader would write it.

for s in range(1 << game.n):
    print(f"{rp.label(s):>5}  {'wins' if game.wins(s) else 'loses'}")

###############################################################################
# Loyal children of the top division: drop one voter, outcome unchanged.

top = game.full
print([rp.label(c) for c in rp.loyal_children(game, top)])

###############################################################################
# Efficacy of player 2 (index 1) on the yes side and the no side.

plus, minus = rp.alpha_table(game, 1)
for s in range(1 << game.n):
    value = plus[s] + minus[s]
    if value:
        print(f"{rp.label(s):>5}  {value}")

###############################################################################
# Averaging over divisions gives the measure. All values are exact.

v = rp.rm(game)[1]
print("RM+ =", v.plus, " RM- =", v.minus, " RM =", v.total)
assert v.total == Fraction(53, 96)

###############################################################################
# Side by side with the two classical indices.

report = rp.power_report(game)
for row in report.rows():
    print(row["player"], row["rm"], row["pb"], row["ss"])

###############################################################################
# A biased electorate: player 1 says yes two times in three.

profile = rp.VoteProfile([Fraction(2, 3), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)])
print([str(v.total) for v in rp.rm(game, profile)])
