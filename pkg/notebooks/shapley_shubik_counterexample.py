"""
Why Shapley-Shubik fails the added-blocker test
===============================================

Give {3; 2,1,1} a new player who must be in every winning coalition. The
yes-side ratio between players 1 and 2 moves from 4 to 5 under
Shapley-Shubik, while the recursive measure keeps it fixed.
"""

import recpower as rp

base = rp.from_weighted(3, [2, 1, 1])
blocked, record = rp.add_yes_blocker(base)
print(blocked == rp.from_weighted(8, [2, 1, 1, 5]), record.index_map)

###############################################################################
# Yes-side values before and after.

for name, f in (("ss", rp.ss), ("rm", rp.rm)):
    before = [v.plus for v in f(base)]
    after = [v.plus for v in f(blocked)]
    print(name, [str(x) for x in before], "->", [str(x) for x in after])
    print("   ratio 1/2:", before[0] / before[1], "->", after[0] / after[1])

###############################################################################
# The audit reaches the same conclusion with cross-multiplied integers.

for measure in ("ss", "rm", "pb"):
    report = rp.audit(base, measure, "add-1")
    print(measure, report.verdict, [w.to_dict(3)["actual"] for w in report.witnesses])

###############################################################################
# The mirror construction: a player whose yes vote alone carries.

no_blocked, _ = rp.add_no_blocker(base)
print([str(v.minus) for v in rp.rm(base)], [str(v.minus) for v in rp.rm(no_blocked)][:3])
assert rp.audit(base, "rm", "add-2").verdict == "pass"
