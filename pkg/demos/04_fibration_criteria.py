"""
Standard models over toric bases: fiber criteria and witnesses
==============================================================

Two worked fibrations with opposite verdicts, the rank-one to rank-two
reduction that trades 'volume at least 5' for 'a positive component', the
weighted-corner obstruction arithmetic behind the converse, and a bounded
search for the divisorial witness.
"""

from cypair import fiber_criteria as fc
from cypair import fixtures

# A fibration whose general fiber boundary has components 0 and -1: the
# positivity condition fails, so the pair is not cluster type.
neg = fixtures.load_fixture("ex62.pic2")
print("rank 2, components (0, -1):", fc.check_pic2(neg))

# The same family as a rank-one model: the fiber volume is 4 < 5.
neg1 = fixtures.load_fixture("ex62.pic1")
print("rank 1, volume 4:", fc.check_pic1(neg1))

# A fiber through a singular point cannot be judged until it is resolved.
sing = fixtures.load_fixture("ex63.pic1")
try:
    fc.check_pic1(sing)
except fc.BoundaryMeetsSingularities as exc:
    print("rank 1 through an A1 point:", exc)
resolved = fixtures.load_fixture("ex63.resolved")
print("resolved fiber (1, -2):", fc.check_pic2(resolved))

# The reduction: blow up the node of a rank-one fiber. Volume v becomes a
# strict transform of self-intersection v - 4, so the verdict flips at 5.
for vol in (4, 5, 9):
    f = fc.FiberSpec.build([(vol, True)], has_node=True, volume=vol, rank=1)
    red = fc.node_blowup_reduce(f)
    print(f"volume {vol}: strict transform {red.components[0].self_int},",
          "cluster type" if fc.check_pic2(red).cluster_type else "not cluster type")

# Weighted corner blow-ups: exact intersection numbers of the (x^a, y^b)
# blow-up, and the obstruction that a divisor supported on two nonpositive
# strict transforms can never become nonnegative.
data = fc.weighted_corner_numbers(0, 0, 2, 3)
print("\nweights (2,3) on two 0-curves:", data)
print("(2 C1~ + 3 C2~)^2 =", fc.obstruction_value(2, 3, fc.weighted_corner_numbers(0, 0, 3, 2)))

# Witness search: a cluster-type fiber admits, after a bounded number of
# corner blow-ups, a nonnegative divisor on the strict transforms with a
# boundary node away from its support. The negative fiber admits none.
good = fc.prop51_witness_search(fixtures.load_fixture("ex63.graph"))
print("\nwitness on the resolved fiber:", good)
print("witness on the (0,-1) fiber:", fc.prop51_witness_search(fixtures.load_fixture("ex62.graph")))
