"""Abstract sign tables: greedy blocks, the flip property, and reduction.

A k-sequence assigns +-1 to every (k+1)-subset of its elements.  Geometric
paths produce them (k = dimension, signs = orientations), but the block
machinery below is purely combinatorial and works on any table.
"""

import itertools
from fractions import Fraction

from convexsplit import (builtin, c_bound, epsilon_sample, from_points,
                         from_table, greedy_partition, reduce, to_json_dict,
                         verify_flip)

# The extremal 4-element table: pairs (a1,a2) and (a3,a4) positive,
# everything else negative.  No two blocks cover it.
elements = ("a1", "a2", "a3", "a4")
table = {("a1", "a2"): 1, ("a3", "a4"): 1}
for pair in itertools.combinations(elements, 2):
    table.setdefault(pair, -1)
s = from_table(1, elements, table)

part = greedy_partition(s)
print("extremal 1-sequence blocks:", part.blocks, "-> m =", part.m)
print("flip property (every 1-subset sees <= 1 sign change):",
      bool(verify_flip(s)))

# A sign change pattern like (-, +, -) breaks the flip property; the
# report points at the offending subset.
bad = {("a1", "a2"): -1, ("a1", "a3"): 1, ("a1", "a4"): -1}
for pair in itertools.combinations(elements, 2):
    bad.setdefault(pair, 1)
report = verify_flip(from_table(1, elements, bad))
print("\ntampered table flip:", bool(report))
print("  witness subset:", report.witness, "signs:", report.witness_signs)

# Geometric flip sequences come from paths no hyperplane crosses more than
# k+1 times.  Reduce shrinks them while preserving the block count, with
# every non-final block at most k+3 long and the final block of size 2.
path = epsilon_sample(builtin("quintic"), Fraction(1, 10)).path
geo = from_points(path.seq)
small = reduce(geo)
print("\nquintic sample as a 2-sequence:", len(geo), "elements,",
      f"m = {greedy_partition(geo).m}")
print("after reduce:", len(small), "elements,",
      f"m = {greedy_partition(small).m}")
print("reduced table round-trips as JSON:",
      sorted(to_json_dict(small)) == ["elements", "k", "signs"])

# The recursive bound on block counts grows fast; the k = 1 and k = 2
# values are exact or nearly so, higher ones are safe ceilings.
print("\nblock-count bounds c(k):")
for k in range(1, 6):
    print(f"  c({k}) = {c_bound(k)}")
