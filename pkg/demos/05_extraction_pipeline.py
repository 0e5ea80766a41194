"""Finding and extracting super order-type homogeneous subsequences.

Super homogeneity asks for homogeneity of every prefix projection
(first k coordinates, k = 1..d).  Moment-curve samples have it for free;
generic homogeneous sequences do not, but repeated projection plus convex
decomposition extracts a subsequence that does, with a guaranteed fraction
kept at every stage.
"""

from fractions import Fraction

from convexsplit import (extraction_floor, is_order_type_homogeneous,
                         is_super_ot_homogeneous, longest_ot_homogeneous,
                         point_seq, super_extract)

F = Fraction

moment = point_seq([(F(i, 13), F(i, 13) ** 2, F(i, 13) ** 3)
                    for i in range(1, 13)])
print("moment samples super homogeneous:",
      bool(is_super_ot_homogeneous(moment)),
      "signs:", is_super_ot_homogeneous(moment).signs)

# Homogeneity does not survive projection in general: lifting the planar
# zigzag onto z = x^3 gives a homogeneous R^3 sequence whose first two
# coordinates are the zigzag itself.
lift = point_seq([(0, 0, 0), (1, 1, 1), (2, 0, 8), (3, 1, 27)])
print("\nlifted zigzag homogeneous in R^3:",
      bool(is_order_type_homogeneous(lift)))
rep = is_super_ot_homogeneous(lift)
print("super homogeneous:", bool(rep), f"(fails at k={rep.failing_k})")

# For messy input, first find the longest homogeneous subsequence (exact,
# exhaustive with pruning)...
spiky = point_seq([(0, 3), (1, 9), (2, 1), (3, 4), (4, 0), (5, 6), (6, 2)])
best = longest_ot_homogeneous(spiky)
print("\nlongest homogeneous subsequence of a 7-point path:",
      best.labels)

# ...then run the extraction pipeline: project to one fewer coordinate,
# decompose into convex pieces, keep the longest piece, repeat.
convex = point_seq([(0, 0), (3, 1), (4, 4), (2, 6), (-1, 5)])
trace = super_extract(convex)
for stage in trace.stages:
    print(f"stage k={stage.k}: {stage.input_len} points, "
          f"pieces {stage.pieces}, kept {stage.chosen}")
print("final labels:", trace.final.labels, "-> super homogeneous:",
      bool(is_super_ot_homogeneous(trace.final)))

# The per-stage piece counts are bounded, which yields a guaranteed output
# size from input size alone.
print("\nguaranteed output length from 30 points in R^3:",
      extraction_floor(30, 3))
print("guaranteed output length from 10000 points in R^2:",
      extraction_floor(10000, 2))
