"""Exact orientation predicates, general position, and homogeneity.

Everything below runs on rational coordinates, so every verdict is exact:
no epsilon tuning, no false positives from rounding.
"""

from fractions import Fraction

from convexsplit import (is_general_position, is_order_type_homogeneous,
                         orientation, point_seq, sign_sequence)

# Orientation of d+1 points in R^d is the sign of a determinant: +1 for a
# left turn in the plane, -1 for a right turn, 0 for degenerate input.
print("orientation((0,0),(2,1),(1,3)) =",
      orientation([(0, 0), (2, 1), (1, 3)]))
print("orientation((0,0),(2,1),(4,2)) =",
      orientation([(0, 0), (2, 1), (4, 2)]), "(collinear)")

# Rationals keep this exact even when floats would waffle.
tiny = Fraction(1, 10 ** 40)
print("orientation with a 1e-40 bump:",
      orientation([(0, 0), (1, 1), (2, 2 + tiny)]))

# General position: every subset of at most d+1 points must be affinely
# independent.  The report carries a minimal witness on failure.
bad = point_seq([(0, 0), (1, 1), (3, 2), (2, 2)])
report = is_general_position(bad)
offenders = [tuple(map(int, bad.points[i])) for i in report.witness]
print("\ngeneral position:", bool(report), "witness:", report.witness)
print("  (points", offenders, "are collinear)")

# A sequence is order-type homogeneous when all (d+1)-tuples have one sign.
# Convex position traversed in order gives exactly that.
convex = point_seq([(0, 0), (3, 1), (4, 4), (2, 6), (-1, 5)])
rep = is_order_type_homogeneous(convex)
print("\nconvex path homogeneous:", bool(rep), "with sign", rep.sign)

zigzag = point_seq([(0, 0), (1, 1), (2, 0), (3, 1)])
rep = is_order_type_homogeneous(zigzag)
print("zigzag homogeneous:", bool(rep))
print("  opposite-sign triples:", rep.witness)

# The sign sequence of a d-subset R lists the orientation of R plus each
# remaining point, in order.  These sequences drive everything downstream.
print("\nsign sequences of the zigzag:")
for subset in [(0, 1), (0, 2), (1, 3)]:
    seq = sign_sequence(zigzag, subset)
    print(f"  R={subset}: {seq.entries}")
