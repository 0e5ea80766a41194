"""Order-type homogeneity, sign sequences of d-subsets, and the flip test.

A sequence of points in R^d is order-type homogeneous when all its
(d+1)-tuples have the same orientation sign.  For a d-subset R, the sign
sequence of R lists the orientation of {p_i} union R over the remaining
points in order; the sequence has the flip property when every R's sign
sequence changes sign at most once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactgeom import GeneralPositionError, PointSeq


@dataclass(frozen=True)
class SignSeq:
    """Sign sequence of the d-subset ``subset``: one entry per point not in
    it, in sequence order.  Entries are strictly +-1."""

    subset: tuple[int, ...]
    entries: tuple[int, ...]


@dataclass(frozen=True)
class HomogeneityReport:
    homogeneous: bool
    sign: int | None = None
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.homogeneous


@dataclass(frozen=True)
class FlipReport:
    flip: bool
    witness: SignSeq | None = None

    def __bool__(self) -> bool:
        return self.flip


def tuple_sign(seq: PointSeq, idx: Sequence[int]) -> int:
    """Orientation of the (dim+1) points at strictly increasing ``idx``."""
    idx = tuple(idx)
    if len(idx) != seq.dim + 1:
        raise ValueError(f"need {seq.dim + 1} indices, got {len(idx)}")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError("indices must be strictly increasing")
    if idx and not 0 <= idx[0] <= idx[-1] < len(seq):
        raise IndexError("index out of range")
    s = seq.orientation_of(idx)
    if s == 0:
        raise GeneralPositionError(
            f"affinely dependent tuple {idx}", idx)
    return s


def is_order_type_homogeneous(seq: PointSeq) -> HomogeneityReport:
    """Check all C(n, d+1) tuples for a common orientation sign.

    The witness, when present, is the lexicographically least pair of
    opposite-sign tuples.
    """
    n, d = len(seq), seq.dim
    if n < d + 1:
        raise ValueError(f"need at least {d + 1} points, got {n}")
    first = None
    sign0 = 0
    for idx in itertools.combinations(range(n), d + 1):
        s = tuple_sign(seq, idx)
        if first is None:
            first, sign0 = idx, s
        elif s != sign0:
            return HomogeneityReport(False, witness=(first, idx))
    return HomogeneityReport(True, sign=sign0)


def sign_sequence(seq: PointSeq, subset: Sequence[int]) -> SignSeq:
    """Sign sequence of the d-subset ``subset`` over the remaining points."""
    subset = tuple(subset)
    if len(subset) != seq.dim:
        raise ValueError(f"need a {seq.dim}-subset, got {len(subset)}")
    members = set(subset)
    entries = []
    for i in range(len(seq)):
        if i in members:
            continue
        entries.append(tuple_sign(seq, tuple(sorted(subset + (i,)))))
    return SignSeq(subset, tuple(entries))


def count_sign_changes(s) -> int:
    """Number of adjacent sign flips; zero entries are hard errors."""
    entries = s.entries if isinstance(s, SignSeq) else tuple(s)
    if any(e == 0 for e in entries):
        raise ValueError("sign sequence contains a zero entry")
    return sum(1 for a, b in zip(entries, entries[1:]) if a != b)


def is_flip(seq: PointSeq) -> FlipReport:
    """True iff every d-subset's sign sequence has at most one sign change.

    Exhaustive over all C(n, d) subsets; the reported violation is the
    lexicographically least one.
    """
    n, d = len(seq), seq.dim
    if n < d + 1:
        raise ValueError(f"need at least {d + 1} points, got {n}")
    for subset in itertools.combinations(range(n), d):
        ss = sign_sequence(seq, subset)
        if count_sign_changes(ss) > 1:
            return FlipReport(False, witness=ss)
    return FlipReport(True)
