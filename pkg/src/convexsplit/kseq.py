"""Abstract k-sequences: greedy partition, reduction, and the block bound.

A k-sequence is an ordered list of distinct elements plus a total sign
oracle on (k+1)-subsets.  The greedy partition slices it left to right into
maximal one-point-overlapping blocks whose (k+1)-subsets are monochromatic;
``reduce`` shrinks a sequence to a short one with the same block count; and
``c_bound`` evaluates the exact rational recurrence bounding the block count
of any flip k-sequence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .exactgeom import GeneralPositionError, PointSeq
from .ordertype import tuple_sign

#: Sharper small-case constants known beyond what the recurrence yields;
#: recorded for reference and surfaced by the CLI `bounds` command, never
#: asserted as recurrence outputs.
KNOWN_BOUNDS = {"c1": 3, "c2_le": 22, "M1": 3, "M2": 4, "M3_le": 22}


class KSequence:
    """Ordered distinct elements with a memoized total sign oracle.

    ``sign_fn`` receives a (k+1)-tuple of element ids in sequence order and
    must return -1 or +1 for every such subset.
    """

    def __init__(self, k: int, elements: Iterable, sign_fn: Callable):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.k = k
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("elements must be distinct")
        self._pos = {e: i for i, e in enumerate(self.elements)}
        self._sign_fn = sign_fn
        self._cache: dict[tuple[int, ...], int] = {}
        # set by from_points when positions align with a PointSeq; lets
        # greedy_partition batch planar orientation tests
        self._points: PointSeq | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def sign_at(self, positions: tuple[int, ...]) -> int:
        """Sign of the (k+1)-subset at strictly increasing positions."""
        s = self._cache.get(positions)
        if s is None:
            if len(positions) != self.k + 1:
                raise ValueError(f"need {self.k + 1} positions")
            s = self._sign_fn(tuple(self.elements[i] for i in positions))
            if s not in (-1, 1):
                raise ValueError(f"sign oracle returned {s!r}")
            self._cache[positions] = s
        return s

    def sign(self, subset: Iterable) -> int:
        """Sign of a (k+1)-subset given as element ids, any order."""
        positions = tuple(sorted(self._pos[e] for e in subset))
        return self.sign_at(positions)

    def restrict(self, positions: Sequence[int]) -> "KSequence":
        """Subsequence at the given ascending positions, same oracle."""
        sub = tuple(self.elements[i] for i in positions)
        return KSequence(self.k, sub, lambda ids: self.sign(ids))


def from_points(seq: PointSeq) -> KSequence:
    """Geometric k-sequence: k = dim, oracle = orientation sign."""
    label_pos = {lab: i for i, lab in enumerate(seq.labels)}

    def oracle(ids):
        return tuple_sign(seq, tuple(sorted(label_pos[e] for e in ids)))

    s = KSequence(seq.dim, seq.labels, oracle)
    s._points = seq
    return s


def from_table(k: int, elements: Iterable, table: Mapping) -> KSequence:
    """Abstract k-sequence from a complete sign table.

    Table keys may be tuples or frozensets of element ids; the table must
    cover every (k+1)-subset.
    """
    elements = tuple(elements)
    canon: dict[frozenset, int] = {}
    for key, sign in table.items():
        canon[frozenset(key)] = sign
    for subset in itertools.combinations(elements, k + 1):
        if frozenset(subset) not in canon:
            raise ValueError(f"sign table is missing subset {subset}")
    return KSequence(k, elements, lambda ids: canon[frozenset(ids)])


def to_json_dict(s: KSequence) -> dict:
    """Complete serialization; forces evaluation of the whole oracle."""
    signs = []
    for positions in itertools.combinations(range(len(s)), s.k + 1):
        signs.append({
            "subset": [s.elements[i] for i in positions],
            "sign": s.sign_at(positions),
        })
    return {"k": s.k, "elements": list(s.elements), "signs": signs}


def from_json_dict(obj: Mapping) -> KSequence:
    table = {tuple(entry["subset"]): entry["sign"] for entry in obj["signs"]}
    return from_table(obj["k"], obj["elements"], table)


@dataclass(frozen=True)
class GreedyPartition:
    """Blocks as inclusive position intervals with one-point overlaps.

    ``signs[j]`` is None only for a last block of <= k elements; for j < m-1
    ``witnesses[j]`` is the lexicographically least k-subset D of block j
    with sign(D + next element) != signs[j].
    """

    blocks: tuple[tuple[int, int], ...]
    signs: tuple[int | None, ...]
    witnesses: tuple[tuple[int, ...] | None, ...]

    @property
    def m(self) -> int:
        return len(self.blocks)


def _extend_planar(seq: PointSeq, start: int, nxt: int,
                   sigma: int | None) -> tuple[bool, int | None]:
    """Planar specialization of the block-extension test.

    Checks the same pair subsets in the same order as the generic loop,
    but evaluates each orientation as an integer 3x3 determinant with the
    candidate row's cofactors hoisted out of the pair loop.
    """
    hom = seq._hom
    c0, c1, c2 = hom[nxt]
    rows = hom[start:nxt]
    cof = [(b1 * c2 - b2 * c1, b0 * c2 - b2 * c0, b0 * c1 - b1 * c0)
           for b0, b1, b2 in rows]
    for i, (a0, a1, a2) in enumerate(rows):
        for j in range(i + 1, len(rows)):
            u, v, w = cof[j]
            det = a0 * u - a1 * v + a2 * w
            if det == 0:
                raise GeneralPositionError(
                    "orientation is zero", (start + i, start + j, nxt))
            t = 1 if det > 0 else -1
            if sigma is None:
                sigma = t
            elif t != sigma:
                return False, sigma
    return True, sigma


def _extend(s: KSequence, start: int, nxt: int,
            sigma: int | None) -> tuple[bool, int | None]:
    """Can element nxt join the block [start, nxt)?  All new (k+1)-subsets
    must have sign sigma (the first subset checked fixes sigma when it is
    still open)."""
    if s.k == 2 and s._points is not None:
        return _extend_planar(s._points, start, nxt, sigma)
    for comb in itertools.combinations(range(start, nxt), s.k):
        t = s.sign_at(comb + (nxt,))
        if sigma is None:
            sigma = t
        elif t != sigma:
            return False, sigma
    return True, sigma


def greedy_partition(s: KSequence) -> GreedyPartition:
    """Left-to-right maximal partition into monochromatic blocks."""
    n = len(s)
    if n < 1:
        raise ValueError("empty sequence has no greedy partition")
    k = s.k
    blocks, signs, witnesses = [], [], []
    start = 0
    while True:
        end = start
        sigma: int | None = None
        rejected: int | None = None
        while end + 1 < n:
            nxt = end + 1
            if nxt - start + 1 <= k:
                end = nxt
                continue
            ok, sigma = _extend(s, start, nxt, sigma)
            if not ok:
                rejected = nxt
                break
            end = nxt
        blocks.append((start, end))
        if rejected is None:
            # ran out of elements: last block; sign only if big enough
            signs.append(sigma if end - start + 1 > k else None)
            witnesses.append(None)
            break
        signs.append(sigma)
        wit = next(
            comb for comb in itertools.combinations(range(start, end + 1), k)
            if s.sign_at(comb + (rejected,)) != sigma)
        witnesses.append(wit)
        start = end
    return GreedyPartition(tuple(blocks), tuple(signs), tuple(witnesses))


def reduce(s: KSequence) -> KSequence:
    """The reduced subsequence: same block count, every block <= k+3
    elements, last block exactly 2 (for sequences with >= 2 elements)."""
    gp = greedy_partition(s)
    kept: set[int] = set()
    last = gp.m - 1
    for j, (lo, hi) in enumerate(gp.blocks):
        if j == last:
            kept |= {lo, min(lo + 1, hi)}
            continue
        named = {lo, lo + 1, hi}
        wit = set(gp.witnesses[j])
        chosen = named | wit
        if named <= wit:
            # least-index element of the block not yet kept
            chosen.add(next(i for i in range(lo, hi + 1) if i not in chosen))
        kept |= chosen
    return s.restrict(sorted(kept))


def c_bound(k: int) -> Fraction:
    """Exact rational block-count bound for flip k-sequences.

    Base 3 for k = 1, then c(k) = 1 + (4k+10) c(k-1) / k.  Consumers that
    need an integer block bound take the ceiling.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    c = Fraction(3)
    for i in range(2, k + 1):
        c = 1 + Fraction(4 * i + 10) * c / i
    return c


@dataclass(frozen=True)
class AbstractFlipReport:
    flip: bool
    witness: tuple | None = None
    witness_signs: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.flip


def verify_flip(s: KSequence) -> AbstractFlipReport:
    """True iff every k-subset's sign sequence has <= 1 sign change.

    Exhaustive over all C(n, k) subsets; the witness (element ids, with its
    sign sequence) is the lexicographically least violating one.
    """
    n, k = len(s), s.k
    for subset in itertools.combinations(range(n), k):
        members = set(subset)
        entries = []
        changes = 0
        prev = 0
        for i in range(n):
            if i in members:
                continue
            t = s.sign_at(tuple(sorted(subset + (i,))))
            entries.append(t)
            if prev and t != prev:
                changes += 1
            prev = t
        if changes > 1:
            return AbstractFlipReport(
                False,
                witness=tuple(s.elements[i] for i in subset),
                witness_signs=tuple(entries))
    return AbstractFlipReport(True)
