"""Builtin curves, deterministic rational epsilon-sampling, decomposition.

Curves are maps from a rational parameter interval into R^d with exact
rational values, so every downstream orientation test stays exact.  The
sampler places one parameter per length-(eps/2) cell with a seeded rational
jitter and maintains general position incrementally, retrying inside the
cell when a sample would create a degeneracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .crossing import ConvexDecomposition, PolyPath, decompose, max_crossings
from .exactgeom import (IncrementalGeneralPosition, Point, as_point,
                        as_rational, point_seq)

_MASK64 = 0xFFFFFFFFFFFFFFFF


class SamplingError(RuntimeError):
    """Retry budget exhausted inside one sampling cell."""

    def __init__(self, cell: int, retries: int):
        super().__init__(
            f"could not keep general position in cell {cell} "
            f"after {retries} retries")
        self.cell = cell
        self.retries = retries


@dataclass(frozen=True)
class CurveSpec:
    """Exact curve: rational evaluator over a rational closed domain."""

    name: str
    dim: int
    domain: tuple[Fraction, Fraction]
    evaluator: Callable[[Fraction], Point]
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        lo, hi = self.domain
        if not lo < hi:
            raise ValueError("curve domain must be a nondegenerate interval")

    def at(self, t) -> Point:
        t = as_rational(t)
        lo, hi = self.domain
        if not lo <= t <= hi:
            raise ValueError(f"parameter {t} outside domain [{lo}, {hi}]")
        return self.evaluator(t)


def _moment(dim: int) -> CurveSpec:
    if dim < 1:
        raise ValueError("moment curve dimension must be >= 1")

    def ev(t: Fraction) -> Point:
        return tuple(t ** i for i in range(1, dim + 1))

    return CurveSpec("moment", dim, (Fraction(0), Fraction(1)), ev,
                     {"dim": dim})


def _quintic() -> CurveSpec:
    # y = x (1 - x^2)^2 has inflections at 0 and +-sqrt(3/5): the graph is
    # 3-crossing on [-1, 1] and splits into 4 convex pieces.
    def ev(t: Fraction) -> Point:
        return (t, t * (1 - t * t) ** 2)

    return CurveSpec("quintic", 2, (Fraction(-1), Fraction(1)), ev, {})


def _dented_arc(dents: int, depth) -> CurveSpec:
    if dents < 1:
        raise ValueError("dents must be >= 1")
    depth = as_rational(depth)
    cap = Fraction(1, dents * dents)
    if not 0 < depth < cap:
        raise ValueError(
            f"depth must satisfy 0 < depth < 1/dents^2 = {cap}, got {depth}")
    half = Fraction(1, 3 * dents)
    centers = [Fraction(-1) + Fraction(2 * j + 1, dents)
               for j in range(dents)]

    def ev(t: Fraction) -> Point:
        x = 2 * t - 1
        y = 1 - x * x
        for c in centers:
            a, b = c - half, c + half
            if a <= x <= b:
                bump = (x - a) * (b - x) / (half * half)
                y -= depth * bump * bump
                break
        return (x, y)

    return CurveSpec("dented_arc", 2, (Fraction(0), Fraction(1)), ev,
                     {"dents": dents, "depth": depth})


def _poly(coeffs: Sequence[Sequence], domain=None) -> CurveSpec:
    rows = [[as_rational(c) for c in row] for row in coeffs]
    if not rows:
        raise ValueError("poly curve needs at least one coordinate")
    if domain is None:
        lo, hi = Fraction(0), Fraction(1)
    else:
        lo, hi = (as_rational(v) for v in domain)

    def ev(t: Fraction) -> Point:
        out = []
        for row in rows:
            acc = Fraction(0)
            for c in reversed(row):
                acc = acc * t + c
            out.append(acc)
        return tuple(out)

    return CurveSpec("poly", len(rows), (lo, hi), ev,
                     {"coeffs": rows, "domain": (lo, hi)})


def builtin(name: str, **params) -> CurveSpec:
    """Construct a named builtin curve.

    moment(dim), quintic(), dented_arc(dents, depth),
    poly(coeffs, domain=None) with coeffs[i] the ascending-power rational
    coefficients of coordinate i.
    """
    makers = {
        "moment": _moment,
        "quintic": _quintic,
        "dented_arc": _dented_arc,
        "poly": _poly,
    }
    if name not in makers:
        raise ValueError(f"unknown curve {name!r}; "
                         f"choose from {sorted(makers)}")
    return makers[name](**params)


class _SplitMix:
    """Deterministic 64-bit generator (splitmix64 step function).

    Self-contained so that sampled paths are bit-identical across platforms
    and Python versions.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


@dataclass(frozen=True)
class EpsSample:
    eps: Fraction
    params: tuple[Fraction, ...]
    path: PolyPath
    retries: int


def epsilon_sample(curve: CurveSpec, eps, seed: int = 0, *,
                   jitter_denominator: int = 4096,
                   max_retries: int = 32) -> EpsSample:
    """Sample the curve with one parameter in every length-(eps/2) cell.

    Consecutive parameters then differ by less than eps, so the inscribed
    path cannot skip features wider than eps.  Jitter offsets are rationals
    r/jitter_denominator with 0 < r < jitter_denominator drawn from a
    seeded splitmix64 stream; a cell is retried (fresh jitter) when its
    point would break general position, and SamplingError is raised after
    max_retries failures in one cell.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    q = int(jitter_denominator)
    if q < 2:
        raise ValueError("jitter_denominator must be >= 2")
    lo, hi = curve.domain
    cells = max(2, math.ceil(2 * (hi - lo) / eps))
    width = (hi - lo) / cells
    rng = _SplitMix(seed)
    gp = IncrementalGeneralPosition(curve.dim)
    params: list[Fraction] = []
    retries = 0
    for cell in range(cells):
        cell_lo = lo + cell * width
        for _ in range(max_retries):
            r = 1 + rng.next_u64() % (q - 1)
            t = cell_lo + width * Fraction(r, q)
            if gp.try_add(as_point(curve.evaluator(t))) is None:
                params.append(t)
                break
            retries += 1
        else:
            raise SamplingError(cell, max_retries)
    path = PolyPath(point_seq(gp.points, dim=curve.dim))
    return EpsSample(eps, tuple(params), path, retries)


@dataclass(frozen=True)
class CurveDecomposition:
    """Convex decomposition of a sampled curve with parameter cuts.

    ``cuts`` are the overlap parameters between consecutive pieces;
    ``intervals`` cover the whole domain, sharing endpoints at the cuts.
    ``certified_max_crossings`` is filled only when the brute-force oracle
    was run on the sampled path.
    """

    sample: EpsSample
    decomposition: ConvexDecomposition
    cuts: tuple[Fraction, ...]
    intervals: tuple[tuple[Fraction, Fraction], ...]
    certified_max_crossings: int | None = None

    @property
    def pieces(self) -> int:
        return self.decomposition.count


def decompose_curve(curve: CurveSpec, eps, seed: int = 0, *,
                    certify_budget: int | None = None) -> CurveDecomposition:
    """Sample the curve and decompose the inscribed path into convex pieces.

    The first and last parameter intervals are extended to the domain
    endpoints so the intervals tile the domain.  When the sampled path has
    at most certify_budget vertices the exact oracle certifies its
    crossing number.
    """
    sample = epsilon_sample(curve, eps, seed)
    dec = decompose(sample.path)
    params = sample.params
    cuts = tuple(params[hi] for lo, hi in dec.pieces[:-1])
    bounds = (curve.domain[0],) + cuts + (curve.domain[1],)
    intervals = tuple(zip(bounds, bounds[1:]))
    certified = None
    if certify_budget is not None and len(sample.path.seq) <= certify_budget:
        certified = max_crossings(sample.path).max_crossings
    return CurveDecomposition(sample, dec, cuts, intervals, certified)
