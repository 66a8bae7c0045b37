"""Piecewise-linear rational paths and the root operators acting on them.

A path is a continuous piecewise-linear map from [0,1] into the real span
of the weight lattice, starting at 0.  It is stored as a sequence of
(direction, duration) segments with positive rational durations summing
to 1; adjacent segments with equal directions are merged on construction so
that path equality is plain structural equality.

The root operator with index ``j`` reshapes a path around the last descent
of its j-height function to its minimum: the portion between two exactly
located times ``t0 < t1`` is reflected, and the tail beyond ``t1`` is
translated by a root.  Index 0 stands in for the missing affine node: its
height function is the negated pairing with the highest coroot, its
reflection is the one attached to the highest root, and its translations go
by the highest root instead of a simple one.  Everything is exact; there is
no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import InternalInconsistencyError, PathDomainError
from .rootsys import RootSystem, WeightVec

Segment = tuple[WeightVec, Fraction]


@dataclass(frozen=True, eq=False)
class PLPath:
    """A normalized piecewise-linear path; build with :func:`pl_path`."""

    rs: RootSystem = field(repr=False)
    segments: tuple[Segment, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PLPath):
            return NotImplemented
        return self.rs.cartan == other.rs.cartan and self.segments == other.segments

    def __hash__(self) -> int:
        return hash((self.rs.cartan, self.segments))

    @property
    def breakpoints(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)]
        for _, dur in self.segments:
            out.append(out[-1] + dur)
        return tuple(out)

    def value_at(self, t) -> WeightVec:
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise ValueError(f"time {t} outside [0, 1]")
        acc = [Fraction(0)] * self.rs.rank
        pos = Fraction(0)
        for direction, dur in self.segments:
            step = min(dur, t - pos)
            if step > 0:
                for i, d in enumerate(direction):
                    acc[i] += step * d
            pos += dur
            if pos >= t:
                break
        return tuple(acc)

    def weight(self) -> WeightVec:
        """Endpoint of the path."""
        acc = [Fraction(0)] * self.rs.rank
        for direction, dur in self.segments:
            for i, d in enumerate(direction):
                acc[i] += dur * d
        return tuple(acc)


def pl_path(rs: RootSystem, segments: Iterable[Segment]) -> PLPath:
    """Normalize and validate a segment list.

    Zero-duration segments are dropped and adjacent segments with equal
    directions are merged; durations must be positive rationals summing to 1.
    """
    norm: list[tuple[WeightVec, Fraction]] = []
    for direction, dur in segments:
        direction = tuple(direction)
        if len(direction) != rs.rank:
            raise ValueError(f"direction {direction} has wrong rank")
        dur = Fraction(dur)
        if dur < 0:
            raise ValueError(f"negative duration {dur}")
        if dur == 0:
            continue
        if norm and norm[-1][0] == direction:
            norm[-1] = (direction, norm[-1][1] + dur)
        else:
            norm.append((direction, dur))
    if not norm:
        raise ValueError("a path needs at least one segment of positive duration")
    if sum(d for _, d in norm) != 1:
        raise ValueError("durations must sum to 1")
    return PLPath(rs, tuple(norm))


def straight_path(rs: RootSystem, mu: WeightVec) -> PLPath:
    """The straight line from 0 to ``mu``."""
    return pl_path(rs, [(tuple(mu), Fraction(1))])


# -- height functions -------------------------------------------------------


@dataclass(frozen=True)
class HFunction:
    """Exact piecewise-linear record of one height function of a path."""

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def value_at(self, t) -> Fraction:
        t = Fraction(t)
        bps, vals = self.breakpoints, self.values
        if not bps[0] <= t <= bps[-1]:
            raise ValueError(f"time {t} outside [{bps[0]}, {bps[-1]}]")
        for k in range(len(bps) - 1):
            if t <= bps[k + 1]:
                if bps[k + 1] == bps[k]:
                    continue
                lam = (t - bps[k]) / (bps[k + 1] - bps[k])
                return vals[k] + lam * (vals[k + 1] - vals[k])
        return vals[-1]

    @property
    def min_value(self) -> Fraction:
        return min(self.values)

    def local_minimum_values(self) -> tuple[Fraction, ...]:
        """Values at the local minima, endpoints included, plateaus merged."""
        vals = self.values
        out = []
        last = len(vals) - 1
        i = 0
        while i <= last:
            k = i
            while k < last and vals[k + 1] == vals[i]:
                k += 1
            left_ok = i == 0 or vals[i - 1] > vals[i]
            right_ok = k == last or vals[k + 1] > vals[i]
            if left_ok and right_ok:
                out.append(vals[i])
            i = k + 1
        return tuple(out)

    def has_integral_minima(self) -> bool:
        return all(v.denominator == 1 for v in self.local_minimum_values())


def _slope(rs: RootSystem, direction: WeightVec, j: int) -> Union[int, Fraction]:
    """Pairing of a direction with the j-th simple coroot (j=0: minus the
    highest coroot)."""
    if j == 0:
        return -rs.pairing(direction, rs.highest_root)
    return direction[j - 1]


def h_function(eta: PLPath, j: int) -> HFunction:
    """The j-height function of a path, exactly, as breakpoint data."""
    rs = eta.rs
    if not 0 <= j <= rs.rank:
        raise ValueError(f"operator index {j} out of range 0..{rs.rank}")
    bps = [Fraction(0)]
    vals = [Fraction(0)]
    for direction, dur in eta.segments:
        bps.append(bps[-1] + dur)
        vals.append(vals[-1] + dur * Fraction(_slope(rs, direction, j)))
    return HFunction(tuple(bps), tuple(vals))


def is_integrally_minimal(eta: PLPath) -> bool:
    """Whether every height function of the path has integral local minima."""
    return all(
        h_function(eta, j).has_integral_minima() for j in range(eta.rs.rank + 1)
    )


# -- locating the folding window --------------------------------------------


def _first_hit(h: HFunction, k0: int, target: Fraction) -> Fraction:
    """Least t >= breakpoint k0 with h(t) == target."""
    bps, vals = h.breakpoints, h.values
    for k in range(k0, len(bps) - 1):
        va, vb = vals[k], vals[k + 1]
        if va == target:
            return bps[k]
        if va != vb and (va < target <= vb or vb <= target < va):
            return bps[k] + (target - va) * (bps[k + 1] - bps[k]) / (vb - va)
    if vals[-1] == target:
        return bps[-1]
    raise InternalInconsistencyError(f"value {target} not attained after t={bps[k0]}")


def _last_hit(h: HFunction, k1: int, target: Fraction) -> Fraction:
    """Greatest t <= breakpoint k1 with h(t) == target."""
    bps, vals = h.breakpoints, h.values
    for k in range(k1 - 1, -1, -1):
        va, vb = vals[k], vals[k + 1]
        if vb == target:
            return bps[k + 1]
        if va != vb and (va <= target < vb or vb < target <= va):
            return bps[k] + (target - va) * (bps[k + 1] - bps[k]) / (vb - va)
    if vals[0] == target:
        return bps[0]
    raise InternalInconsistencyError(f"value {target} not attained before t={bps[k1]}")


def _check_domain(eta: PLPath, j: int) -> tuple[HFunction, Fraction]:
    h = h_function(eta, j)
    if not h.has_integral_minima():
        raise PathDomainError(
            f"height function {j} has a non-integral local minimum; "
            "the root operators are not defined here"
        )
    if h.values[-1].denominator != 1:
        raise PathDomainError(
            f"height function {j} has non-integral endpoint {h.values[-1]}; "
            "the path does not end on the weight lattice"
        )
    return h, h.min_value


def _fold(eta: PLPath, j: int, t0: Fraction, t1: Fraction) -> PLPath:
    """Reflect the directions of the [t0, t1] portion of the path.

    Both root operators act this way: the part before t0 is kept, the part
    between t0 and t1 is reflected (by the simple reflection, or by the
    highest-root reflection when j = 0), and the tail is translated by a
    root, which leaves its directions unchanged.  Continuity of the result
    is automatic because the height function moves by exactly 1 across the
    window.
    """
    rs = eta.rs
    mirror_root = rs.highest_root if j == 0 else rs.simple_root(j)
    pieces: list[Segment] = []
    pos = Fraction(0)
    for direction, dur in eta.segments:
        start, end = pos, pos + dur
        for a, b in ((start, min(end, t0)), (max(start, t0), min(end, t1)),
                     (max(start, t1), end)):
            if b > a:
                inside = t0 <= a and b <= t1
                d = rs.reflect(direction, mirror_root) if inside else direction
                pieces.append((d, b - a))
        pos = end
    return pl_path(rs, pieces)


# -- the operators -----------------------------------------------------------


def root_f(eta: PLPath, j: int) -> Optional[PLPath]:
    """Lowering operator: returns None when the path is already lowest.

    Requires the j-height function to have integral local minima.  The
    folding window runs from the last time the height function touches its
    minimum to the first later time it climbs back up by one.
    """
    h, m = _check_domain(eta, j)
    if h.values[-1] - m == 0:
        return None
    k0 = max(k for k, v in enumerate(h.values) if v == m)
    t0 = h.breakpoints[k0]
    t1 = _first_hit(h, k0, m + 1)
    return _fold(eta, j, t0, t1)


def root_e(eta: PLPath, j: int) -> Optional[PLPath]:
    """Raising operator, the mirror of :func:`root_f`.

    Returns None when the minimum of the j-height function is 0; otherwise
    folds between the last time the function sits at minimum-plus-one before
    first reaching its minimum, and that first minimum time.
    """
    h, m = _check_domain(eta, j)
    if m == 0:
        return None
    k1 = min(k for k, v in enumerate(h.values) if v == m)
    t1 = h.breakpoints[k1]
    t0 = _last_hit(h, k1, m + 1)
    return _fold(eta, j, t0, t1)


def epsilon(eta: PLPath, j: int) -> int:
    """How many times the raising operator applies before giving None."""
    _, m = _check_domain(eta, j)
    return int(-m)


def phi(eta: PLPath, j: int) -> int:
    """How many times the lowering operator applies before giving None."""
    h, m = _check_domain(eta, j)
    return int(h.values[-1] - m)


# -- scaling and concatenation ------------------------------------------------


def scale(eta: PLPath, N: int) -> PLPath:
    """Pointwise multiple: t maps to N times the original value."""
    if N < 1:
        raise ValueError(f"scale factor must be a positive integer, got {N}")
    return pl_path(
        eta.rs,
        [(tuple(N * x for x in d), dur) for d, dur in eta.segments],
    )


def concatenate(paths: Sequence[PLPath]) -> PLPath:
    """Run the given paths one after another, each compressed to 1/n time."""
    if not paths:
        raise ValueError("cannot concatenate an empty list of paths")
    rs = paths[0].rs
    if any(p.rs is not rs for p in paths):
        raise ValueError("cannot concatenate paths over different root systems")
    n = len(paths)
    pieces: list[Segment] = []
    for p in paths:
        for d, dur in p.segments:
            pieces.append((tuple(n * x for x in d), dur / n))
    return pl_path(rs, pieces)
