"""Arc sets on a circle: representation and exact set algebra.

A circle of perimeter ``L >= 1`` carries finite unions of half-open arcs
``[start, start+length)`` taken modulo ``L``.  The canonical form keeps
arcs pairwise disjoint, sorted by start, merged when they overlap or touch
exactly, with at most one arc wrapping through 0 (stored unsplit, with
``start + length > L``).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError

PARTITION_TOL = 1e-12  # relative to L


@dataclass(frozen=True)
class Circle:
    """Circle of perimeter L; all guarantees assume L >= 1."""

    L: float

    def __post_init__(self):
        if not (self.L >= 1.0) or not math.isfinite(self.L):
            raise InvalidInputError(f"perimeter must satisfy L >= 1, got {self.L}")


@dataclass(frozen=True)
class Arc:
    """Half-open arc [start, start+length) mod L; may wrap past 0."""

    start: float
    length: float

    @property
    def end(self) -> float:
        return self.start + self.length


@dataclass(frozen=True)
class ArcSet:
    """Canonical finite union of arcs on a circle.

    Build through :func:`normalize` (or the classmethods); the constructor
    trusts its inputs.
    """

    circle: Circle
    arcs: tuple[Arc, ...] = field(default_factory=tuple)

    @property
    def L(self) -> float:
        return self.circle.L

    def measure(self) -> float:
        return measure(self)

    def bounds_array(self) -> np.ndarray:
        """Flat [s0, e0, s1, e1, ...] vector for the numeric kernels."""
        out = np.empty(2 * len(self.arcs), dtype=np.float64)
        for i, a in enumerate(self.arcs):
            out[2 * i] = a.start
            out[2 * i + 1] = a.end
        return out

    def endpoints(self) -> list[float]:
        """All arc endpoints reduced into [0, L), starts and ends alternating."""
        L = self.L
        out = []
        for a in self.arcs:
            out.append(a.start)
            e = a.end
            out.append(e - L if e >= L else e)
        return out

    def to_json_dict(self) -> dict:
        return {"L": self.L, "arcs": [[a.start, a.length] for a in self.arcs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "ArcSet":
        try:
            L = float(data["L"])
            raw = [(float(s), float(ln)) for s, ln in data["arcs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"bad arc-set JSON: {exc}") from exc
        return normalize(raw, L)

    @classmethod
    def from_json(cls, text: str) -> "ArcSet":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"bad JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise InvalidInputError("arc-set JSON must be an object")
        return cls.from_json_dict(data)


@dataclass(frozen=True)
class Partition:
    """Arc sets tiling the circle (pairwise disjoint, total measure L)."""

    circle: Circle
    parts: tuple[ArcSet, ...]

    def __post_init__(self):
        if not is_partition(list(self.parts), self.circle.L):
            raise InvalidInputError("parts do not partition the circle")

    @property
    def L(self) -> float:
        return self.circle.L

    def to_json_dict(self) -> dict:
        return {
            "L": self.L,
            "parts": [[[a.start, a.length] for a in p.arcs] for p in self.parts],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Partition":
        try:
            L = float(data["L"])
            parts = [
                normalize([(float(s), float(ln)) for s, ln in arcs], L)
                for arcs in data["parts"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"bad partition JSON: {exc}") from exc
        return cls(Circle(L), tuple(parts))


def normalize(raw_arcs, L: float) -> ArcSet:
    """Canonicalize a list of (start, length) pairs on the circle of perimeter L.

    Zero-length arcs are dropped; overlapping or exactly touching arcs are
    merged, including merges across 0.  Touching means exact endpoint
    equality; callers wanting fuzzy merging must pre-round.
    """
    circle = Circle(float(L))
    L = circle.L
    segs = []
    for start, length in raw_arcs:
        start = float(start)
        length = float(length)
        if not (math.isfinite(start) and math.isfinite(length)):
            raise InvalidInputError("arc start/length must be finite")
        if length < 0.0:
            raise InvalidInputError(f"negative arc length {length}")
        if length > L:
            raise InvalidInputError(
                f"arc length {length} exceeds the perimeter {L}")
        if length == 0.0:
            continue
        if length == L:
            return ArcSet(circle, (Arc(0.0, L),))
        s = math.fmod(start, L)
        if s < 0.0:
            s += L
        if s >= L:  # rounding of a tiny negative remainder
            s = 0.0
        segs.append((s, s + length))
    if not segs:
        return ArcSet(circle, ())

    segs.sort()
    merged = [list(segs[0])]
    for s, e in segs[1:]:
        if s <= merged[-1][1]:
            if e > merged[-1][1]:
                merged[-1][1] = e
        else:
            merged.append([s, e])

    # an exact touch through 0 (last ends at L, first starts at 0) is a
    # zero gap and must merge like any other touch
    if len(merged) > 1 and merged[0][0] == 0.0 and merged[-1][1] == L:
        s_last = merged[-1][0]
        merged[-1][1] = L + merged[0][1]
        merged.pop(0)
        if merged[-1][1] - s_last >= L:
            return ArcSet(circle, (Arc(0.0, L),))

    # resolve the wrap: only the last interval can stick out past L
    if merged[-1][1] > L:
        s_last, e_last = merged[-1]
        over = e_last - L
        while merged and len(merged) > 1:
            s0, e0 = merged[0]
            if s0 <= over:
                if e0 > over:
                    over = e0
                    e_last = over + L
                merged.pop(0)
            else:
                break
        if e_last - s_last >= L or over >= s_last:
            return ArcSet(circle, (Arc(0.0, L),))
        merged[-1] = [s_last, e_last]

    # e - s can round to zero for subnormal lengths; such arcs are dropped
    arcs = tuple(Arc(s, e - s) for s, e in merged if e - s > 0.0)
    total = sum(a.length for a in arcs)
    if total > L:
        raise InvalidInputError(
            f"total arc length {total} exceeds the perimeter {L}")
    return ArcSet(circle, arcs)


def measure(A: ArcSet) -> float:
    """Total length of the arcs (so density = measure / L)."""
    return float(sum(a.length for a in A.arcs))


def _segments(A: ArcSet) -> list[tuple[float, float]]:
    """Non-wrapping [lo, hi) segments in [0, L) covering A, sorted."""
    L = A.L
    segs = []
    for a in A.arcs:
        if a.end > L:
            segs.append((a.start, L))
            segs.append((0.0, a.end - L))
        else:
            segs.append((a.start, a.end))
    segs.sort()
    return segs


def complement(A: ArcSet) -> ArcSet:
    """Arcs covering exactly the rest of the circle."""
    L = A.L
    if not A.arcs:
        return ArcSet(A.circle, (Arc(0.0, L),))
    raw = []
    arcs = A.arcs
    n = len(arcs)
    for i, a in enumerate(arcs):
        e = a.end
        e_mod = e - L if e >= L else e
        nxt = arcs[(i + 1) % n].start
        gap = nxt - e_mod
        if gap < 0.0:
            gap += L
        if gap > 0.0:
            raw.append((e_mod, gap))
    return normalize(raw, L)


def rotate(A: ArcSet, c: float) -> ArcSet:
    """Shift every arc by c (mod L)."""
    return normalize([(a.start + c, a.length) for a in A.arcs], A.L)


def reflect(A: ArcSet) -> ArcSet:
    """Mirror x -> -x mod L (half-open boundary shifts are measure zero)."""
    return normalize([(-a.end, a.length) for a in A.arcs], A.L)


def intersection_measure(A: ArcSet, B: ArcSet) -> float:
    """Measure of the overlap of two arc sets on the same circle."""
    if A.L != B.L:
        raise InvalidInputError("arc sets live on different circles")
    total = 0.0
    for lo1, hi1 in _segments(A):
        for lo2, hi2 in _segments(B):
            lo = max(lo1, lo2)
            hi = min(hi1, hi2)
            if hi > lo:
                total += hi - lo
    return total


def is_partition(parts, L: float) -> bool:
    """Whether the arc sets tile the circle of perimeter L.

    Pairwise intersections must vanish and the total measure must equal L,
    both within 1e-12 * L.
    """
    tol = PARTITION_TOL * L
    for p in parts:
        if p.L != L:
            return False
    total = sum(measure(p) for p in parts)
    if abs(total - L) > tol:
        return False
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if intersection_measure(parts[i], parts[j]) > tol:
                return False
    return True
