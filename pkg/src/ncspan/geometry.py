"""Exact planar predicates over integer-coordinate points.

Every predicate is decided with integer arithmetic.  The scalar functions use
Python ints and therefore never overflow.  The batch functions use int64
numpy arrays, which is exact as long as coordinates satisfy
``|c| <= COORD_LIMIT`` (each cross product then stays below 2**63).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

COORD_LIMIT = 2**30


class ExactPoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Segment:
    """Straight edge between two vertex indices of a point array."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"degenerate segment ({self.a}, {self.b})")

    def key(self) -> tuple[int, int]:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)


@dataclass(frozen=True)
class Violation:
    """Witness that a point set is not in general position.

    ``kind`` is ``"duplicate"`` (``indices`` is a pair) or ``"collinear"``
    (``indices`` is a triple).
    """

    kind: str
    indices: tuple[int, ...]

    def __str__(self):
        idx = ", ".join(map(str, self.indices))
        return f"{self.kind} points ({idx})"


def orientation(p, q, r) -> int:
    """Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def properly_cross(s1: Segment, s2: Segment, pts: Sequence) -> bool:
    """True iff the two segments meet at a point interior to both.

    Segments sharing an endpoint never count as crossing; under general
    position they cannot meet anywhere else.
    """
    if s1.a in (s2.a, s2.b) or s1.b in (s2.a, s2.b):
        return False
    a, b, c, d = pts[s1.a], pts[s1.b], pts[s2.a], pts[s2.b]
    return (orientation(a, b, c) * orientation(a, b, d) < 0
            and orientation(c, d, a) * orientation(c, d, b) < 0)


def euclid_length(s: Segment, pts: Sequence) -> float:
    p, q = pts[s.a], pts[s.b]
    return math.hypot(q[0] - p[0], q[1] - p[1])


def check_coordinates(pts: Sequence) -> None:
    for i, (x, y) in enumerate(pts):
        if not (isinstance(x, (int, np.integer)) and isinstance(y, (int, np.integer))):
            raise TypeError(f"point {i} has non-integer coordinates ({x!r}, {y!r})")
        if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
            raise ValueError(f"point {i} exceeds coordinate limit 2**30: ({x}, {y})")


def validate_general_position(pts: Sequence) -> Violation | None:
    """Return ``None`` if the points are distinct and no three are collinear.

    Otherwise the lexicographically smallest witness is returned; duplicate
    pairs are reported before collinear triples.  Each anchor point ``i``
    buckets the directions to all later points after reducing them by their
    gcd, so two later points share a bucket exactly when they are collinear
    with ``i``.
    """
    arr = as_array(pts)
    n = len(arr)
    if n < 2:
        return None
    _, inverse, counts = np.unique(arr, axis=0, return_inverse=True, return_counts=True)
    if counts.max() > 1:
        inverse = inverse.reshape(-1)
        pairs = []
        for grp in np.flatnonzero(counts > 1):
            members = np.flatnonzero(inverse == grp)
            pairs.append((int(members[0]), int(members[1])))
        return Violation("duplicate", min(pairs))
    for i in range(n - 2):
        d = arr[i + 1:] - arr[i]
        g = np.gcd(d[:, 0], d[:, 1])
        d = d // g[:, None]
        flip = (d[:, 0] < 0) | ((d[:, 0] == 0) & (d[:, 1] < 0))
        d[flip] *= -1
        _, inverse, counts = np.unique(d, axis=0, return_inverse=True, return_counts=True)
        if counts.max() < 2:
            continue
        inverse = inverse.reshape(-1)
        for j in range(len(d)):
            grp = inverse[j]
            if counts[grp] > 1:
                members = np.flatnonzero(inverse == grp)
                k = members[members > j][0]
                return Violation("collinear", (i, i + 1 + j, i + 1 + int(k)))
    return None


def as_array(pts: Sequence) -> np.ndarray:
    return np.asarray([(int(p[0]), int(p[1])) for p in pts], dtype=np.int64).reshape(-1, 2)


def _orient_batch(px, py, qx, qy, rx, ry) -> np.ndarray:
    return np.sign((qx - px) * (ry - py) - (qy - py) * (rx - px))


def crossing_mask(a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Vectorised proper-crossing test of segments a-b against c-d.

    All four arguments are (..., 2) int64 coordinate arrays that broadcast
    together.  Shared endpoints yield a zero orientation and hence ``False``.
    """
    o1 = _orient_batch(a[..., 0], a[..., 1], b[..., 0], b[..., 1], c[..., 0], c[..., 1])
    o2 = _orient_batch(a[..., 0], a[..., 1], b[..., 0], b[..., 1], d[..., 0], d[..., 1])
    o3 = _orient_batch(c[..., 0], c[..., 1], d[..., 0], d[..., 1], a[..., 0], a[..., 1])
    o4 = _orient_batch(c[..., 0], c[..., 1], d[..., 0], d[..., 1], b[..., 0], b[..., 1])
    return (o1 * o2 < 0) & (o3 * o4 < 0)


def all_crossing_pairs(edges: Sequence[tuple[int, int]], pts) -> list[tuple[int, int]]:
    """Indices ``(i, j)``, ``i < j``, of every properly crossing edge pair."""
    if len(edges) < 2:
        return []
    arr = pts if isinstance(pts, np.ndarray) else as_array(pts)
    e = np.asarray(edges, dtype=np.int64)
    a, b = arr[e[:, 0]], arr[e[:, 1]]
    m = crossing_mask(a[:, None], b[:, None], a[None, :], b[None, :])
    i, j = np.nonzero(np.triu(m, 1))
    return list(zip(i.tolist(), j.tolist()))
