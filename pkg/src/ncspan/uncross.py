"""Crossing removal by degree-preserving, length-decreasing edge swaps.

Two properly crossing tree edges are replaced by two edges on the same four
endpoints.  Each endpoint loses one incident edge and gains one, so every
degree is kept.  The new pair is a pair of opposite sides of the convex
quadrilateral spanned by the crossing, so the triangle inequality at the
crossing point makes the total length strictly smaller.  There are finitely
many trees, so repeating the swap must stop, and it can only stop once no
crossings are left.
"""
from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .geometry import Segment, all_crossing_pairs, as_array, crossing_mask, euclid_length
from .instance import InfeasibleInstance, Instance, check_feasibility, reduce_budget
from .trees import GeoTree, initial_geo_tree

Edge = tuple[int, int]


class IterationCapExceeded(RuntimeError):
    pass


class SwapError(RuntimeError):
    """No degree-preserving reconnection exists; means the tree was invalid."""


class CaseClass(str, enum.Enum):
    RRRR = "RRRR"  # four red endpoints
    RRRB = "RRRB"  # exactly one blue endpoint
    RBRB = "RBRB"  # two blue endpoints, one on each edge


@dataclass(frozen=True)
class CrossingEvent:
    e1: Segment
    e2: Segment
    case_class: CaseClass


@dataclass(frozen=True)
class SwapRecord:
    removed: tuple[Segment, Segment]
    added: tuple[Segment, Segment]
    case_class: CaseClass
    length_delta: float
    total_after: float = math.nan


@dataclass
class UncrossTrace:
    swaps: list[SwapRecord] = field(default_factory=list)
    initial_length: float = 0.0
    final_length: float = 0.0

    @property
    def swap_count(self) -> int:
        return len(self.swaps)


@dataclass
class Solution:
    tree: GeoTree
    trace: UncrossTrace
    reduced_budget: list[int]


def default_max_iters(n: int) -> int:
    return 10 * n**3


def total_length(tree: GeoTree, pts) -> float:
    return math.fsum(math.hypot(pts[a][0] - pts[b][0], pts[a][1] - pts[b][1])
                     for a, b in tree.edges)


def _blue_mask(colors) -> list[bool]:
    return [c == "B" for c in colors]


def classify(e1: Edge, e2: Edge, blue: Sequence[bool]) -> CaseClass:
    b1 = blue[e1[0]] + blue[e1[1]]
    b2 = blue[e2[0]] + blue[e2[1]]
    if b1 == 2 or b2 == 2:
        # blue vertices are leaves, so a blue-blue edge is the whole tree
        raise SwapError(f"blue-blue edge in a crossing pair: {e1}, {e2}")
    return {0: CaseClass.RRRR, 1: CaseClass.RRRB, 2: CaseClass.RBRB}[b1 + b2]


def find_crossing(t: GeoTree, pts, colors) -> CrossingEvent | None:
    """First properly crossing edge pair in lexicographic order, or None."""
    edges = t.edge_list()
    pairs = all_crossing_pairs(edges, pts)
    if not pairs:
        return None
    i, j = pairs[0]
    e1, e2 = edges[i], edges[j]
    return CrossingEvent(Segment(*e1), Segment(*e2), classify(e1, e2, _blue_mask(colors)))


def component_split(t: GeoTree, e1: Segment, e2: Segment) -> list[int]:
    """Component label (0, 1 or 2) of every vertex of ``t - e1 - e2``.

    Labels are numbered by the smallest vertex in each component.
    """
    cut = {e1.key(), e2.key()}
    if len(cut) != 2 or not all(t.has_edge(*e) for e in cut):
        raise ValueError(f"{e1}, {e2} are not two distinct tree edges")
    label = [-1] * t.n
    count = 0
    for root in range(t.n):
        if label[root] >= 0:
            continue
        label[root] = count
        stack = [root]
        while stack:
            v = stack.pop()
            for w in t.adjacency[v]:
                if label[w] < 0 and ((v, w) if v < w else (w, v)) not in cut:
                    label[w] = count
                    stack.append(w)
        count += 1
    if count != 3:
        raise SwapError(f"removing two edges left {count} components")
    return label


def _reconnects(label, p: Edge, q: Edge) -> bool:
    lp = {label[p[0]], label[p[1]]}
    lq = {label[q[0]], label[q[1]]}
    return len(lp) == 2 and len(lq) == 2 and lp != lq


def _choose(ev: CrossingEvent, label, blue) -> tuple[Edge, Edge]:
    a, b = ev.e1.a, ev.e1.b
    c, d = ev.e2.a, ev.e2.b
    if ev.case_class is CaseClass.RRRR:
        s, t, u, v = a, b, c, d
        for cand in (((s, u), (v, t)), ((s, v), (u, t))):
            if _reconnects(label, *cand):
                return cand
        raise SwapError(f"no reconnection for {ev}")
    if ev.case_class is CaseClass.RRRB:
        # name the edges st (both red) and ux (x blue)
        if blue[a] or blue[b]:
            (a, b), (c, d) = (c, d), (a, b)
        s, t = a, b
        u, x = (d, c) if blue[c] else (c, d)
        if label[x] == label[u] or label[x] in (label[s], label[t]):
            raise SwapError(f"blue endpoint {x} is not a leaf")
        if label[u] == label[t]:
            return (s, u), (t, x)
        return (u, t), (s, x)
    # RBRB: edges sy and ux with y, x blue
    s, y = (b, a) if blue[a] else (a, b)
    u, x = (d, c) if blue[c] else (c, d)
    if label[s] != label[u]:
        raise SwapError(f"red endpoints {s}, {u} separated in {ev}")
    return (s, x), (u, y)


def apply_swap(t: GeoTree, ev: CrossingEvent, pts, colors) -> SwapRecord:
    """Replace the crossing pair of ``ev`` by its tree-preserving re-pairing."""
    blue = colors if colors and isinstance(colors[0], bool) else _blue_mask(colors)
    label = component_split(t, ev.e1, ev.e2)
    p, q = _choose(ev, label, blue)
    if not _reconnects(label, p, q):
        raise SwapError(f"chosen reconnection {p}, {q} does not form a tree")
    old = euclid_length(ev.e1, pts) + euclid_length(ev.e2, pts)
    t.remove_edge(ev.e1.a, ev.e1.b)
    t.remove_edge(ev.e2.a, ev.e2.b)
    t.add_edge(*p)
    t.add_edge(*q)
    added = (Segment(*p), Segment(*q))
    new = euclid_length(added[0], pts) + euclid_length(added[1], pts)
    return SwapRecord((ev.e1, ev.e2), added, ev.case_class, new - old)


class _CrossingIndex:
    """All crossing pairs of the current tree, updated edge by edge.

    Pairs are keyed ``(e, f)`` with ``e < f``; the heap yields them in the
    same lexicographic order as a full rescan would.
    """

    def __init__(self, t: GeoTree, arr: np.ndarray):
        self.arr = arr
        edges = sorted(t.edges)
        self.partners: dict[Edge, set[Edge]] = {e: set() for e in edges}
        self.slot = {e: k for k, e in enumerate(edges)}
        self.order = list(edges)
        self.ends = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        self.heap: list[tuple[Edge, Edge]] = []
        for i, j in all_crossing_pairs(edges, arr):
            self._link(edges[i], edges[j])
        heapq.heapify(self.heap)

    def _link(self, e: Edge, f: Edge) -> None:
        self.partners[e].add(f)
        self.partners[f].add(e)
        self.heap.append((e, f) if e < f else (f, e))

    def first(self) -> tuple[Edge, Edge] | None:
        while self.heap:
            e, f = self.heap[0]
            if e in self.partners and f in self.partners[e]:
                return e, f
            heapq.heappop(self.heap)
        return None

    def remove(self, e: Edge) -> None:
        for f in self.partners.pop(e):
            self.partners[f].discard(e)
        k = self.slot.pop(e)
        last = self.order.pop()
        if last != e:
            self.order[k] = last
            self.slot[last] = k
            self.ends[k] = self.ends[len(self.order)]
        self.ends = self.ends[:len(self.order)]

    def insert(self, e: Edge) -> None:
        arr, ends = self.arr, self.ends
        hit = crossing_mask(arr[e[0]], arr[e[1]], arr[ends[:, 0]], arr[ends[:, 1]])
        self.partners[e] = set()
        for k in np.flatnonzero(hit).tolist():
            f = self.order[k]
            self.partners[e].add(f)
            self.partners[f].add(e)
            heapq.heappush(self.heap, (e, f) if e < f else (f, e))
        self.slot[e] = len(self.order)
        self.order.append(e)
        self.ends = np.vstack([ends, np.asarray(e, dtype=np.int64)[None]])


def uncross(t: GeoTree, pts, colors, max_iters: int | None = None,
            observer: Callable[[GeoTree, SwapRecord], None] | None = None) -> UncrossTrace:
    """Swap away crossings until none remain; mutates ``t``.

    Always resolves the lexicographically first crossing pair.  ``observer``
    is called after every swap with the tree and the swap record.
    """
    if max_iters is None:
        max_iters = default_max_iters(t.n)
    blue = _blue_mask(colors)
    arr = pts if isinstance(pts, np.ndarray) else as_array(pts)
    plist = [(int(x), int(y)) for x, y in arr]
    index = _CrossingIndex(t, arr)
    length = total_length(t, plist)
    trace = UncrossTrace(initial_length=length)
    while (pair := index.first()) is not None:
        if len(trace.swaps) >= max_iters:
            raise IterationCapExceeded(f"more than {max_iters} swaps")
        e1, e2 = pair
        ev = CrossingEvent(Segment(*e1), Segment(*e2), classify(e1, e2, blue))
        rec = apply_swap(t, ev, plist, blue)
        for s in rec.removed:
            index.remove(s.key())
        for s in rec.added:
            index.insert(s.key())
        length += rec.length_delta
        rec = SwapRecord(rec.removed, rec.added, rec.case_class, rec.length_delta, length)
        trace.swaps.append(rec)
        if observer is not None:
            observer(t, rec)
    trace.final_length = total_length(t, plist)
    return trace


def solve(inst: Instance, k: int | None = None, max_iters: int | None = None,
          observer=None) -> Solution:
    """Non-crossing spanning tree with leaf set B and red degrees in [2, f].

    With ``k`` given, every red budget is replaced by ``k``.
    """
    if k is not None:
        if k < 2:
            raise ValueError(f"uniform degree bound must be >= 2, got {k}")
        inst = Instance(inst.red, inst.blue, [k] * inst.n_red, check_position=False)
    report = check_feasibility(inst)
    if not report.status.feasible:
        raise InfeasibleInstance(report)
    reduced = reduce_budget(inst)
    tree = initial_geo_tree(inst, reduced)
    trace = uncross(tree, inst.points, inst.colors(), max_iters, observer)
    return Solution(tree, trace, reduced)
