"""Independent checks of solver output and a brute-force existence oracle.

Nothing here touches the swap engine.  The verifier works from a raw edge
list and the scalar kernel predicates; the oracle enumerates Prüfer
sequences directly.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .geometry import Segment, properly_cross
from .instance import InfeasibleInstance, Instance, check_feasibility
from .trees import GeoTree, prufer_decode

ORACLE_MAX_N = 9


class OracleSizeError(ValueError):
    pass


@dataclass
class VerifyReport:
    is_spanning_tree: bool
    crossing_pairs: list[tuple[tuple[int, int], tuple[int, int]]] = field(default_factory=list)
    leaf_set_equals_B: bool = True
    degree_violations: list[tuple[int, int, int]] = field(default_factory=list)
    equality_degrees_ok: bool = True

    @property
    def passed(self) -> bool:
        return (self.is_spanning_tree and self.leaf_set_equals_B and self.equality_degrees_ok
                and not self.crossing_pairs and not self.degree_violations)

    def failures(self) -> list[str]:
        out = []
        if not self.is_spanning_tree:
            out.append("not a spanning tree")
        if self.crossing_pairs:
            out.append(f"{len(self.crossing_pairs)} crossing edge pairs, first {self.crossing_pairs[0]}")
        if not self.leaf_set_equals_B:
            out.append("leaf set differs from the blue set")
        if self.degree_violations:
            out.append(f"red degree out of [2, f]: {self.degree_violations[:5]}")
        if not self.equality_degrees_ok:
            out.append("equality instance but some red degree != f")
        return out


def _crossings(edges: list[tuple[int, int]], pts) -> list:
    segs = [Segment(a, b) for a, b in edges]
    boxes = []
    for s in segs:
        (x1, y1), (x2, y2) = pts[s.a], pts[s.b]
        boxes.append((min(x1, x2), max(x1, x2), min(y1, y2), max(y1, y2)))
    out = []
    for i in range(len(segs)):
        bi = boxes[i]
        for j in range(i + 1, len(segs)):
            bj = boxes[j]
            # disjoint boxes cannot cross; the predicate decides the rest
            if bi[1] < bj[0] or bj[1] < bi[0] or bi[3] < bj[2] or bj[3] < bi[2]:
                continue
            if properly_cross(segs[i], segs[j], pts):
                out.append((edges[i], edges[j]))
    return out


def verify(inst: Instance, edges: Iterable[tuple[int, int]] | GeoTree) -> VerifyReport:
    if isinstance(edges, GeoTree):
        edges = edges.edge_list()
    edges = sorted((min(a, b), max(a, b)) for a, b in edges)
    n = inst.n
    pts = inst.points

    deg = [0] * n
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    acyclic = True
    in_range = all(0 <= a < n and 0 <= b < n and a != b for a, b in edges)
    if in_range:
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
            ra, rb = find(a), find(b)
            if ra == rb:
                acyclic = False
            parent[ra] = rb
    spanning = (in_range and acyclic and len(edges) == n - 1
                and len(set(edges)) == len(edges))

    leaves = {v for v in range(n) if deg[v] == 1}
    blue = set(range(inst.n_red, n))
    violations = [(x, deg[x], inst.budget[x]) for x in range(inst.n_red)
                  if not 2 <= deg[x] <= inst.budget[x]]
    equality_ok = True
    if check_feasibility(inst).slack == 0:
        equality_ok = all(deg[x] == inst.budget[x] for x in range(inst.n_red))
    crossings = _crossings(edges, pts) if in_range else []
    return VerifyReport(spanning, crossings, leaves == blue, violations, equality_ok)


@dataclass
class OracleResult:
    feasible: list[GeoTree]
    non_crossing: list[GeoTree]

    def contains(self, edges) -> bool:
        key = frozenset((min(a, b), max(a, b)) for a, b in edges)
        return any(frozenset(t.edges) == key for t in self.non_crossing)


def _degree_valid(seq, inst: Instance) -> bool:
    count = Counter(seq)
    for v in range(inst.n_red, inst.n):
        if count[v]:
            return False
    return all(1 <= count[x] <= inst.budget[x] - 1 for x in range(inst.n_red))


def enumerate_feasible_trees(inst: Instance, prune: bool = True) -> OracleResult:
    """All labeled trees with leaf set B and red degrees in [2, f].

    A Prüfer sequence lists every vertex ``deg - 1`` times, so blue leaves
    never occur in it.  With ``prune`` the enumeration only runs over
    sequences drawn from the red labels; ``prune=False`` walks all
    ``n**(n-2)`` sequences and filters, which gives the same set.
    """
    n = inst.n
    if n > ORACLE_MAX_N:
        raise OracleSizeError(f"oracle is limited to n <= {ORACLE_MAX_N}, got {n}")
    report = check_feasibility(inst)
    if not report.status.feasible:
        raise InfeasibleInstance(report)
    alphabet = range(inst.n_red) if prune else range(n)
    feasible, clean = [], []
    for seq in itertools.product(alphabet, repeat=n - 2):
        if not _degree_valid(seq, inst):
            continue
        tree = prufer_decode(seq, n)
        feasible.append(tree)
        if not _crossings(tree.edge_list(), inst.points):
            clean.append(tree)
    return OracleResult(feasible, clean)


def oracle_check(inst: Instance) -> bool:
    """True iff some degree-valid tree on the instance is non-crossing."""
    return bool(enumerate_feasible_trees(inst).non_crossing)
