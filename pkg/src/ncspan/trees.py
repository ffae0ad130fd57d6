"""Spanning trees with prescribed degrees, built through Prüfer sequences."""
from __future__ import annotations

import heapq
from typing import Iterable, Sequence


class GeoTree:
    """Spanning tree over vertex indices ``0..n-1``.

    Edges are stored as sorted index pairs, with adjacency kept in sync.
    The geometric embedding is implicit: vertex ``i`` sits at point ``i`` of
    the owning instance.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        self.n = n
        self.edges: set[tuple[int, int]] = set()
        self.adjacency: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in self.edges:
            raise ValueError(f"duplicate edge {key}")
        self.edges.add(key)
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        self.edges.remove((u, v) if u < v else (v, u))
        self.adjacency[u].discard(v)
        self.adjacency[v].discard(u)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def leaves(self) -> set[int]:
        return {v for v in range(self.n) if len(self.adjacency[v]) == 1}

    def is_spanning_tree(self) -> bool:
        if len(self.edges) != self.n - 1:
            return False
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def copy(self) -> "GeoTree":
        return GeoTree(self.n, self.edges)

    def __eq__(self, other):
        return isinstance(other, GeoTree) and self.n == other.n and self.edges == other.edges

    def __repr__(self):
        return f"GeoTree(n={self.n}, edges={self.edge_list()})"


def check_degree_sequence(d: Sequence[int]) -> None:
    n = len(d)
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got {n}")
    if any(x < 1 for x in d):
        raise ValueError(f"degrees must be positive: {list(d)}")
    if sum(d) != 2 * n - 2:
        raise ValueError(f"degree sum {sum(d)} != 2n - 2 = {2 * n - 2}")


def prufer_decode(seq: Sequence[int], n: int) -> GeoTree:
    """Labeled tree on ``n`` vertices whose Prüfer sequence is ``seq``."""
    if len(seq) != n - 2:
        raise ValueError(f"Prüfer sequence for n={n} must have length {n - 2}")
    remaining = [1] * n
    for v in seq:
        remaining[v] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    tree = GeoTree(n)
    for v in seq:
        leaf = heapq.heappop(leaves)
        tree.add_edge(leaf, v)
        remaining[v] -= 1
        if remaining[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    tree.add_edge(u, w)
    return tree


def prufer_encode(tree: GeoTree) -> list[int]:
    """Inverse of :func:`prufer_decode` (smallest leaf removed first)."""
    n = tree.n
    deg = tree.degrees()
    adj = [set(a) for a in tree.adjacency]
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (parent,) = adj[leaf]
        seq.append(parent)
        adj[parent].discard(leaf)
        deg[parent] -= 1
        if deg[parent] == 1:
            heapq.heappush(leaves, parent)
    return seq


def tree_from_degrees(d: Sequence[int]) -> GeoTree:
    """Tree with ``deg(i) == d[i]`` for every vertex.

    Vertex ``i`` is listed ``d[i] - 1`` times, in ascending order, and the
    resulting sequence is decoded.
    """
    check_degree_sequence(d)
    seq = [v for v, k in enumerate(d) for _ in range(k - 1)]
    return prufer_decode(seq, len(d))


def initial_geo_tree(inst, reduced_budget: Sequence[int]) -> GeoTree:
    """Tree where red ``x`` has degree ``reduced_budget[x]`` and blues are leaves.

    No geometric consideration goes into it, so edges may cross.
    """
    if sum(k - 2 for k in reduced_budget) + 2 != inst.n_blue:
        raise ValueError("budgets are not in the equality case for this instance")
    return tree_from_degrees(list(reduced_budget) + [1] * inst.n_blue)
