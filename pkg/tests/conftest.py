from fractions import Fraction
from itertools import combinations

import pytest

from ncspan.generate import generate


def segments_cross_exact(a, b, c, d):
    """Rational intersection of a-b and c-d, strictly inside both (oracle)."""
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    den = rx * sy - ry * sx
    if den == 0:
        return False
    t = Fraction((c[0] - a[0]) * sy - (c[1] - a[1]) * sx, den)
    u = Fraction((c[0] - a[0]) * ry - (c[1] - a[1]) * rx, den)
    return 0 < t < 1 and 0 < u < 1


def brute_general_position(pts):
    for i, j in combinations(range(len(pts)), 2):
        if tuple(pts[i]) == tuple(pts[j]):
            return ("duplicate", (i, j))
    for i, j, k in combinations(range(len(pts)), 3):
        (ax, ay), (bx, by), (cx, cy) = pts[i], pts[j], pts[k]
        if (bx - ax) * (cy - ay) == (by - ay) * (cx - ax):
            return ("collinear", (i, j, k))
    return None


def all_labeled_trees(n):
    """Every spanning tree of K_n by edge-subset enumeration."""
    pairs = list(combinations(range(n), 2))
    for subset in combinations(pairs, n - 1):
        parent = list(range(n))

        def find(v):
            while parent[v] != v:
                v = parent[v]
            return v

        ok = True
        for a, b in subset:
            ra, rb = find(a), find(b)
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        if ok:
            yield frozenset(subset)


@pytest.fixture
def case3_instance():
    from ncspan import Instance
    # s=(0,0), u=(4,0) red; y=(4,3), x=(0,3) blue
    return Instance([(0, 0), (4, 0)], [(4, 3), (0, 3)], [2, 2])


@pytest.fixture
def small_instances():
    out = []
    for seed in range(40):
        n_red = 1 + seed % 4
        out.append(generate(n_red, 2 + seed % (n_red + 1), "uniform:3", 50, seed))
    return out


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
