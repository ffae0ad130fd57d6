import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from ncspan import (CaseClass, GeoTree, Instance, IterationCapExceeded, Segment, SwapError,
                    apply_swap, component_split, find_crossing, solve, uncross, verify)
from ncspan.generate import generate, random_points
from ncspan.trees import prufer_decode
from ncspan.uncross import total_length


def test_star_has_no_crossing():
    inst = Instance([(0, 0)], [(5, 1), (-3, 4), (2, -6), (-4, -4)], [4])
    t = GeoTree(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert find_crossing(t, inst.points, inst.colors()) is None


def test_x_configuration_found_and_classified():
    # edges (0,0)-(4,3) and (4,0)-(0,3)
    pts = [(0, 0), (4, 0), (4, 3), (0, 3)]
    colors = ["R", "R", "B", "B"]
    t = GeoTree(4, [(0, 1), (0, 2), (1, 3)])
    ev = find_crossing(t, pts, colors)
    assert (ev.e1.key(), ev.e2.key(), ev.case_class) == ((0, 2), (1, 3), CaseClass.RBRB)
    ev = find_crossing(t, pts, ["R"] * 4)
    assert ev.case_class is CaseClass.RRRR
    ev = find_crossing(t, pts, ["R", "R", "R", "B"])
    assert ev.case_class is CaseClass.RRRB


def test_convex_path_has_no_crossing():
    n = 12
    pts = [(round(1000 * math.cos(2 * math.pi * k / n)), round(1000 * math.sin(2 * math.pi * k / n)))
           for k in range(n)]
    t = GeoTree(n, [(k, k + 1) for k in range(n - 1)])
    assert find_crossing(t, pts, ["R"] * n) is None


def test_component_split_examples():
    path = GeoTree(4, [(0, 1), (1, 2), (2, 3)])
    lab = component_split(path, Segment(0, 1), Segment(2, 3))
    assert lab == [0, 1, 1, 2]
    star = GeoTree(4, [(0, 1), (0, 2), (0, 3)])
    lab = component_split(star, Segment(0, 1), Segment(0, 2))
    assert lab[0] == lab[3] and len({lab[1], lab[2], lab[0]}) == 3


@settings(max_examples=200)
@given(st.integers(3, 25), st.data())
def test_component_split_three_parts(n, data):
    seq = data.draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    t = prufer_decode(seq, n)
    e1, e2 = data.draw(st.lists(st.sampled_from(t.edge_list()), min_size=2, max_size=2, unique=True))
    lab = component_split(t, Segment(*e1), Segment(*e2))
    assert sorted(set(lab)) == [0, 1, 2]
    assert lab[e1[0]] != lab[e1[1]] and lab[e2[0]] != lab[e2[1]]


def test_case3_concrete(case3_instance):
    inst = case3_instance
    s, u, y, x = 0, 1, 2, 3
    t = GeoTree(4, [(s, u), (s, y), (u, x)])
    ev = find_crossing(t, inst.points, inst.colors())
    assert ev.case_class is CaseClass.RBRB
    rec = apply_swap(t, ev, inst.points, inst.colors())
    assert {e.key() for e in rec.added} == {(s, x), (u, y)}
    assert rec.length_delta == pytest.approx(6 - 10)
    assert t.edges == {(0, 1), (0, 3), (1, 2)}
    assert find_crossing(t, inst.points, inst.colors()) is None


def test_case3_uncross_one_swap(case3_instance):
    inst = case3_instance
    t = GeoTree(4, [(0, 1), (0, 2), (1, 3)])
    trace = uncross(t, inst.points, inst.colors())
    assert trace.swap_count == 1
    assert trace.initial_length == pytest.approx(14) and trace.final_length == pytest.approx(10)
    assert uncross(t, inst.points, inst.colors()).swap_count == 0


def _check_swap(t, ev, pts, colors):
    before = t.degrees()
    length = total_length(t, pts)
    rec = apply_swap(t, ev, pts, colors)
    assert t.degrees() == before
    assert t.is_spanning_tree()
    assert rec.length_delta < 0
    assert total_length(t, pts) < length
    blue = [c == "B" for c in colors]
    assert all(not (blue[s.a] and blue[s.b]) for s in rec.added)
    assert {v for s in rec.removed for v in (s.a, s.b)} == {v for s in rec.added for v in (s.a, s.b)}
    return rec


@pytest.mark.parametrize("seed", range(60))
def test_random_swaps_preserve_invariants(seed):
    rng = random.Random(seed)
    n_red = rng.randint(2, 10)
    budget = [rng.randint(2, 4) for _ in range(n_red)]
    n_blue = sum(k - 2 for k in budget) + 2
    pts = random_points(n_red + n_blue, 500, rng)
    inst = Instance(pts[:n_red], pts[n_red:], budget)
    colors = inst.colors()
    seq = [v for v in range(n_red) for _ in range(budget[v] - 1)]
    rng.shuffle(seq)
    t = prufer_decode(seq, inst.n)
    while (ev := find_crossing(t, inst.points, colors)) is not None:
        _check_swap(t, ev, inst.points, colors)


def test_all_case_classes_and_subcases_occur():
    seen = set()
    rng = random.Random(11)
    for _ in range(200):
        n_red = rng.randint(2, 8)
        budget = [rng.randint(2, 4) for _ in range(n_red)]
        n_blue = sum(k - 2 for k in budget) + 2
        pts = random_points(n_red + n_blue, 300, rng)
        inst = Instance(pts[:n_red], pts[n_red:], budget)
        seq = [v for v in range(n_red) for _ in range(budget[v] - 1)]
        rng.shuffle(seq)
        t = prufer_decode(seq, inst.n)
        while (ev := find_crossing(t, inst.points, inst.colors())) is not None:
            rec = _check_swap(t, ev, inst.points, inst.colors())
            s, tt = ev.e1.a, ev.e1.b
            u, v = ev.e2.a, ev.e2.b
            added = {e.key() for e in rec.added}
            first = {tuple(sorted(p)) for p in ((s, u), (v, tt))}
            seen.add((rec.case_class, added == first))
    assert {c for c, _ in seen} == set(CaseClass)
    assert (CaseClass.RRRR, True) in seen and (CaseClass.RRRR, False) in seen
    assert (CaseClass.RRRB, True) in seen and (CaseClass.RRRB, False) in seen


def _naive_uncross(t, pts, colors):
    removed = []
    while (ev := find_crossing(t, pts, colors)) is not None:
        rec = apply_swap(t, ev, pts, colors)
        removed.append(tuple(s.key() for s in rec.removed))
    return removed


@pytest.mark.parametrize("seed", range(30))
def test_incremental_search_matches_full_rescan(seed):
    inst = generate(5 + seed, 5 + seed, "uniform:3", 10**4, seed)
    sol = solve(inst)
    from ncspan import initial_geo_tree
    t = initial_geo_tree(inst, sol.reduced_budget)
    naive = _naive_uncross(t, inst.points, inst.colors())
    assert naive == [tuple(s.key() for s in r.removed) for r in sol.trace.swaps]
    assert t == sol.tree


def test_iteration_cap(case3_instance):
    inst = case3_instance
    t = GeoTree(4, [(0, 1), (0, 2), (1, 3)])
    with pytest.raises(IterationCapExceeded):
        uncross(t, inst.points, inst.colors(), max_iters=0)


def test_blue_blue_crossing_is_unreachable():
    pts = [(0, 0), (4, 3), (4, 0), (0, 3)]
    t = GeoTree(4, [(0, 1), (2, 3), (1, 2)])
    with pytest.raises(SwapError):
        find_crossing(t, pts, ["B"] * 4)


def test_solve_two_blue_no_red():
    inst = Instance([], [(0, 0), (7, 2)], [])
    sol = solve(inst)
    assert sol.tree.edges == {(0, 1)} and sol.trace.swap_count == 0


@pytest.mark.parametrize("seed", range(20))
def test_solve_path_when_k_is_two(seed):
    inst = generate(1 + seed, 2, "uniform:5", 10**4, seed)
    sol = solve(inst, k=2)
    degrees = sol.tree.degrees()
    assert degrees[:inst.n_red] == [2] * inst.n_red
    assert sol.tree.leaves() == {inst.n_red, inst.n_red + 1}
    assert find_crossing(sol.tree, inst.points, inst.colors()) is None


@pytest.mark.parametrize("seed", range(20))
def test_solve_equality_degrees_exact(seed):
    inst = generate(2 + seed % 7, 3 + seed, "equality", 10**5, seed)
    sol = solve(inst)
    assert sol.tree.degrees()[:inst.n_red] == list(inst.budget)
    assert verify(inst, sol.tree).passed
