import itertools

import pytest

from ratcat import (
    GridParams,
    InvalidSkeleton,
    LabeledDigraph,
    NoIntersection,
    NotBalanced,
    area,
    canonical_form,
    enumerate_paths,
    gap,
    glue_all,
    good_intervals,
    map_D,
    map_D_inverse,
    map_D_coprime,
    minimal_representative,
    paths_intersect,
    periodic_from_skeleton,
    remove_interval,
    semigroup,
    unglue,
    window_skeleton,
)
from ratcat.glue import AnchoredPath, glue_once
from ratcat.invset import invset_from_skeleton
from ratcat.verify import all_grid_params

BLUE = (-2, 0, 1, 2, 4)
GREEN = (-2, -1, 0, 1, 2)
RED = (4, 5, 6, 7, 8)
ORANGE = (4, 6, 7, 8, 10)


def example_graph():
    return LabeledDigraph(3, 2, labels=(BLUE, ORANGE, GREEN, RED),
                          edges={(0, 1), (0, 2), (0, 3), (1, 3)}, source=0)


def test_periodic_from_skeleton_golden():
    blue = periodic_from_skeleton(3, 2, BLUE)
    window = blue.walk((2, 0), 5)
    assert window == "hhvvv"
    # step ranks of any fundamental window reproduce the skeleton
    ap = AnchoredPath(3, 2, (2, 0), window)
    assert set(ap.point_box_ranks()[:5]) == set(BLUE)
    stair = periodic_from_skeleton(1, 1, (-1, 0))
    assert stair.walk((1, 0), 4) == "hvhv"
    with pytest.raises(InvalidSkeleton):
        periodic_from_skeleton(3, 2, (0, 2, 4, 6, 8))


def test_paths_intersect_golden():
    p_blue = periodic_from_skeleton(3, 2, BLUE)
    p_green = periodic_from_skeleton(3, 2, GREEN)
    p_red = periodic_from_skeleton(3, 2, RED)
    assert paths_intersect(p_blue, p_green)
    assert not paths_intersect(p_green, p_red)
    assert paths_intersect(p_blue, p_blue)


def test_paths_intersect_matches_geometry():
    # compare against a point scan over three periods
    import random
    rng = random.Random(7)
    skels = [BLUE, GREEN, RED, ORANGE]
    deltas = [invset_from_skeleton(GridParams(3, 2, 1), s) for s in skels]
    for _ in range(20):
        s1, s2 = rng.choice(skels), rng.choice(skels)
        p1 = periodic_from_skeleton(3, 2, s1)
        p2 = periodic_from_skeleton(3, 2, s2)
        pts1 = _point_set(p1)
        pts2 = _point_set(p2)
        assert bool(pts1 & pts2) == paths_intersect(p1, p2)


def _point_set(p):
    pts = set()
    for a in range(-10, 11):
        for b in range(-10, 11):
            if p.contains_point(a, b):
                pts.add((a, b))
    return pts


def test_glue_once_figure_steps():
    blue = periodic_from_skeleton(3, 2, BLUE)
    d0 = AnchoredPath(3, 2, (2, 0), blue.walk((2, 0), 5),
                      (0,) * 5)
    d1 = glue_once(d0, periodic_from_skeleton(3, 2, ORANGE), tag=1)
    assert d1.steps == "hhhhvvvvvv"
    d2 = glue_once(d1, periodic_from_skeleton(3, 2, GREEN), tag=2)
    assert d2.steps == "hvhvvhhhhvvvvvv"
    d3 = glue_once(d2, periodic_from_skeleton(3, 2, RED), tag=3)
    assert d3.steps == "hvhvvhhhvhvvhhvvvvvv"
    green0 = AnchoredPath(3, 2, (2, 0),
                          periodic_from_skeleton(3, 2, GREEN).walk((2, 0), 5))
    with pytest.raises(NoIntersection):
        glue_once(green0, periodic_from_skeleton(3, 2, RED))


def test_self_gluing_extends_window():
    blue = periodic_from_skeleton(3, 2, BLUE)
    d0 = AnchoredPath(3, 2, (2, 0), blue.walk((2, 0), 5), (0,) * 5)
    doubled = glue_once(d0, blue)
    assert doubled.steps == blue.walk((2, 0), 10)


def test_glue_all_golden():
    D = glue_all(example_graph())
    assert D.steps == "hvhvvhhhvhvvhhvvvvvv"
    assert area(D.params, D) == 14
    gamma = semigroup(GridParams(5, 3, 1))
    from ratcat import build_graph
    assert glue_all(build_graph(gamma)).steps == map_D_coprime(gamma).steps


def test_glue_order_within_level_is_irrelevant():
    from ratcat import build_graph, enumerate_invsets_by_gap
    from ratcat.glue import _glue_all_anchored
    for params in [GridParams(2, 1, 3), GridParams(3, 2, 2), GridParams(2, 1, 4)]:
        for delta in enumerate_invsets_by_gap(params, params.N + params.M):
            graph = build_graph(delta)
            f = graph.levels()
            reference = glue_all(graph).steps
            # exhaust all orders per level
            by_level = {}
            for v in range(graph.d):
                by_level.setdefault(f[v], []).append(v)
            orders = itertools.product(
                *[itertools.permutations(by_level[lev])
                  for lev in sorted(by_level) if lev > 0])
            from ratcat.glue import periodic_from_skeleton as pfs, glue_once
            for order in orders:
                cur = _glue_all_anchored(_single_vertex(graph))
                for level_group in order:
                    for v in level_group:
                        cur = glue_once(
                            cur, pfs(graph.n, graph.m, graph.labels[v]), tag=v)
                assert cur.steps == reference


def _single_vertex(graph):
    return LabeledDigraph(graph.n, graph.m,
                          (graph.labels[graph.source],), frozenset(), source=0)


def test_good_intervals_golden():
    D = glue_all(example_graph())
    goods = good_intervals(D)
    skels = [tuple(sorted(window_skeleton(D, r))) for r in goods]
    assert sorted(skels) == [GREEN, RED]
    # an (n,m)-path is its own unique good interval
    gamma_path = map_D_coprime(semigroup(GridParams(3, 2, 1)))
    assert good_intervals(gamma_path) == [0]
    # periodic extensions of good intervals are pairwise disjoint
    assert not (window_skeleton(D, goods[0]) & window_skeleton(D, goods[1]))


def test_first_balanced_interval_is_good():
    for params in all_grid_params(12):
        n, m = params.n, params.m
        for D in enumerate_paths(params):
            goods = good_intervals(D)
            assert goods, D.steps
            vcount = [0]
            for s in D.steps:
                vcount.append(vcount[-1] + (s == "v"))
            balanced = [r for r in range((params.d - 1) * (n + m) + 1)
                        if vcount[r + n + m] - vcount[r] == n]
            assert balanced[0] == goods[0]


def test_remove_interval():
    D = glue_all(example_graph())
    goods = good_intervals(D)
    cur = D
    for r in sorted(goods, reverse=True):
        cur = remove_interval(cur, r)
    assert cur.steps == "hhhhvvvvvv"
    nxt = good_intervals(cur)
    assert [tuple(sorted(window_skeleton(cur, r))) for r in nxt] == [ORANGE]
    with pytest.raises(NotBalanced):
        remove_interval(D, 5)  # window "hhhvh" has one vertical step
    # removing the unique good interval of a coprime path leaves nothing
    gamma_path = map_D_coprime(semigroup(GridParams(3, 2, 1)))
    assert remove_interval(gamma_path, 0).steps == ""


def test_remove_then_glue_back_roundtrip():
    for params in all_grid_params(12):
        if params.d == 1:
            continue
        n, m = params.n, params.m
        for D in enumerate_paths(params):
            for r in good_intervals(D):
                skel = window_skeleton(D, r)
                smaller = remove_interval(D, r)
                from ratcat.glue import _anchored
                back = glue_once(_anchored(smaller),
                                 periodic_from_skeleton(n, m, skel))
                assert back.steps == D.steps


def test_unglue_golden():
    D = glue_all(example_graph())
    graph, colored = unglue(D)
    assert canonical_form(graph) == canonical_form(example_graph())
    assert graph.labels == (BLUE, ORANGE, GREEN, RED)
    assert sorted(graph.edges) == [(0, 1), (0, 2), (0, 3), (1, 3)]
    assert colored.colors == (2, 2, 2, 2, 2, 0, 0, 3, 3, 3, 3, 3,
                              1, 1, 1, 1, 1, 0, 0, 0)
    assert [c.steps for c in colored.components] == \
        ["hhvvv", "hhvvv", "hvhvv", "hvhvv"]
    # d = 1: single vertex labeled by the path's skeleton
    gamma_path = map_D_coprime(semigroup(GridParams(3, 2, 1)))
    graph1, colored1 = unglue(gamma_path)
    assert graph1.d == 1 and set(colored1.colors) == {0}


def test_map_D_round_trips():
    for params in all_grid_params(12):
        for D in enumerate_paths(params):
            graph = map_D_inverse(D)
            assert map_D(graph).steps == D.steps
            assert canonical_form(map_D_inverse(map_D(graph))) == \
                canonical_form(graph)


def test_area_equals_min_gap_of_class():
    from ratcat import build_graph, enumerate_invsets_by_gap
    for params in [GridParams(1, 1, 2), GridParams(3, 2, 2)]:
        for delta in enumerate_invsets_by_gap(params, params.N + params.M):
            graph = build_graph(delta)
            assert area(params, glue_all(graph)) == \
                gap(minimal_representative(graph))


def test_good_intervals_are_the_sinks():
    # periodic extensions of good intervals = periodic paths of the sinks
    from ratcat import build_graph, enumerate_invsets_by_gap
    for params in [GridParams(3, 2, 2), GridParams(2, 1, 3), GridParams(1, 1, 3)]:
        for delta in enumerate_invsets_by_gap(params, params.N + params.M):
            graph = build_graph(delta)
            sinks = {graph.labels[v] for v in range(graph.d)
                     if not any(e[0] == v for e in graph.edges)}
            D = glue_all(graph)
            found = {tuple(sorted(window_skeleton(D, r)))
                     for r in good_intervals(D)}
            assert found == sinks


def test_step_rank_skeleton_correspondence():
    # multiset of step ranks of the glued path = floor(skeleton/d)
    from ratcat import build_graph, enumerate_invsets_by_gap, skeleton, step_ranks
    for params in [GridParams(3, 2, 2), GridParams(1, 1, 3), GridParams(2, 1, 3)]:
        for delta in enumerate_invsets_by_gap(params, params.N + params.M):
            graph = build_graph(delta)
            rep = minimal_representative(graph)
            D = glue_all(graph)
            expected = sorted(x // params.d for x in skeleton(rep).values())
            assert sorted(step_ranks(params, D)) == expected
