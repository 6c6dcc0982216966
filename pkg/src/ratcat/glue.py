"""Gluing periodic paths into Dyck paths and taking them apart again.

Every coprime skeleton determines an (n, m)-periodic lattice path: the
path passes through a point (a, b) exactly when the box with that point
at its bottom-right corner has rank in the skeleton.  Gluing splices
length-(n+m) windows of such paths into a growing Dyck path, one level
of the gluing digraph at a time; removal of good intervals inverts the
construction and simultaneously colors the steps of the path by the
vertex that contributed them.

All paths here are carried as step strings plus an absolute anchor
point, with the coprime rank function providing point membership; a
path is always anchored so that its start sits at (m, 0), which makes
window step ranks agree with the digraph labels.  No floating point is
used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidGraph, NoIntersection, NotBalanced
from .equiv import LabeledDigraph
from .invset import invset_from_skeleton, map_D_coprime
from .lattice import DyckPath, GridParams


def coprime_rank(n: int, m: int, x: int, y: int) -> int:
    """Rank m*n - m - n - n*x - m*y of the box (x, y) for d = 1."""
    return m * n - m - n - n * x - m * y


@dataclass(frozen=True)
class PeriodicPath:
    """(n, m)-periodic boundary path of a possibly shifted invariant subset.

    skel holds the n+m step ranks of any fundamental window; a lattice
    point (a, b) lies on the path iff the rank of the box (a-1, b)
    belongs to skel, and the outgoing step at that point is vertical
    exactly when that rank is a generator of the underlying subset.
    """

    n: int
    m: int
    skel: frozenset[int]
    gens: tuple[int, ...]  # generator per class mod n of the underlying subset

    def contains_point(self, a: int, b: int) -> bool:
        return coprime_rank(self.n, self.m, a - 1, b) in self.skel

    def step_at(self, a: int, b: int) -> str:
        r = coprime_rank(self.n, self.m, a - 1, b)
        if r not in self.skel:
            raise NoIntersection(f"point ({a}, {b}) is not on the path")
        return "v" if self.gens[r % self.n] == r else "h"

    def walk(self, point: tuple[int, int], count: int) -> str:
        """The step string of the window starting at the given on-path point."""
        a, b = point
        steps = []
        for _ in range(count):
            s = self.step_at(a, b)
            steps.append(s)
            if s == "h":
                a -= 1
            else:
                b += 1
        return "".join(steps)


def periodic_from_skeleton(n: int, m: int, values) -> PeriodicPath:
    """Periodic path of the skeleton given by an iterable of n+m ranks."""
    delta = invset_from_skeleton(GridParams(n, m, 1), sorted(values))
    return PeriodicPath(n, m, frozenset(values), delta.gen)


def paths_intersect(p: PeriodicPath, q: PeriodicPath) -> bool:
    """Two periodic paths meet iff their skeletons share a value."""
    if (p.n, p.m) != (q.n, q.m):
        raise ValueError("paths must share the same slope")
    return bool(p.skel & q.skel)


@dataclass(frozen=True)
class AnchoredPath:
    """A step string pinned to the plane by its start point."""

    n: int
    m: int
    start: tuple[int, int]
    steps: str
    origins: tuple[int, ...] = ()

    def points(self) -> list[tuple[int, int]]:
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            if s == "h":
                x -= 1
            else:
                y += 1
            pts.append((x, y))
        return pts

    def point_box_ranks(self) -> list[int]:
        """Rank of the box below-left of every visited point."""
        return [coprime_rank(self.n, self.m, a - 1, b) for a, b in self.points()]

    def is_dyck(self) -> bool:
        """Weakly below the diagonal through its own start and end."""
        k, rem = divmod(len(self.steps), self.n + self.m)
        if rem or self.steps.count("v") != k * self.n:
            return False
        x0, y0 = self.start
        bound = self.n * x0 + self.m * y0
        return all(self.n * x + self.m * y <= bound for x, y in self.points())


def _anchored(path: DyckPath) -> AnchoredPath:
    """Anchor a Dyck path with its start at (m, 0).

    With this anchor the coprime box ranks along the path coincide with
    the rank labels of the N x M rectangle, so window skeletons read off
    an anchored path are directly comparable with digraph labels.
    """
    p = path.params
    return AnchoredPath(p.n, p.m, (p.m, 0), path.steps,
                        tuple(range(len(path.steps))))


def glue_once(dhat: AnchoredPath, periodic: PeriodicPath,
              tag: int = -1) -> AnchoredPath:
    """Splice one fundamental window of a periodic path into dhat.

    The window enters at the first point of dhat (in path order) lying
    on the periodic path; the remainder of dhat continues after the
    window, which amounts to translating it by (-m, n).
    """
    ranks = dhat.point_box_ranks()
    for z, r in enumerate(ranks):
        if r in periodic.skel:
            cut = z
            break
    else:
        raise NoIntersection("the periodic path misses the current path")
    point = dhat.points()[cut]
    window = periodic.walk(point, periodic.n + periodic.m)
    out = AnchoredPath(
        dhat.n, dhat.m, dhat.start,
        dhat.steps[:cut] + window + dhat.steps[cut:],
        dhat.origins[:cut] + (tag,) * len(window) + dhat.origins[cut:])
    assert out.is_dyck()
    return out


def _glue_all_anchored(graph: LabeledDigraph) -> AnchoredPath:
    n, m = graph.n, graph.m
    f = graph.levels()
    src_label = graph.labels[graph.source]
    src = periodic_from_skeleton(n, m, src_label)
    start = (m, 0)
    if not src.contains_point(*start):
        raise InvalidGraph("source label is not 0-normalized")
    cur = AnchoredPath(n, m, start, src.walk(start, n + m),
                       (graph.source,) * (n + m))
    for level in range(1, max(f, default=0) + 1):
        for v in range(graph.d):
            if f[v] == level:
                cur = glue_once(cur, periodic_from_skeleton(n, m, graph.labels[v]),
                                tag=v)
    return cur


def glue_all(graph: LabeledDigraph) -> DyckPath:
    """Assemble the Dyck path of a gluing digraph, one level at a time.

    Within a level the order of gluing does not matter; vertices are
    processed in index order.  The result is returned in the standard
    rectangle position, start at (M, 0).
    """
    cur = _glue_all_anchored(graph)
    return DyckPath(GridParams(graph.n, graph.m, graph.d), cur.steps)


def _balanced_positions(ap: AnchoredPath) -> list[int]:
    n, m = ap.n, ap.m
    k = len(ap.steps) // (n + m)
    vprefix = [0]
    for s in ap.steps:
        vprefix.append(vprefix[-1] + (s == "v"))
    return [r for r in range(0, (k - 1) * (n + m) + 1)
            if vprefix[r + n + m] - vprefix[r] == n]


def _good_positions(ap: AnchoredPath) -> list[int]:
    n, m = ap.n, ap.m
    ranks = ap.point_box_ranks()
    out = []
    for r in _balanced_positions(ap):
        window = set(ranks[r:r + n + m])
        if all(ranks[z] not in window for z in range(r)):
            out.append(r)
    return out


def good_intervals(path: DyckPath) -> list[int]:
    """Start positions of the good intervals of a Dyck path.

    An interval of n+m steps is balanced when n of them are vertical; it
    is good when additionally the periodic extension of the window stays
    clear of every point of the path strictly before the window's start.
    At least one good interval always exists, and the balanced interval
    closest to the start is always good.
    """
    return _good_positions(_anchored(path))


def window_skeleton(path: DyckPath, r: int) -> frozenset[int]:
    """Step ranks of the n+m steps starting at position r."""
    ap = _anchored(path)
    n, m = ap.n, ap.m
    return frozenset(ap.point_box_ranks()[r:r + n + m])


def remove_interval(path: DyckPath, r: int) -> DyckPath:
    """Remove a balanced interval, translating the tail by (m, -n)."""
    p = path.params
    n, m = p.n, p.m
    window = path.steps[r:r + n + m]
    if len(window) != n + m or window.count("v") != n:
        raise NotBalanced(f"steps [{r}, {r + n + m}) are not balanced")
    return DyckPath(GridParams(n, m, p.d - 1),
                    path.steps[:r] + path.steps[r + n + m:])


@dataclass(frozen=True)
class ColoredPath:
    """A Dyck path with steps colored by gluing vertex.

    Each color class has n vertical and m horizontal steps lying on one
    periodic path, with exactly one step per rank of its skeleton; after
    sliding the connected runs along that periodic path by multiples of
    (m, -n) they tile a fundamental window, and the window below its own
    diagonal is the (n, m)-Dyck path stored in components[color].
    """

    base: DyckPath
    colors: tuple[int, ...]
    components: tuple[DyckPath, ...]

    def to_jsonable(self) -> dict:
        return {"steps": self.base.steps,
                "colors": list(self.colors),
                "components": [{"color": i, "steps": c.steps}
                               for i, c in enumerate(self.components)]}


def unglue(path: DyckPath) -> tuple[LabeledDigraph, ColoredPath]:
    """Invert the gluing: recover the labeled digraph and the coloring.

    Good intervals of the current path correspond to the sinks of the
    remaining digraph; they are recorded and removed in rounds until a
    single (n, m)-window is left, which labels the source.  Edges join
    intersecting labels and point from later-removed to earlier-removed
    vertices; original step positions are tracked through the removals
    and become the coloring.
    """
    p = path.params
    n, m = p.n, p.m
    total = len(path.steps)
    if not total:
        raise ValueError("cannot unglue the empty path")
    cur = _anchored(path)
    orig = list(range(total))
    provisional = [None] * total
    batches: list[list[frozenset[int]]] = []
    while cur.steps:
        goods = _good_positions(cur)
        assert goods, "every nonempty path has a good interval"
        ranks = cur.point_box_ranks()
        batch = [frozenset(ranks[r:r + n + m]) for r in goods]
        batches.append(batch)
        b_idx = len(batches) - 1
        for pos in range(len(goods) - 1, -1, -1):
            r = goods[pos]
            for z in range(r, r + n + m):
                provisional[orig[z]] = (b_idx, pos)
            del orig[r:r + n + m]
            cur = AnchoredPath(n, m, cur.start,
                               cur.steps[:r] + cur.steps[r + n + m:])
    assert len(batches[-1]) == 1, "peeling must end at a single window"

    vertex_of = {}
    labels = []
    batch_of = []
    for b_idx in range(len(batches) - 1, -1, -1):
        for pos, skel in enumerate(batches[b_idx]):
            vertex_of[(b_idx, pos)] = len(labels)
            labels.append(tuple(sorted(skel)))
            batch_of.append(b_idx)
    d = len(labels)
    edges = set()
    for u in range(d):
        for v in range(d):
            if u != v and set(labels[u]) & set(labels[v]):
                assert batch_of[u] != batch_of[v], \
                    "good intervals of one round must be disjoint"
                if batch_of[u] > batch_of[v]:
                    edges.add((u, v))
    graph = LabeledDigraph(n, m, tuple(labels), frozenset(edges), source=0)

    colors = tuple(vertex_of[tag] for tag in provisional)
    coprime = GridParams(n, m, 1)
    step_ranks = _anchored(path).point_box_ranks()[:total]
    components = []
    for v in range(d):
        cls = [z for z, c in enumerate(colors) if c == v]
        assert sum(path.steps[z] == "v" for z in cls) == n and len(cls) == n + m
        assert tuple(sorted(step_ranks[z] for z in cls)) == labels[v], \
            "a color class must carry each skeleton rank exactly once"
        delta_v = invset_from_skeleton(coprime, labels[v])
        components.append(map_D_coprime(delta_v.shifted(-delta_v.min_element())))
    _check_run_translations(path, colors, n, m)
    return graph, ColoredPath(path, colors, tuple(components))


def _check_run_translations(path: DyckPath, colors, n: int, m: int) -> None:
    """Consecutive same-color steps reconnect after translating by k*(-m, n)."""
    pts = path.points()
    last_end: dict[int, tuple[int, int]] = {}
    for z, c in enumerate(colors):
        sx, sy = pts[z]
        if c in last_end:
            ex, ey = last_end[c]
            dx, dy = sx - ex, sy - ey
            assert dx * n + dy * m == 0 and dx <= 0 and (-dx) % m == 0, \
                "color runs must differ by multiples of (-m, n)"
        last_end[c] = pts[z + 1]


def map_D(graph: LabeledDigraph) -> DyckPath:
    """The bijection from gluing data to Dyck paths (glue_all)."""
    return glue_all(graph)


def map_D_inverse(path: DyckPath) -> LabeledDigraph:
    """The inverse bijection (first component of unglue)."""
    return unglue(path)[0]
