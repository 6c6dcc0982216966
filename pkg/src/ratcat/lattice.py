"""Rational-slope Dyck paths in a dn x dm rectangle.

A path lives in the rectangle of height N = d*n and width M = d*m with
gcd(n, m) = 1, runs from the bottom-right corner (M, 0) to the top-left
corner (0, N), and stays weakly below the corner-to-corner diagonal.
Steps are written 'h' (one unit left) and 'v' (one unit up) and are read
from the bottom-right corner.  Boxes are addressed by their bottom-left
lattice point, so the box (x, y) occupies [x, x+1] x [y, y+1].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .errors import AboveDiagonal, LimitExceeded, MalformedPath

DEFAULT_ENUM_LIMIT = 24


@dataclass(frozen=True)
class GridParams:
    """Dimensions (n, m, d) of the N x M rectangle, N = d*n, M = d*m.

    n and m must be coprime; d = gcd(N, M) is the common multiplicity.
    d = 0 is allowed as a degenerate value encoding the empty rectangle
    (needed as the result of removing the last balanced interval from a
    path); every other operation expects d >= 1.
    """

    n: int
    m: int
    d: int = 1

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive")
        if gcd(self.n, self.m) != 1:
            raise ValueError(f"n={self.n} and m={self.m} must be coprime")
        if self.d < 0:
            raise ValueError("d must be non-negative")

    @property
    def N(self) -> int:
        return self.d * self.n

    @property
    def M(self) -> int:
        return self.d * self.m

    @property
    def delta(self) -> int:
        """Coprime genus (m-1)(n-1)/2, an integer since gcd(n, m) = 1."""
        return (self.m - 1) * (self.n - 1) // 2


def box_rank(params: GridParams, x: int, y: int) -> int:
    """Rank d*m*n - m - n - n*x - m*y of the box (x, y).

    Defined on all of Z^2; the boxes of non-negative rank are exactly
    those that fit under the diagonal of the rectangle.
    """
    return params.d * params.m * params.n - params.m - params.n - params.n * x - params.m * y


@dataclass(frozen=True)
class DyckPath:
    """A step sequence weakly below the diagonal, validated on construction."""

    params: GridParams
    steps: str

    def __post_init__(self):
        p = self.params
        if len(self.steps) != p.N + p.M:
            raise MalformedPath(
                f"expected {p.N + p.M} steps, got {len(self.steps)}")
        if self.steps.count("v") != p.N or self.steps.count("h") != p.M:
            raise MalformedPath(
                f"expected {p.N} 'v' and {p.M} 'h' steps in {self.steps!r}")
        x, y = p.M, 0
        bound = p.N * p.M
        for s in self.steps:
            if s == "h":
                x -= 1
            else:
                y += 1
            if p.N * x + p.M * y > bound:
                raise AboveDiagonal(f"{self.steps!r} crosses the diagonal")
        if self.steps:
            assert self.steps[-1] == "v"  # forced by the diagonal constraint

    def __str__(self) -> str:
        return self.steps

    def points(self) -> list[tuple[int, int]]:
        """All N+M+1 lattice points visited, from (M, 0) to (0, N)."""
        x, y = self.params.M, 0
        pts = [(x, y)]
        for s in self.steps:
            if s == "h":
                x -= 1
            else:
                y += 1
            pts.append((x, y))
        return pts

    def row_lengths(self) -> list[int]:
        """Row lengths of the Young diagram: x-position of the v step in each row."""
        rows = []
        x = self.params.M
        for s in self.steps:
            if s == "h":
                x -= 1
            else:
                rows.append(x)
        return rows

    def column_heights(self) -> list[int]:
        """Height of the unique horizontal step crossing each column."""
        cols = [0] * self.params.M
        x, y = self.params.M, 0
        for s in self.steps:
            if s == "h":
                x -= 1
                cols[x] = y
            else:
                y += 1
        return cols

    def box_count(self) -> int:
        """Number of boxes of the Young diagram enclosed by the path."""
        return sum(self.row_lengths())

    def to_jsonable(self) -> dict:
        p = self.params
        return {"n": p.n, "m": p.m, "d": p.d, "steps": self.steps}


def parse_path(text: str, params: GridParams) -> DyckPath:
    """Validate a step string over {'h','v'} and wrap it as a DyckPath."""
    if len(text) != params.N + params.M:
        raise MalformedPath(
            f"expected {params.N + params.M} characters, got {len(text)}")
    if set(text) - {"h", "v"}:
        raise MalformedPath(f"illegal characters in {text!r}")
    return DyckPath(params, text)


def step_ranks(params: GridParams, path: DyckPath) -> list[int]:
    """Rank of each step, in path order.

    The first step is ranked -m; after a horizontal step the rank grows
    by n, after a vertical step it drops by m.  Equivalently a vertical
    step inherits the rank of the box to its left, a horizontal step the
    rank of the box above it.  The final (vertical) step has rank 0.
    """
    ranks = [-params.m]
    for s in path.steps[:-1]:
        ranks.append(ranks[-1] + (params.n if s == "h" else -params.m))
    return ranks


def step_ranks_from_boxes(params: GridParams, path: DyckPath) -> list[int]:
    """Step ranks computed from adjacent boxes; must agree with step_ranks."""
    ranks = []
    x, y = params.M, 0
    for s in path.steps:
        ranks.append(box_rank(params, x - 1, y))
        if s == "h":
            x -= 1
        else:
            y += 1
    return ranks


@lru_cache(maxsize=None)
def subdiagonal_box_count(params: GridParams) -> int:
    """Number of boxes of the rectangle lying weakly under the diagonal."""
    total = 0
    for y in range(params.N):
        # rank(x, y) >= 0  <=>  n*x <= d*m*n - m - n - m*y
        hi = params.d * params.m * params.n - params.m - params.n - params.m * y
        if hi >= 0:
            total += min(hi // params.n, params.M - 1) + 1
    return total


def area(params: GridParams, path: DyckPath) -> int:
    """Number of whole boxes between the diagonal and the path.

    Counts boxes of non-negative rank that are not part of the Young
    diagram of the path; ranges from 0 for the full diagram up to the
    total sub-diagonal box count (delta when d = 1) for the empty one.
    """
    total = 0
    for y, row in enumerate(path.row_lengths()):
        hi = params.d * params.m * params.n - params.m - params.n - params.m * y
        if hi >= 0:
            upper = min(hi // params.n, params.M - 1)
            if upper >= row:
                total += upper - row + 1
    return total


def enumerate_paths(params: GridParams, limit: int = DEFAULT_ENUM_LIMIT) -> tuple[DyckPath, ...]:
    """All Dyck paths of the rectangle in lexicographic order ('h' < 'v').

    The result is cached per parameter set; treat it as immutable.
    """
    if params.N + params.M > limit:
        raise LimitExceeded(
            f"N+M = {params.N + params.M} exceeds the limit {limit}")
    return _enumerate_cached(params)


@lru_cache(maxsize=None)
def _enumerate_cached(params: GridParams) -> tuple[DyckPath, ...]:
    N, M = params.N, params.M
    bound = N * M
    out = []
    steps = []

    def rec(x, y, h_left, v_left):
        if not h_left and not v_left:
            out.append(DyckPath(params, "".join(steps)))
            return
        if h_left:
            steps.append("h")
            rec(x - 1, y, h_left - 1, v_left)
            steps.pop()
        if v_left and N * x + M * (y + 1) <= bound:
            steps.append("v")
            rec(x, y + 1, h_left, v_left - 1)
            steps.pop()

    rec(M, 0, M, N)
    return tuple(out)


def bizley_count(n: int, m: int, d: int) -> int:
    """|Y_{dn,dm}|: the coefficient of x^d in exp(sum_j C(j(m+n), jm)/(j(m+n)) x^j).

    Computed in exact rational arithmetic; the result is asserted to be
    an integer.
    """
    if gcd(n, m) != 1:
        raise ValueError("n and m must be coprime")
    if d < 1:
        raise ValueError("d must be positive")
    c = [Fraction(0)] * (d + 1)
    for j in range(1, d + 1):
        c[j] = Fraction(comb(j * (m + n), j * m), j * (m + n))
    e = [Fraction(0)] * (d + 1)
    e[0] = Fraction(1)
    for r in range(1, d + 1):
        e[r] = sum(j * c[j] * e[r - j] for j in range(1, r + 1)) / r
    assert e[d].denominator == 1, "exponential-formula coefficient must be integral"
    return int(e[d])


def staircase_path(params: GridParams) -> DyckPath:
    """The full-diagram path hugging the diagonal (area 0)."""
    N, M, bound = params.N, params.M, params.N * params.M
    x, y = M, 0
    steps = []
    while len(steps) < N + M:
        if y < N and params.N * x + params.M * (y + 1) <= bound:
            steps.append("v")
            y += 1
        else:
            steps.append("h")
            x -= 1
    return DyckPath(params, "".join(steps))
