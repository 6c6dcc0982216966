"""q,t polynomials and gap-truncated series for paths and invariant subsets.

The polynomial c_{N,M}(q,t) sums q^area t^dinv over Dyck paths; the
series C_{N,M}(q,t) sums q^gap t^dinv over invariant subsets, which for
d > 1 is an infinite series computed exactly up to a gap cutoff.  Also
here: the torus-link homology series F_n(q,t), Poincare polynomials of
the compactified-Jacobian cell decompositions, and the Fuss-Catalan and
exponential-formula path counts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, gcd

from .equiv import build_graph, canonical_form
from .errors import FormulaMismatch, LimitExceeded
from .invset import InvariantSet, dinv_invset, gap, invset_from_path_coprime
from .lattice import (
    DEFAULT_ENUM_LIMIT,
    GridParams,
    area,
    enumerate_paths,
)
from .sweep import dinv_sweep


class QTPoly:
    """Sparse bivariate polynomial with integer coefficients, exponents >= 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for (q, t), c in dict(coeffs).items():
                if c:
                    if q < 0 or t < 0:
                        raise ValueError("exponents must be non-negative")
                    self.coeffs[(q, t)] = c

    @classmethod
    def monomial(cls, q: int, t: int, c: int = 1) -> QTPoly:
        return cls({(q, t): c})

    def add_term(self, q: int, t: int, c: int = 1) -> None:
        key = (q, t)
        new = self.coeffs.get(key, 0) + c
        if new:
            self.coeffs[key] = new
        else:
            self.coeffs.pop(key, None)

    def __eq__(self, other) -> bool:
        return isinstance(other, QTPoly) and self.coeffs == other.coeffs

    def __add__(self, other: QTPoly) -> QTPoly:
        out = QTPoly(self.coeffs)
        for (q, t), c in other.coeffs.items():
            out.add_term(q, t, c)
        return out

    def __sub__(self, other: QTPoly) -> QTPoly:
        out = QTPoly(self.coeffs)
        for (q, t), c in other.coeffs.items():
            out.add_term(q, t, -c)
        return out

    def __mul__(self, other: QTPoly) -> QTPoly:
        out = QTPoly()
        for (q1, t1), c1 in self.coeffs.items():
            for (q2, t2), c2 in other.coeffs.items():
                out.add_term(q1 + q2, t1 + t2, c1 * c2)
        return out

    def swapped(self) -> QTPoly:
        """q and t exchanged."""
        return QTPoly({(t, q): c for (q, t), c in self.coeffs.items()})

    def is_qt_symmetric(self) -> bool:
        return self == self.swapped()

    def truncate_q(self, cutoff: int) -> QTPoly:
        return QTPoly({(q, t): c for (q, t), c in self.coeffs.items()
                       if q <= cutoff})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        def mono(q, t, c):
            parts = [] if c == 1 and (q or t) else [str(c)]
            if q:
                parts.append("q" if q == 1 else f"q^{q}")
            if t:
                parts.append("t" if t == 1 else f"t^{t}")
            return "*".join(parts) or str(c)
        return " + ".join(
            mono(q, t, c) for (q, t), c in
            sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0][1])))

    def to_jsonable(self) -> list[dict]:
        return [{"q": q, "t": t, "c": c}
                for (q, t), c in sorted(self.coeffs.items())]


@dataclass(frozen=True)
class QTSeries:
    """A polynomial exact for all terms of q-degree <= q_cutoff.

    Enumeration by gap budget is complete per budget, and t-degrees are
    bounded by the sub-diagonal box count, so no t-truncation occurs.
    """

    poly: QTPoly
    q_cutoff: int

    def agrees_with(self, other: QTSeries) -> bool:
        cutoff = min(self.q_cutoff, other.q_cutoff)
        return self.poly.truncate_q(cutoff) == other.poly.truncate_q(cutoff)

    def to_jsonable(self) -> dict:
        return {"q_cutoff": self.q_cutoff, "terms": self.poly.to_jsonable()}


def qt_catalan(params: GridParams, limit: int = DEFAULT_ENUM_LIMIT) -> QTPoly:
    """Sum of q^area t^dinv over all Dyck paths of the rectangle."""
    out = QTPoly()
    for path in enumerate_paths(params, limit):
        out.add_term(area(params, path), dinv_sweep(params, path))
    return out


def enumerate_invsets_by_gap(params: GridParams, budget: int) -> list[InvariantSet]:
    """All 0-normalized invariant subsets with gap <= budget, each once.

    Enumerated through the residue decomposition: the component of class
    0 is a 0-normalized coprime subset, every other class contributes a
    0-normalized coprime subset plus a non-negative shift, and gap is
    the sum of shifts and component gaps.
    """
    if budget < 0:
        return []
    p = params
    coprime = GridParams(p.n, p.m, 1)
    base = [invset_from_path_coprime(path) for path in enumerate_paths(coprime)]
    base_gaps = [gap(s) for s in base]
    out = []

    def assemble(chosen) -> InvariantSet:
        gen = [None] * p.N
        for r, (part, shift) in enumerate(chosen):
            for g in part.gen:
                val = p.d * (g + shift) + r
                gen[val % p.N] = val
        return InvariantSet(p, tuple(gen))

    def rec(r, left, chosen):
        if r == p.d:
            out.append(assemble(chosen))
            return
        for part, g in zip(base, base_gaps):
            if g > left:
                continue
            shifts = (0,) if r == 0 else range(left - g + 1)
            for shift in shifts:
                rec(r + 1, left - g - shift, chosen + [(part, shift)])

    rec(0, budget, [])
    return out


def C_series(params: GridParams, q_cutoff: int) -> QTSeries:
    """Sum of q^gap t^dinv over invariant subsets, exact through q_cutoff."""
    poly = QTPoly()
    for delta in enumerate_invsets_by_gap(params, q_cutoff):
        poly.add_term(gap(delta), dinv_invset(delta))
    return QTSeries(poly, q_cutoff)


def _tuple_stat(a: tuple[int, ...]) -> int:
    """Number of pairs i < j with a_i = a_j or a_j = a_i + 1."""
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a))
               if a[i] == a[j] or a[j] == a[i] + 1)


def F_series(n: int, deg_cutoff: int, restricted: bool = False) -> QTSeries:
    """Torus-link homology series: sum of q^(sum a) t^d(a) over a in Z_{>=0}^n.

    The restricted variant fixes a_n = 0, which multiplies the full
    series by (1 - q).
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = QTPoly()
    free = n - 1 if restricted else n
    for head in itertools.product(range(deg_cutoff + 1), repeat=free):
        a = head + (0,) if restricted else head
        s = sum(a)
        if s <= deg_cutoff:
            poly.add_term(s, _tuple_stat(a))
    return QTSeries(poly, deg_cutoff)


def springer_poincare(n: int, m: int, limit: int = DEFAULT_ENUM_LIMIT) -> QTPoly:
    """Poincare polynomial of the invariant-subspace variety, in t.

    Computed both as sum of t^(2(delta - dinv)) and as sum of t^(2|D|)
    over coprime Dyck paths; the two must agree.
    """
    if gcd(n, m) != 1:
        raise ValueError("n and m must be coprime")
    params = GridParams(n, m, 1)
    if n + m > limit:
        raise LimitExceeded(f"n+m = {n + m} exceeds the limit {limit}")
    by_dinv = QTPoly()
    by_boxes = QTPoly()
    for path in enumerate_paths(params, limit):
        by_dinv.add_term(0, 2 * (params.delta - dinv_sweep(params, path)))
        by_boxes.add_term(0, 2 * path.box_count())
    if by_dinv != by_boxes:
        raise FormulaMismatch("the two Poincare formulas disagree")
    return by_dinv


def fuss_catalan(N: int, k: int) -> int:
    """((k+1)N)! / ((kN+1)! N!), the count of dominant k-Shi regions."""
    if N < 1 or k < 1:
        raise ValueError("N and k must be positive")
    return factorial((k + 1) * N) // (factorial(k * N + 1) * factorial(N))


def count_equivalence_classes(params: GridParams) -> int:
    """Number of distinct gluing digraphs over all invariant subsets.

    Enumerates by increasing gap budget until the set of canonical forms
    is unchanged for two consecutive increments.  Stabilization is
    guaranteed because minimal representatives have gap at most the
    sub-diagonal box count of the rectangle.
    """
    forms: set[bytes] = set()
    stable = 0
    budget = 0
    while stable < 2:
        new = {canonical_form(build_graph(s))
               for s in enumerate_invsets_by_gap(params, budget)}
        if new == forms:
            stable += 1
        else:
            forms = new
            stable = 0
        budget += 1
    return len(forms)
