"""(N, M)-invariant subsets of the integers and their skeletons.

An invariant subset Delta is closed under adding N and M.  It is encoded
by its vector of N-generators: gen[c] is the least element of Delta
congruent to c mod N, so membership is x in Delta iff x >= gen[x mod N],
and the infinite set is never materialized.  The skeleton of Delta is
the set of its N-generators together with its M-cogenerators; within
each class mod N the largest skeleton value is the generator, which is
what makes a subset reconstructible from its skeleton.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptyInput,
    InvalidCore,
    InvalidSkeleton,
    NotCoprimeCase,
    NotNormalized,
)
from .lattice import DyckPath, GridParams, box_rank

KIND_GENERATOR = "generator"
KIND_COGENERATOR = "cogenerator"


@dataclass(frozen=True)
class InvariantSet:
    """Finite encoding of an (N, M)-invariant subset by its generator vector."""

    params: GridParams
    gen: tuple[int, ...]

    def __post_init__(self):
        p = self.params
        object.__setattr__(self, "gen", tuple(self.gen))
        if len(self.gen) != p.N:
            raise ValueError(f"need {p.N} generators, got {len(self.gen)}")
        for c, g in enumerate(self.gen):
            if g % p.N != c:
                raise ValueError(f"generator {g} not congruent to {c} mod {p.N}")
        for c, g in enumerate(self.gen):
            if self.gen[(c + p.M) % p.N] > g + p.M:
                raise ValueError("generator vector is not M-invariant")

    @property
    def normalized(self) -> bool:
        return min(self.gen) == 0

    def min_element(self) -> int:
        return min(self.gen)

    def contains(self, x: int) -> bool:
        return x >= self.gen[x % self.params.N]

    def shifted(self, c: int) -> InvariantSet:
        """The translate Delta + c."""
        N = self.params.N
        gen = [0] * N
        for g in self.gen:
            gen[(g + c) % N] = g + c
        return InvariantSet(self.params, tuple(gen))

    def elements(self, lo: int, hi: int) -> list[int]:
        """Members of Delta in the window [lo, hi)."""
        return [x for x in range(lo, hi) if self.contains(x)]

    def to_jsonable(self) -> dict:
        p = self.params
        return {"n": p.n, "m": p.m, "d": p.d, "generators": sorted(self.gen)}


@dataclass(frozen=True)
class SkeletonEntry:
    value: int
    kind: str
    residue: int


@dataclass(frozen=True)
class Skeleton:
    """The N-generators and M-cogenerators of an invariant subset, sorted by value."""

    params: GridParams
    entries: tuple[SkeletonEntry, ...]

    def values(self) -> tuple[int, ...]:
        return tuple(e.value for e in self.entries)

    def step_pattern(self) -> str:
        """'v' per generator, 'h' per cogenerator, in increasing value order."""
        return "".join("v" if e.kind == KIND_GENERATOR else "h" for e in self.entries)

    def parts_mod_d(self) -> list[list[int]]:
        """Skeleton values split by residue mod d, each part sorted."""
        parts = [[] for _ in range(self.params.d)]
        for e in self.entries:
            parts[e.residue].append(e.value)
        return parts

    def to_jsonable(self) -> list[dict]:
        return [{"value": e.value, "kind": e.kind, "residue": e.residue}
                for e in self.entries]


def invset_from_generators(params: GridParams, gens) -> InvariantSet:
    """Smallest (N, M)-invariant set containing the given integers.

    Every residue class mod d must be reachable, otherwise some class
    mod N would stay empty and the finite encoding breaks down.
    """
    gens = list(gens)
    if not gens:
        raise EmptyInput("need at least one generator")
    N, M, n, m, d = params.N, params.M, params.n, params.m, params.d
    minv = pow(m, -1, n) if n > 1 else 0
    gen = [None] * N
    for c in range(N):
        best = None
        for g in gens:
            if (c - g) % d != 0:
                continue
            b = ((c - g) // d * minv) % n if n > 1 else 0
            val = g + b * M
            if best is None or val < best:
                best = val
        if best is None:
            raise EmptyInput(f"no generator hits residue class {c % d} mod {d}")
        gen[c] = best
    return InvariantSet(params, tuple(gen))


def natural_numbers(params: GridParams) -> InvariantSet:
    """Z_{>=0} as an invariant subset."""
    return InvariantSet(params, tuple(range(params.N)))


def semigroup(params: GridParams) -> InvariantSet:
    """The numerical semigroup generated by N and M."""
    return invset_from_generators(params, [0])


def generators_n(delta: InvariantSet) -> list[int]:
    """The N-generators Delta \\ (Delta + N), sorted."""
    return sorted(delta.gen)


def cogenerators_m(delta: InvariantSet) -> list[int]:
    """The M-cogenerators (Delta - M) \\ Delta, sorted.

    y is an M-cogenerator iff y is not in Delta but y + M is; these are
    enumerated from the generator vector in closed form.
    """
    p = delta.params
    out = []
    for b in range(p.N):
        lo = delta.gen[(b + p.M) % p.N] - p.M
        count = (delta.gen[b] - lo) // p.N
        out.extend(lo + k * p.N for k in range(count))
    return sorted(out)


def skeleton(delta: InvariantSet) -> Skeleton:
    """Merged, sorted generators and cogenerators with kind and residue tags."""
    d = delta.params.d
    entries = [SkeletonEntry(v, KIND_GENERATOR, v % d) for v in delta.gen]
    entries += [SkeletonEntry(v, KIND_COGENERATOR, v % d)
                for v in cogenerators_m(delta)]
    entries.sort(key=lambda e: e.value)
    return Skeleton(delta.params, tuple(entries))


def invset_from_skeleton(params: GridParams, values) -> InvariantSet:
    """Reconstruct the invariant subset whose skeleton has the given values.

    The largest value in each class mod N is the generator of that
    class; the reconstruction must reproduce the input value set.
    """
    values = sorted(values)
    if len(values) != params.N + params.M:
        raise InvalidSkeleton(
            f"need {params.N + params.M} values, got {len(values)}")
    if len(set(values)) != len(values):
        raise InvalidSkeleton("skeleton values must be distinct")
    gen = [None] * params.N
    for v in values:
        c = v % params.N
        if gen[c] is None or v > gen[c]:
            gen[c] = v
    if any(g is None for g in gen):
        raise InvalidSkeleton("some class mod N has no skeleton value")
    try:
        delta = InvariantSet(params, tuple(gen))
    except ValueError as exc:
        raise InvalidSkeleton(str(exc)) from exc
    if list(skeleton(delta).values()) != values:
        raise InvalidSkeleton(f"{values} is not a skeleton")
    return delta


def map_D_coprime(delta: InvariantSet) -> DyckPath:
    """Boundary path of the diagram of boxes whose rank lies in Delta (d = 1)."""
    p = delta.params
    if p.d != 1:
        raise NotCoprimeCase("the diagram map requires d = 1")
    if not delta.normalized:
        raise NotNormalized("the diagram map requires min(Delta) = 0")
    steps = []
    x = p.M
    for y in range(p.N):
        row = sum(1 for b in range(p.m) if delta.contains(box_rank(p, b, y)))
        steps.append("h" * (x - row))
        x = row
        steps.append("v")
    assert x == 0
    return DyckPath(p, "".join(steps))


def invset_from_path_coprime(path: DyckPath) -> InvariantSet:
    """Inverse of map_D_coprime: the ranks of sub-diagonal boxes outside the
    diagram are exactly the non-negative integers missing from Delta."""
    p = path.params
    if p.d != 1:
        raise NotCoprimeCase("the diagram map requires d = 1")
    rows = path.row_lengths()
    missing = set()
    for y in range(p.N):
        for x in range(rows[y], p.M):
            r = box_rank(p, x, y)
            if r >= 0:
                missing.add(r)
    gen = []
    for c in range(p.N):
        x = c
        while x in missing:
            x += p.N
        gen.append(x)
    return InvariantSet(p, tuple(gen))


def map_G(delta: InvariantSet) -> DyckPath:
    """Path read off the sorted skeleton: generators become vertical steps,
    cogenerators horizontal ones; validity is asserted on construction."""
    return DyckPath(delta.params, skeleton(delta).step_pattern())


def dinv_invset(delta: InvariantSet) -> int:
    """dinv of an invariant subset: the area of its G-image."""
    from .lattice import area
    return area(delta.params, map_G(delta))


def gap(delta: InvariantSet) -> int:
    """|Z_{>=0} \\ Delta|, computed in closed form from the generators."""
    N = delta.params.N
    return sum(max(0, (g - c) // N) for c, g in enumerate(delta.gen))


def gaps(delta: InvariantSet) -> list[int]:
    """The non-negative integers missing from Delta, sorted."""
    N = delta.params.N
    out = []
    for c, g in enumerate(delta.gen):
        out.extend(range(c, g, N))
    return sorted(out)


@dataclass(frozen=True)
class ResidueComponent:
    """One congruence class of a decomposition: Delta_r = shift + part."""

    residue: int
    shift: int
    part: InvariantSet


def decompose(delta: InvariantSet) -> list[ResidueComponent]:
    """Split Delta into d coprime components, one per residue class mod d.

    Delta_r = [(Delta intersect (dZ + r)) - r] / d; the component is
    returned 0-normalized together with its shift m_r = min(Delta_r), so
    that Delta is recovered exactly as the union of d*(m_r + part_r) + r.
    """
    p = delta.params
    coprime = GridParams(p.n, p.m, 1)
    out = []
    for r in range(p.d):
        vals = [(delta.gen[c] - r) // p.d
                for c in range(p.N) if c % p.d == r % p.d]
        shift = min(vals)
        gen = [None] * p.n
        for v in vals:
            gen[(v - shift) % p.n] = v - shift
        out.append(ResidueComponent(r, shift, InvariantSet(coprime, tuple(gen))))
    return out


@dataclass(frozen=True)
class CorePartition:
    """A partition with weakly decreasing positive parts (possibly empty)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(x < 1 for x in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    def size(self) -> int:
        return sum(self.parts)

    def first_column_hooks(self) -> list[int]:
        r = len(self.parts)
        return [self.parts[i] + (r - 1 - i) for i in range(r)]

    def hook_lengths(self) -> list[int]:
        """All hook lengths of the diagram (for core-property checks)."""
        conj = conjugate(self.parts)
        out = []
        for i, row in enumerate(self.parts):
            for j in range(row):
                out.append(row - j + conj[j] - i - 1)
        return out

    def to_jsonable(self) -> list[int]:
        return list(self.parts)


def conjugate(parts) -> list[int]:
    parts = list(parts)
    if not parts:
        return []
    return [sum(1 for p in parts if p > j) for j in range(parts[0])]


def partition_from_beta(values) -> CorePartition:
    """Partition determined by a finite beta-set: lambda_i = b_i - (s - i)."""
    vals = sorted(values, reverse=True)
    s = len(vals)
    parts = [v - (s - 1 - i) for i, v in enumerate(vals)]
    return CorePartition(tuple(p for p in parts if p > 0))


def core_partition(delta: InvariantSet) -> CorePartition:
    """The (N, M)-core whose first-column hook lengths are the gaps of Delta.

    This is the beta-set correspondence with the gap set itself as the
    beta-numbers (the window complement of Delta below any cutoff past
    max(gen), here max(gen) rounded up to a multiple of N).  It sends
    Z_{>=0} to the empty partition and the semigroup of N and M to the
    largest (N, M)-core.
    """
    if not delta.normalized:
        raise NotNormalized("core correspondence requires min(Delta) = 0")
    return partition_from_beta(gaps(delta))


def invset_from_core(params: GridParams, lam: CorePartition) -> InvariantSet:
    """Inverse of core_partition; rejects partitions with an N- or M-hook."""
    hooks = set(lam.first_column_hooks())
    for h in hooks:
        for step in (params.N, params.M):
            if h - step >= 0 and h - step not in hooks:
                raise InvalidCore(
                    f"first-column hooks not closed under -{step}")
    gen = []
    for c in range(params.N):
        x = c
        while x in hooks:
            x += params.N
        gen.append(x)
    try:
        return InvariantSet(params, tuple(gen))
    except ValueError as exc:
        raise InvalidCore(str(exc)) from exc


def d_quotient(lam: CorePartition, d: int) -> list[CorePartition]:
    """The d-quotient, with the first-column hook set as the beta window.

    Quotient r collects the hooks congruent to r mod d; with this window
    convention the quotients of the core of Delta are, index by index,
    the cores of the components of decompose(Delta).
    """
    hooks = lam.first_column_hooks()
    out = []
    for r in range(d):
        out.append(partition_from_beta(
            [(h - r) // d for h in hooks if h % d == r]))
    return out
