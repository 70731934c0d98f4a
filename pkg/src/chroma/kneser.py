"""Generalized Kneser graphs and their embedding into Cayley graphs on Z_p^n.

A vertex is an ordered m-tuple of pairwise disjoint k-subsets of {0..n-1}.
Two vertices are adjacent when one of two one-sided disjointness cascades
holds between the tuples.  m = 1 recovers the classical Kneser graph and is
admitted with a `classical` flag.

For p = m+1 the vertices embed into Z_p^n by writing part index i+1 on the
coordinates of the (i+1)-st part; edges then land inside a Hamming ball
around the all-ones vector, and a weight function on coordinates carves an
independent set out of the ambient Cayley graph.  All radius/threshold
comparisons are exact (integer against quadratic surd), never floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import config
from .cayley import Graph
from .exact import Surd, max_int_le
from .groups import ElementSet, GroupElement, GroupSpec, make_group
from .primes import is_prime

__all__ = [
    "KneserParams",
    "KneserVertex",
    "HammingBallSet",
    "IndependentSetResult",
    "count_vertices",
    "kneser_vertices",
    "kneser_adjacent",
    "build_graph",
    "chi_lower_bound",
    "embedding_k",
    "embed_vertex",
    "check_embedding_edge",
    "ones_weight",
    "hamming_ball",
    "independent_set",
    "classical_binary_independent_set",
]

_VERTEX_CAP = 200_000


@dataclass(frozen=True)
class KneserParams:
    """Parameters (n, k, m); feasibility requires n >= (m+1)k."""

    n: int
    k: int
    m: int

    def __post_init__(self):
        if self.k < 1 or self.m < 1:
            raise ValueError("k and m must be >= 1")
        if self.n < (self.m + 1) * self.k:
            raise ValueError(
                f"infeasible parameters: n={self.n} < (m+1)k={(self.m + 1) * self.k}"
            )

    @property
    def classical(self) -> bool:
        """m = 1: the classical Kneser graph (general definition expects m >= 2)."""
        return self.m == 1

    @property
    def p(self) -> int:
        return self.m + 1


@dataclass(frozen=True)
class KneserVertex:
    """Ordered tuple of pairwise disjoint k-subsets of the ground set."""

    parts: tuple[tuple[int, ...], ...]

    def masks(self) -> tuple[int, ...]:
        out = []
        for part in self.parts:
            m = 0
            for j in part:
                m |= 1 << j
            out.append(m)
        return tuple(out)

    def support(self) -> int:
        s = 0
        for m in self.masks():
            s |= m
        return s


def count_vertices(params: KneserParams) -> int:
    return math.prod(
        math.comb(params.n - i * params.k, params.k) for i in range(params.m)
    )


def kneser_vertices(params: KneserParams, cap: int = _VERTEX_CAP) -> list[KneserVertex]:
    """All vertices in lexicographic order of their part tuples."""
    total = count_vertices(params)
    if total > cap:
        raise ValueError(f"vertex count {total} exceeds cap {cap}")
    n, k, m = params.n, params.k, params.m
    ground = list(range(n))
    out: list[KneserVertex] = []

    def rec(depth: int, used: int, acc: list[tuple[int, ...]]):
        if depth == m:
            out.append(KneserVertex(tuple(acc)))
            return
        avail = [j for j in ground if not used >> j & 1]
        for comb in combinations(avail, k):
            mask = 0
            for j in comb:
                mask |= 1 << j
            acc.append(comb)
            rec(depth + 1, used | mask, acc)
            acc.pop()

    rec(0, 0, [])
    assert len(out) == total
    return out


def _cascade_masks(masks: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """(prefix unions, suffix unions) of a part-mask tuple."""
    m = len(masks)
    pref = [0] * m
    suf = [0] * m
    acc = 0
    for i in range(m):
        acc |= masks[i]
        pref[i] = acc
    acc = 0
    for i in range(m - 1, -1, -1):
        acc |= masks[i]
        suf[i] = acc
    return pref, suf


def _adjacent_masks(pref_a, suf_a, pref_b, suf_b) -> bool:
    m = len(pref_a)
    if all(pref_a[t] & suf_b[t] == 0 for t in range(m)):
        return True
    return all(pref_b[t] & suf_a[t] == 0 for t in range(m))


def kneser_adjacent(a: KneserVertex, b: KneserVertex) -> bool:
    """Adjacency: a one-sided disjointness cascade holds in either direction.

    Direction a->b requires (parts a_1..a_i) to avoid (parts b_i..b_m) for
    every cut position i; direction b->a is the mirror condition.
    """
    pa, sa = _cascade_masks(a.masks())
    pb, sb = _cascade_masks(b.masks())
    return _adjacent_masks(pa, sa, pb, sb)


def build_graph(params: KneserParams,
                cap: int = config.ADJACENCY_CAP) -> tuple[list[KneserVertex], Graph]:
    """Materialize the graph; vertices indexed in lexicographic order."""
    verts = kneser_vertices(params)
    n = len(verts)
    if n > cap:
        raise ValueError(f"vertex count {n} exceeds the adjacency cap {cap}")
    cascades = []
    for v in verts:
        pref, suf = _cascade_masks(v.masks())
        cascades.append((pref, suf))
    masks = [0] * n
    for i in range(n):
        pa, sa = cascades[i]
        for j in range(i + 1, n):
            pb, sb = cascades[j]
            if _adjacent_masks(pa, sa, pb, sb):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return verts, Graph(n, masks)


def chi_lower_bound(params: KneserParams) -> Fraction:
    """Exact rational lower bound (n/p - k) / (p(p-1)) with p = m+1 prime.

    May be <= 0 for small n; callers decide what to do with a nonpositive
    bound (it is returned raw, not clamped).
    """
    p = params.p
    if not is_prime(p):
        raise ValueError(f"m+1 = {p} must be prime for the spectral bound")
    return Fraction(params.n - p * params.k, p * p * (p - 1))


# ---------------------------------------------------------------------------
# Embedding into Z_p^n
# ---------------------------------------------------------------------------


def embedding_k(p: int, n: int) -> int:
    """Smallest integer k with k >= (n - sqrt(n))/p (exact comparison)."""
    if p < 2 or n < 1:
        raise ValueError("need p >= 2 and n >= 1")
    sqrt_n = Surd.sqrt(1, n)
    for k in range(1, n + 1):
        if sqrt_n >= n - p * k:     # sqrt(n) >= n - pk  <=>  k >= (n - sqrt(n))/p
            return k
    raise AssertionError("unreachable")


def embed_vertex(v: KneserVertex, p: int, n: int) -> GroupElement:
    """Write part index i on the coordinates of part i (1-based), 0 elsewhere."""
    if len(v.parts) != p - 1:
        raise ValueError(f"vertex has {len(v.parts)} parts; embedding needs p-1 = {p - 1}")
    coords = [0] * n
    for i, part in enumerate(v.parts, start=1):
        for j in part:
            if j >= n:
                raise ValueError("part element outside the ground set")
            coords[j] = i
    return GroupElement(tuple(coords))


@dataclass(frozen=True)
class EmbeddingEdgeCheck:
    direction: str                 # "forward", "reverse", or "both"
    distance: int                  # Hamming distance of the difference from all-ones
    distance_bound: int            # p*n - p^2*k
    within_bound: bool
    within_ball: bool              # distance <= p*sqrt(n)
    complement_overlap: int        # |A_0 and B_{p-1}|, expected == k
    complement_overlap_ok: bool
    min_part_overlap_ok: bool      # |A_i and B_{i-1}| >= (p+1)k - n for all i
    ok: bool


def _difference_distance_from_ones(xa: GroupElement, xb: GroupElement, p: int) -> int:
    return sum(1 for a, b in zip(xa.coords, xb.coords) if (a - b) % p != 1)


def _claim_checks(a: KneserVertex, b: KneserVertex, p: int, n: int, k: int):
    full = (1 << n) - 1
    amasks, bmasks = a.masks(), b.masks()
    a0 = full & ~a.support()
    b0 = full & ~b.support()
    comp_overlap = (a0 & bmasks[p - 2]).bit_count()
    lo = (p + 1) * k - n
    mins_ok = True
    for i in range(1, p):          # part A_i against B_{i-1}
        bi_prev = b0 if i == 1 else bmasks[i - 2]
        if (amasks[i - 1] & bi_prev).bit_count() < lo:
            mins_ok = False
    return comp_overlap, mins_ok


def check_embedding_edge(a: KneserVertex, b: KneserVertex, p: int, n: int,
                         k: int) -> EmbeddingEdgeCheck:
    """Verify that an edge's embedded difference sits near the all-ones vector.

    Orientation follows whichever adjacency cascade holds: for the forward
    cascade the difference x_a - x_b is examined, for the reverse x_b - x_a.
    Sub-checks: the complement of a meets the last part of b in exactly k
    coordinates, and consecutive parts overlap at least (p+1)k - n.
    """
    pa, sa = _cascade_masks(a.masks())
    pb, sb = _cascade_masks(b.masks())
    m = len(pa)
    fwd = all(pa[t] & sb[t] == 0 for t in range(m))
    rev = all(pb[t] & sa[t] == 0 for t in range(m))
    if not (fwd or rev):
        raise ValueError("vertices are not adjacent")

    oriented: list[tuple[str, KneserVertex, KneserVertex]] = []
    if fwd:
        oriented.append(("forward", a, b))
    if rev:
        oriented.append(("reverse", b, a))
    results = []
    for tag, va, vb in oriented:
        xa = embed_vertex(va, p, n)
        xb = embed_vertex(vb, p, n)
        dist = _difference_distance_from_ones(xa, xb, p)
        comp_overlap, mins_ok = _claim_checks(va, vb, p, n, k)
        results.append((tag, dist, comp_overlap, mins_ok))

    bound = p * n - p * p * k
    ball = Surd.sqrt(p, n)
    dist = max(r[1] for r in results)
    comp_ok = all(r[2] == k for r in results)
    mins_ok = all(r[3] for r in results)
    within_bound = all(r[1] <= bound for r in results)
    within_ball = all(ball >= r[1] for r in results)
    direction = "both" if len(results) == 2 else results[0][0]
    ok = within_bound and within_ball and comp_ok and mins_ok
    return EmbeddingEdgeCheck(
        direction=direction,
        distance=dist,
        distance_bound=bound,
        within_bound=within_bound,
        within_ball=within_ball,
        complement_overlap=results[0][2],
        complement_overlap_ok=comp_ok,
        min_part_overlap_ok=mins_ok,
        ok=ok,
    )


# ---------------------------------------------------------------------------
# Hamming ball connection set and the weight-function independent set
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HammingBallSet:
    """{x in Z_p^n : d(x, all-ones) <= radius}, radius typically p*sqrt(n)."""

    p: int
    n: int
    radius: Surd

    @property
    def group(self) -> GroupSpec:
        return make_group([self.p] * self.n)

    def distance_cutoff(self) -> int:
        """Largest integer distance inside the ball (exact)."""
        return max_int_le(self.radius, 0, self.n)

    def contains_coords(self, coords) -> bool:
        d = sum(1 for c in coords if c % self.p != 1)
        return d <= self.distance_cutoff()

    def contains(self, g: GroupElement) -> bool:
        return self.contains_coords(g.coords)

    def to_element_set(self, cap: int = config.MATERIALIZE_CAP) -> ElementSet:
        group = self.group
        if group.order > cap:
            raise ValueError(f"order {group.order} exceeds cap {cap}")
        idx = np.arange(group.order, dtype=np.int64)
        coords = group.indices_to_coords(idx)
        dist = (coords != 1).sum(axis=1)
        return ElementSet.from_mask(group, dist <= self.distance_cutoff())


def hamming_ball(p: int, n: int, radius: Surd | None = None) -> HammingBallSet:
    """Default radius p*sqrt(n)."""
    if radius is None:
        radius = Surd.sqrt(p, n)
    return HammingBallSet(p, n, radius)


def ones_weight(p: int, coords) -> Fraction:
    """Sum over nonzero coordinates of (p - x)/(p - 1); equals n at all-ones."""
    if p < 2:
        raise ValueError("p must be >= 2")
    num = sum(p - (c % p) for c in coords if c % p != 0)
    return Fraction(num, p - 1)


@dataclass(frozen=True)
class IndependentSetResult:
    """Members (exact mode) or a sampled density estimate of the weight set."""

    p: int
    n: int
    radius: Surd
    threshold: Surd               # n/2 - radius, the weight cutoff
    degenerate: bool              # threshold < 0, so the set is empty
    exact: bool
    count: int | None
    member_indices: np.ndarray | None
    density: float
    ci_low: float | None
    ci_high: float | None
    samples: int | None
    seed: int | None

    def members_coords(self) -> np.ndarray:
        if self.member_indices is None:
            raise ValueError("exact membership was not materialized")
        return make_group([self.p] * self.n).indices_to_coords(self.member_indices)


def _weight_numerators(coords: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Numerators (over p-1) of ones_weight(x) and ones_weight(-x)."""
    nz = coords != 0
    w_pos = ((p - coords) * nz).sum(axis=1)
    w_neg = coords.sum(axis=1)       # (p - ((p - c) % p)) = c on nonzero coords
    return w_pos, w_neg


def _wilson_interval(hits: int, total: int, z: float = 1.96) -> tuple[float, float]:
    if total == 0:
        return (0.0, 1.0)
    ph = hits / total
    denom = 1 + z * z / total
    center = (ph + z * z / (2 * total)) / denom
    half = z * math.sqrt(ph * (1 - ph) / total + z * z / (4 * total * total)) / denom
    return (max(0.0, center - half), min(1.0, center + half))


def independent_set(p: int, n: int, radius: Surd | None = None,
                    cap: int = 1 << 21, mc_samples: int = 200_000,
                    seed: int = 0) -> IndependentSetResult:
    """The two-sided weight set {x : w(x) <= n/2 - r and w(-x) <= n/2 - r}.

    Defaults to r = p*sqrt(n), which pairs with the Hamming ball of the same
    radius: the difference of two members always has weight below n - 2r while
    ball members weigh at least n - r, so the set is independent in
    Cay(Z_p^n, ball) for any positive radius.  At desk scale the default
    threshold n/2 - p*sqrt(n) is often negative — the set is then empty and
    flagged degenerate; pass a smaller exact radius (still paired with the
    same-radius ball) to get a nonempty set with the same independence
    guarantee.

    For p = 2 use classical_binary_independent_set, whose documented threshold
    is n/2 - sqrt(n).
    """
    if p < 3:
        raise ValueError("independent_set expects p >= 3; "
                         "for p = 2 use classical_binary_independent_set")
    if radius is None:
        radius = Surd.sqrt(p, n)
    threshold = Surd(Fraction(n, 2) - radius.a, -radius.b, radius.under)
    degenerate = threshold < 0
    order = p ** n
    # weight numerators are integers in [0, n*(p-1)]; cut at an exact integer
    cutoff = max_int_le(threshold.scaled(p - 1), -1, n * (p - 1))

    if order <= cap:
        group = make_group([p] * n)
        coords = group.indices_to_coords(np.arange(order, dtype=np.int64))
        w_pos, w_neg = _weight_numerators(coords, p)
        mask = (w_pos <= cutoff) & (w_neg <= cutoff)
        members = np.flatnonzero(mask).astype(np.int64)
        return IndependentSetResult(
            p=p, n=n, radius=radius, threshold=threshold, degenerate=degenerate,
            exact=True, count=int(members.size), member_indices=members,
            density=members.size / order, ci_low=None, ci_high=None,
            samples=None, seed=None,
        )

    rng = np.random.default_rng(seed)
    coords = rng.integers(0, p, size=(mc_samples, n), dtype=np.int64)
    w_pos, w_neg = _weight_numerators(coords, p)
    hits = int(((w_pos <= cutoff) & (w_neg <= cutoff)).sum())
    lo, hi = _wilson_interval(hits, mc_samples)
    return IndependentSetResult(
        p=p, n=n, radius=radius, threshold=threshold, degenerate=degenerate,
        exact=False, count=None, member_indices=None,
        density=hits / mc_samples, ci_low=lo, ci_high=hi,
        samples=mc_samples, seed=seed,
    )


def classical_binary_independent_set(n: int, radius: Surd | None = None,
                                     cap: int = 1 << 21) -> IndependentSetResult:
    """Binary variant: {x in Z_2^n : wt(x) <= n/2 - r}, default r = sqrt(n).

    In Z_2^n the coordinate weight degenerates to the Hamming weight and
    x = -x, so the two-sided condition collapses to a single cutoff.
    """
    p = 2
    if radius is None:
        radius = Surd.sqrt(1, n)
    threshold = Surd(Fraction(n, 2) - radius.a, -radius.b, radius.under)
    degenerate = threshold < 0
    order = p ** n
    if order > cap:
        raise ValueError(f"2^{n} exceeds cap {cap}")
    cutoff = max_int_le(threshold, -1, n)    # weights are plain integers here
    group = make_group([p] * n)
    coords = group.indices_to_coords(np.arange(order, dtype=np.int64))
    wt = coords.sum(axis=1)
    members = np.flatnonzero(wt <= cutoff).astype(np.int64)
    return IndependentSetResult(
        p=p, n=n, radius=radius, threshold=threshold, degenerate=degenerate,
        exact=True, count=int(members.size), member_indices=members,
        density=members.size / order, ci_low=None, ci_high=None,
        samples=None, seed=None,
    )
