"""Cayley graphs on finite abelian groups, with exact chromatic/independence solvers.

Cay(G, A) has the group elements as vertices and an edge {u, v} whenever
v - u lies in the symmetrized connection set A u (-A) minus the identity.
Graphs up to the adjacency cap are materialized as bitset rows (Python ints),
which is what the branch-and-bound solvers operate on; larger groups stay
behind the difference oracle.
"""

from __future__ import annotations

import contextlib
import sys
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

import numpy as np

from . import config
from .groups import ElementSet, GroupSpec

__all__ = [
    "Graph",
    "CayleyView",
    "ImplicitCayleyView",
    "Coloring",
    "VertexSet",
    "GreedyBounds",
    "ChromaticResult",
    "IndependenceResult",
    "build_cayley",
    "greedy_clique",
    "dsatur_coloring",
    "greedy_bounds",
    "chromatic_number_exact",
    "independence_number_exact",
]


class Graph:
    """Undirected graph on vertices 0..n-1 with bitset adjacency rows."""

    def __init__(self, n: int, masks: list[int]):
        if len(masks) != n:
            raise ValueError("adjacency row count does not match vertex count")
        self.n = n
        self.masks = masks

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, masks)

    def is_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self.masks[u] >> (u + 1) << (u + 1)
            while m:
                v = (m & -m).bit_length() - 1
                yield (u, v)
                m &= m - 1

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def neighbors(self, v: int) -> list[int]:
        m = self.masks[v]
        out = []
        while m:
            out.append((m & -m).bit_length() - 1)
            m &= m - 1
        return out

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, [(full ^ self.masks[v]) & ~(1 << v) for v in range(self.n)])


@dataclass(frozen=True)
class Coloring:
    """A proper-coloring certificate: color id per vertex."""

    colors: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def validate(self, graph: Graph) -> None:
        if len(self.colors) != graph.n:
            raise ValueError("coloring length does not match vertex count")
        for u, v in graph.edges():
            if self.colors[u] == self.colors[v]:
                raise ValueError(f"edge ({u},{v}) is monochromatic")


@dataclass(frozen=True)
class VertexSet:
    """An independent-set certificate."""

    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def validate_independent(self, graph: Graph) -> None:
        ms = sorted(self.members)
        for i, u in enumerate(ms):
            for v in ms[i + 1:]:
                if graph.is_edge(u, v):
                    raise ValueError(f"vertices {u},{v} are adjacent")


# ---------------------------------------------------------------------------
# Cayley views
# ---------------------------------------------------------------------------


class CayleyView:
    """Cay(G, A) with a materialized connection set."""

    def __init__(self, group: GroupSpec, connection: ElementSet):
        if connection.group != group:
            raise ValueError("connection set lives in a different group")
        if connection.contains_index(0):
            warnings.warn("connection set contains the identity; stripping it",
                          stacklevel=3)
        self.group = group
        self.connection = connection
        self.symmetric = connection.symmetrized_without_zero().freeze()
        self._sym_indices = self.symmetric.indices()

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def degree(self) -> int:
        return self.symmetric.count

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return False
        g = self.group
        diff = g.index(g.sub(g.from_index(v), g.from_index(u)))
        return self.symmetric.contains_index(diff)

    def neighbor_indices(self, u: int) -> np.ndarray:
        g = self.group
        if g.rank == 1:
            return (u + self._sym_indices) % g.order
        coords = g.indices_to_coords(np.full(self._sym_indices.shape, u, dtype=np.int64))
        a = g.indices_to_coords(self._sym_indices)
        return g.coords_to_indices(coords + a)

    def to_graph(self, cap: int = config.ADJACENCY_CAP) -> Graph:
        n = self.order
        if n > cap:
            raise ValueError(f"group order {n} exceeds the adjacency cap {cap}")
        g = self.group
        masks = [0] * n
        vs = np.arange(n, dtype=np.int64)
        if g.rank == 1:
            for a in self._sym_indices:
                ts = (vs + a) % n
                for v in range(n):
                    masks[v] |= 1 << int(ts[v])
        else:
            vcoords = g.indices_to_coords(vs)
            for a in self._sym_indices:
                ac = g.indices_to_coords(np.array([a]))[0]
                ts = g.coords_to_indices(vcoords + ac)
                for v in range(n):
                    masks[v] |= 1 << int(ts[v])
        return Graph(n, masks)


class ImplicitCayleyView:
    """Difference-oracle Cayley view for groups too large to materialize.

    `contains_diff` answers membership of a difference element's coordinates in
    the symmetrized connection set; only local queries and sampling are offered.
    """

    def __init__(self, group: GroupSpec, contains_diff: Callable[[tuple[int, ...]], bool]):
        self.group = group
        self.contains_diff = contains_diff

    def adjacent_coords(self, u: tuple[int, ...], v: tuple[int, ...]) -> bool:
        diff = tuple((a - b) % n for a, b, n in zip(v, u, self.group.moduli))
        if all(c == 0 for c in diff):
            return False
        return self.contains_diff(diff)

    def sampled_degree(self, u: tuple[int, ...], samples: int, seed: int = 0) -> float:
        rng = np.random.default_rng(seed)
        hits = 0
        for _ in range(samples):
            v = tuple(int(rng.integers(0, n)) for n in self.group.moduli)
            if self.adjacent_coords(u, v):
                hits += 1
        return hits / samples * self.group.order


def build_cayley(group: GroupSpec, connection: ElementSet) -> CayleyView:
    return CayleyView(group, connection)


# ---------------------------------------------------------------------------
# Greedy bounds
# ---------------------------------------------------------------------------


def greedy_clique(graph: Graph) -> list[int]:
    """Deterministic greedy clique, best over a few degree-ordered seeds."""
    if graph.n == 0:
        return []
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    best: list[int] = []
    for seed_pos in range(min(graph.n, 24)):
        seed = order[seed_pos]
        clique = [seed]
        cand = graph.masks[seed]
        while cand:
            # pick the candidate with most neighbors among remaining candidates
            pick, pick_score = -1, (-1, 0)
            m = cand
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                score = ((graph.masks[v] & cand).bit_count(), -v)
                if score > pick_score:
                    pick, pick_score = v, score
            clique.append(pick)
            cand &= graph.masks[pick]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur_coloring(graph: Graph) -> Coloring:
    """Greedy DSATUR coloring (no search). Ties break on lowest vertex index."""
    n = graph.n
    colors = [-1] * n
    neighbor_colors = [0] * n   # bitmask of colors used by neighbors
    for _ in range(n):
        pick, pick_key = -1, None
        for v in range(n):
            if colors[v] != -1:
                continue
            key = (neighbor_colors[v].bit_count(), graph.degree(v), -v)
            if pick_key is None or key > pick_key:
                pick, pick_key = v, key
        free = ~neighbor_colors[pick]
        c = (free & -free).bit_length() - 1
        colors[pick] = c
        m = graph.masks[pick]
        while m:
            u = (m & -m).bit_length() - 1
            neighbor_colors[u] |= 1 << c
            m &= m - 1
    return Coloring(tuple(colors))


@dataclass(frozen=True)
class GreedyBounds:
    clique_lower: int
    dsatur_upper: int
    clique: tuple[int, ...]
    coloring: Coloring


def greedy_bounds(graph: Graph) -> GreedyBounds:
    """Cheap bracket [clique size, DSATUR colors] around the chromatic number."""
    clique = greedy_clique(graph)
    coloring = dsatur_coloring(graph)
    coloring.validate(graph)
    bounds = GreedyBounds(len(clique), coloring.num_colors, tuple(clique), coloring)
    if bounds.clique_lower > bounds.dsatur_upper:
        raise AssertionError("clique bound exceeds coloring bound; solver bug")
    return bounds


# ---------------------------------------------------------------------------
# Exact chromatic number (DSATUR branch and bound)
# ---------------------------------------------------------------------------


@contextlib.contextmanager
def _search_stack(depth: int):
    """Both solvers recurse once per vertex; widen the recursion limit to
    current-stack + depth for the duration of the search."""
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(old + depth + 100)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


class _Budget:
    def __init__(self, seconds: float | None):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.nodes = 0
        self.exhausted = False

    def tick(self) -> bool:
        """Returns True when the budget is spent."""
        self.nodes += 1
        if self.deadline is not None and self.nodes % 2048 == 0:
            if time.monotonic() > self.deadline:
                self.exhausted = True
        return self.exhausted


@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    coloring: Coloring
    exact: bool
    nodes: int
    proof: str          # "exhausted-search" when exact, "budget" otherwise

    @property
    def chromatic_number(self) -> int:
        if not self.exact:
            raise ValueError(f"not solved to optimality; bracket [{self.lower}, {self.upper}]")
        return self.upper


def chromatic_number_exact(graph: Graph, budget_s: float | None = None,
                           cap: int = config.EXACT_SOLVER_CAP) -> ChromaticResult:
    """Exact chromatic number by DSATUR branch and bound with a clique seed.

    Within budget the result is exact (lower == upper) and carries a validated
    Coloring plus an exhausted-search proof for upper-1 colors.  On budget
    exhaustion a bracket [lower, upper] with the best coloring found is
    returned instead, flagged exact=False.
    """
    n = graph.n
    if n > cap:
        raise ValueError(f"vertex count {n} exceeds the exact-solver cap {cap}")
    if n == 0:
        return ChromaticResult(0, 0, Coloring(()), True, 0, "empty")
    if graph.edge_count() == 0:
        col = Coloring((0,) * n)
        return ChromaticResult(1, 1, col, True, 0, "edgeless")

    clique = greedy_clique(graph)
    greedy = dsatur_coloring(graph)
    best_colors = list(greedy.colors)
    best = greedy.num_colors
    lb = max(2, len(clique))
    budget = _Budget(budget_s)

    if lb < best:
        colors = [-1] * n
        neighbor_colors = [0] * n
        # Symmetry breaking: fix distinct colors on a maximal greedy clique.
        for c, v in enumerate(clique):
            colors[v] = c
            for u in graph.neighbors(v):
                neighbor_colors[u] |= 1 << c
        uncolored = n - len(clique)

        def search(uncolored: int, used: int) -> None:
            nonlocal best, best_colors
            if used >= best:
                return
            if budget.tick():
                return
            if uncolored == 0:
                best = used
                best_colors = colors.copy()
                return
            pick, pick_key = -1, None
            for v in range(n):
                if colors[v] == -1:
                    key = (neighbor_colors[v].bit_count(), graph.degree(v), -v)
                    if pick_key is None or key > pick_key:
                        pick, pick_key = v, key
            limit = min(used + 1, best - 1)
            forbidden = neighbor_colors[pick]
            for c in range(limit):
                if forbidden >> c & 1:
                    continue
                colors[pick] = c
                touched = []
                for u in graph.neighbors(pick):
                    if not neighbor_colors[u] >> c & 1:
                        neighbor_colors[u] |= 1 << c
                        touched.append(u)
                search(uncolored - 1, max(used, c + 1))
                colors[pick] = -1
                for u in touched:
                    neighbor_colors[u] &= ~(1 << c)
                if best <= lb or budget.exhausted:
                    break

        with _search_stack(uncolored):
            search(uncolored, len(clique))

    coloring = Coloring(tuple(best_colors))
    coloring.validate(graph)
    if budget.exhausted and lb < best:
        return ChromaticResult(lb, best, coloring, False, budget.nodes, "budget")
    proof = "clique-meets-coloring" if lb >= best else "exhausted-search"
    return ChromaticResult(best, best, coloring, True, budget.nodes, proof)


# ---------------------------------------------------------------------------
# Exact independence number
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndependenceResult:
    lower: int
    upper: int
    vertex_set: VertexSet
    exact: bool
    nodes: int

    @property
    def independence_number(self) -> int:
        if not self.exact:
            raise ValueError(f"not solved to optimality; bracket [{self.lower}, {self.upper}]")
        return self.lower


def _greedy_independent(graph: Graph) -> list[int]:
    full = (1 << graph.n) - 1
    alive = full
    out = []
    while alive:
        # take the alive vertex of minimum residual degree (lowest index tie)
        pick, pick_key = -1, None
        m = alive
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            key = ((graph.masks[v] & alive).bit_count(), v)
            if pick_key is None or key < pick_key:
                pick, pick_key = v, key
        out.append(pick)
        alive &= ~(graph.masks[pick] | (1 << pick))
    return sorted(out)


def independence_number_exact(graph: Graph, budget_s: float | None = None,
                              cap: int = config.EXACT_SOLVER_CAP) -> IndependenceResult:
    """Exact maximum independent set by bitset branch and bound."""
    n = graph.n
    if n > cap:
        raise ValueError(f"vertex count {n} exceeds the exact-solver cap {cap}")
    if n == 0:
        return IndependenceResult(0, 0, VertexSet(()), True, 0)

    seed = _greedy_independent(graph)
    best = len(seed)
    best_mask = 0
    for v in seed:
        best_mask |= 1 << v
    budget = _Budget(budget_s)

    def search(cand: int, cur: int, cur_size: int) -> None:
        nonlocal best, best_mask
        if budget.tick():
            return
        if cur_size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = cur_size
            best_mask = cur
            return
        # branch on the candidate with maximum residual degree
        pick, pick_key = -1, None
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            key = ((graph.masks[v] & cand).bit_count(), -v)
            if pick_key is None or key > pick_key:
                pick, pick_key = v, key
        # include pick
        search(cand & ~(graph.masks[pick] | (1 << pick)), cur | (1 << pick), cur_size + 1)
        # exclude pick
        if not budget.exhausted:
            search(cand & ~(1 << pick), cur, cur_size)

    with _search_stack(n):
        search((1 << n) - 1, 0, 0)

    members = tuple(v for v in range(n) if best_mask >> v & 1)
    vs = VertexSet(members)
    vs.validate_independent(graph)
    if budget.exhausted:
        return IndependenceResult(best, n, vs, False, budget.nodes)
    return IndependenceResult(best, best, vs, True, budget.nodes)
