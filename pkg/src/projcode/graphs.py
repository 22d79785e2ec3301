"""Grassmann-type graphs on canonical subspaces.

A CodeGraph holds a deterministic vertex list of canonical subspaces
and sorted adjacency lists.  Adjacency for the subspace graphs means
the intersection has dimension k-1.  Two construction strategies are
implemented and cross-validated: pairwise stacked-rank tests with
early exit, and grouping vertices by their (k-1)-dim hyperplanes
(two distinct k-dim subspaces are adjacent exactly when they share a
hyperplane, and they share at most one, so the groups tile the edge
set with cliques and no dedup is needed).

Exact single-source BFS and geodesic counting run in pure Python with
arbitrary-precision counters; all-pairs variants are vectorized with
numpy for the larger instances and checked against the pure versions
in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .codes import is_projective, is_simplex_code
from .constructions import bracket, gaussian_binomial
from .errors import GuardExceeded
from .gf import field_new, field_of_order
from .linalg import (Subspace, enumerate_subspaces, hyperplanes_of,
                     intersect, intersect_dim, rank_of_rows,
                     subspace_points, subspace_sum, superspaces_in,
                     full_space)

BUILD_GUARD = 10**7
ISO_GUARD = 64
_COUNT_EXACT_LIMIT = float(2**53)


@dataclass(frozen=True)
class GraphParams:
    n: int
    k: int
    q: int
    predicate: str


@dataclass(frozen=True)
class CodeGraph:
    params: GraphParams
    vertices: tuple[Subspace, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def index(self) -> dict[Subspace, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.order, self.order), dtype=bool)
        for i, nbrs in enumerate(self.adjacency):
            a[i, list(nbrs)] = True
        return a


@dataclass(frozen=True)
class DistanceReport:
    source: int
    distances: tuple[int | None, ...]
    eccentricity: int
    reachable: int


# ----------------------------------------------------------------------
# Metrics
# ----------------------------------------------------------------------

def grassmann_distance(x: Subspace, y: Subspace) -> int:
    """k - dim(X ∩ Y) for equal-dimensional subspaces."""
    if x.dim != y.dim:
        raise ValueError("subspaces must have equal dimension")
    return x.dim - intersect_dim(x, y)


def grassmann_geodesic_count(m: int, q: int) -> int:
    """Product of [i]_q squared for i = 2..m (1 when m <= 1): the exact
    geodesic count between vertices at distance m in the full graph."""
    if m < 0:
        raise ValueError("negative distance")
    out = 1
    for i in range(2, m + 1):
        out *= bracket(i, q) ** 2
    return out


def theorem1_geodesic_bound(m: int, q: int) -> int:
    """Product of [i]_q for i = 2..m: the lower bound promised for the
    projective subgraph."""
    out = 1
    for i in range(2, m + 1):
        out *= bracket(i, q)
    return out


# ----------------------------------------------------------------------
# Construction
# ----------------------------------------------------------------------

_PREDICATES = {
    "all": lambda s: True,
    "projective": is_projective,
    "simplex": is_simplex_code,
}


def _adjacency_pairwise(vertices: tuple[Subspace, ...]) -> list[list[int]]:
    nv = len(vertices)
    adj: list[list[int]] = [[] for _ in range(nv)]
    if nv == 0:
        return adj
    fld = vertices[0].field
    k = vertices[0].dim
    for i in range(nv):
        ri = vertices[i].rows
        for j in range(i + 1, nv):
            rank = rank_of_rows(fld, ri + vertices[j].rows)
            if rank == k + 1:
                adj[i].append(j)
                adj[j].append(i)
    return adj


def _adjacency_by_hyperplane(vertices: tuple[Subspace, ...]) -> list[list[int]]:
    groups: dict[tuple, list[int]] = {}
    for i, v in enumerate(vertices):
        for h in hyperplanes_of(v):
            groups.setdefault(h.rows, []).append(i)
    adj: list[set[int]] = [set() for _ in vertices]
    for members in groups.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                adj[members[a]].add(members[b])
                adj[members[b]].add(members[a])
    return [sorted(s) for s in adj]


def build_graph(n: int, k: int, q: int, predicate: str = "all",
                adjacency_method: str = "auto",
                max_vertices: int = BUILD_GUARD) -> CodeGraph:
    """Graph of all k-dim subspaces of F_q^n passing the predicate."""
    if predicate not in _PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    total = gaussian_binomial(n, k, q)
    if total > max_vertices:
        raise GuardExceeded(f"{total} subspaces exceed the {max_vertices} guard")
    if predicate == "simplex" and n != bracket(k, q):
        raise ValueError(f"simplex predicate needs n = [k]_q = {bracket(k, q)}")
    fld = field_of_order(q)
    vertices = tuple(enumerate_subspaces(fld, n, k, _PREDICATES[predicate]))
    if adjacency_method == "auto":
        adjacency_method = "pairwise" if len(vertices) <= 200 else "hyperplane"
    if adjacency_method == "pairwise":
        adj = _adjacency_pairwise(vertices)
    elif adjacency_method == "hyperplane":
        adj = _adjacency_by_hyperplane(vertices)
    else:
        raise ValueError(f"unknown adjacency method {adjacency_method!r}")
    return CodeGraph(GraphParams(n, k, q, predicate), vertices,
                     tuple(tuple(a) for a in adj))


def incidence_graph_1_3() -> CodeGraph:
    """Bipartite incidence graph of the 1-dim and 3-dim subspaces of
    F_2^4 (15 + 15 vertices, 7-regular)."""
    fld = field_new(2, 1)
    points = enumerate_subspaces(fld, 4, 1)
    planes = enumerate_subspaces(fld, 4, 3)
    vertices = tuple(points + planes)
    np_ = len(points)
    adj: list[list[int]] = [[] for _ in vertices]
    for i, pt in enumerate(points):
        vec = pt.rows[0]
        for j, pl in enumerate(planes):
            if pl.contains_vector(vec):
                adj[i].append(np_ + j)
                adj[np_ + j].append(i)
    return CodeGraph(GraphParams(4, 0, 2, "incidence-1-3"), vertices,
                     tuple(tuple(sorted(a)) for a in adj))


# ----------------------------------------------------------------------
# Exact traversal
# ----------------------------------------------------------------------

def bfs(g: CodeGraph, source: int) -> DistanceReport:
    if not 0 <= source < g.order:
        raise ValueError(f"vertex id {source} out of range")
    dist: list[int | None] = [None] * g.order
    dist[source] = 0
    frontier = [source]
    ecc = 0
    seen = 1
    while frontier:
        nxt = []
        for u in frontier:
            du = dist[u]
            for v in g.adjacency[u]:
                if dist[v] is None:
                    dist[v] = du + 1
                    ecc = du + 1
                    seen += 1
                    nxt.append(v)
        frontier = nxt
    return DistanceReport(source, tuple(dist), ecc, seen)


def count_geodesics(g: CodeGraph, x: int, y: int) -> int:
    """Exact shortest-path count via DP over BFS layers (big ints)."""
    report = bfs(g, x)
    if report.distances[y] is None:
        raise ValueError("vertices are not connected")
    dist = report.distances
    sigma = [0] * g.order
    sigma[x] = 1
    order = sorted((d, v) for v, d in enumerate(dist) if d is not None)
    for d, v in order:
        if d == 0:
            continue
        sigma[v] = sum(sigma[u] for u in g.adjacency[v]
                       if dist[u] == d - 1)
    return sigma[y]


def is_connected(g: CodeGraph) -> bool:
    return g.order == 0 or bfs(g, 0).reachable == g.order


def diameter(g: CodeGraph) -> int:
    if g.order == 0:
        raise ValueError("empty graph has no diameter")
    best = 0
    for s in range(g.order):
        rep = bfs(g, s)
        if rep.reachable != g.order:
            raise ValueError("graph is disconnected")
        best = max(best, rep.eccentricity)
    return best


def bipartition(g: CodeGraph) -> tuple[list[int], list[int]] | None:
    """Two-coloring over each component, or None if an odd cycle exists."""
    color = [-1] * g.order
    sides: tuple[list[int], list[int]] = ([], [])
    for s in range(g.order):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
    for v, c in enumerate(color):
        sides[c].append(v)
    return sides


# ----------------------------------------------------------------------
# All-pairs numpy paths
# ----------------------------------------------------------------------

def distance_matrix(g: CodeGraph) -> np.ndarray:
    """All-pairs hop distances (-1 for unreachable), by boolean matmul."""
    nv = g.order
    a = g.adjacency_matrix().astype(np.float32)
    dist = np.full((nv, nv), -1, dtype=np.int16)
    np.fill_diagonal(dist, 0)
    reached = np.eye(nv, dtype=bool)
    frontier = g.adjacency_matrix() & ~reached
    d = 1
    while frontier.any():
        dist[frontier] = d
        reached |= frontier
        nxt = (frontier.astype(np.float32) @ a) > 0
        frontier = nxt & ~reached
        d += 1
    return dist


def geodesic_count_matrix(g: CodeGraph, dist: np.ndarray | None = None) -> np.ndarray:
    """All-pairs exact geodesic counts as int64 (guarded below 2^53)."""
    if dist is None:
        dist = distance_matrix(g)
    nv = g.order
    a = g.adjacency_matrix().astype(np.float64)
    counts = np.zeros((nv, nv), dtype=np.float64)
    np.fill_diagonal(counts, 1.0)
    level = a.copy()
    d = 1
    maxd = int(dist.max())
    while d <= maxd:
        mask = dist == d
        counts[mask] = level[mask]
        level = (level * mask) @ a
        d += 1
    if counts.max() >= _COUNT_EXACT_LIMIT:
        raise GuardExceeded("geodesic counts too large for the float64 fast path")
    out = counts.astype(np.int64)
    return out


def meet_dim_matrix(g: CodeGraph) -> np.ndarray:
    """All-pairs dim(X ∩ Y) via shared-point counts.

    The 1-dim subspaces common to X and Y are exactly those of X ∩ Y,
    so the shared-point count is [d]_q and inverts to d uniquely.
    """
    if g.order == 0:
        return np.zeros((0, 0), dtype=np.int16)
    k = g.vertices[0].dim
    q = g.params.q
    point_ids: dict[tuple[int, ...], int] = {}
    rows = []
    for v in g.vertices:
        ids = []
        for pt in subspace_points(v):
            ids.append(point_ids.setdefault(pt, len(point_ids)))
        rows.append(ids)
    inc = np.zeros((g.order, len(point_ids)), dtype=np.float32)
    for i, ids in enumerate(rows):
        inc[i, ids] = 1.0
    shared = np.rint(inc @ inc.T).astype(np.int64)
    lookup = np.full(bracket(k, q) + 1, -1, dtype=np.int16)
    for d in range(k + 1):
        lookup[bracket(d, q)] = d
    dims = lookup[shared]
    if (dims < 0).any():
        raise AssertionError("shared-point count is not a bracket number")
    return dims


# ----------------------------------------------------------------------
# Common neighbors without building a graph
# ----------------------------------------------------------------------

def common_neighbor_candidates(x: Subspace, y: Subspace) -> list[Subspace]:
    """Every Z with dim(Z ∩ X) = dim(Z ∩ Y) = k-1, from hyperplane pairs.

    Any such Z contains (Z∩X) + (Z∩Y); when the pair meets in k-2 dims
    that sum is Z itself, and when X, Y are adjacent the remaining Z
    are the k-dim superspaces of X ∩ Y.  Both families are enumerated
    and filtered, so the result is complete for every input pair.
    """
    if x == y:
        raise ValueError("arguments must be distinct subspaces")
    k = x.dim
    if k != y.dim:
        raise ValueError("subspaces must have equal dimension")
    found: dict[tuple, Subspace] = {}

    def consider(z: Subspace):
        if z.dim != k or z == x or z == y:
            return
        if intersect_dim(z, x) == k - 1 and intersect_dim(z, y) == k - 1:
            found.setdefault(z.rows, z)

    hx = hyperplanes_of(x)
    hy = hyperplanes_of(y)
    for h1 in hx:
        for h2 in hy:
            s = subspace_sum(h1, h2)
            if s.dim == k:
                consider(s)
    if intersect_dim(x, y) == k - 1:
        meet = intersect(x, y)
        ambient = full_space(x.field, x.ambient_n)
        for z in superspaces_in(meet, ambient, k):
            consider(z)
    return sorted(found.values(), key=lambda s: s.rows)


def common_projective_neighbors(x: Subspace, y: Subspace) -> list[Subspace]:
    """Projective codes adjacent to both of two projective codes."""
    if not (is_projective(x) and is_projective(y)):
        raise ValueError("inputs must be projective codes")
    return [z for z in common_neighbor_candidates(x, y) if is_projective(z)]


# ----------------------------------------------------------------------
# Isomorphism
# ----------------------------------------------------------------------

def _vertex_profiles(g: CodeGraph) -> list[tuple]:
    degs = g.degrees()
    profiles = []
    for v in range(g.order):
        rep = bfs(g, v)
        hist: dict[int, int] = {}
        for d in rep.distances:
            key = -1 if d is None else d
            hist[key] = hist.get(key, 0) + 1
        profiles.append((
            degs[v],
            tuple(sorted(degs[u] for u in g.adjacency[v])),
            tuple(sorted(hist.items())),
        ))
    return profiles


def isomorphic(g1: CodeGraph, g2: CodeGraph) -> tuple[int, ...] | None:
    """Edge-preserving vertex bijection, or None.

    Backtracking guided by (degree, neighbor degrees, distance profile)
    invariants; the next vertex chosen is always one with the most
    already-mapped neighbors.  A returned bijection has been replayed
    edge-by-edge.
    """
    nv = g1.order
    if nv != g2.order:
        return None
    if nv > ISO_GUARD:
        raise GuardExceeded(f"isomorphism search capped at {ISO_GUARD} vertices")
    if nv == 0:
        return ()
    if g1.num_edges != g2.num_edges:
        return None
    prof1 = _vertex_profiles(g1)
    prof2 = _vertex_profiles(g2)
    if sorted(prof1) != sorted(prof2):
        return None
    adj1 = [frozenset(a) for a in g1.adjacency]
    adj2 = [frozenset(a) for a in g2.adjacency]
    candidates = [frozenset(w for w in range(nv) if prof2[w] == prof1[v])
                  for v in range(nv)]

    mapping = [-1] * nv
    used = [False] * nv

    def pick_next() -> int:
        best, best_key = -1, None
        for v in range(nv):
            if mapping[v] != -1:
                continue
            mapped_nbrs = sum(1 for u in adj1[v] if mapping[u] != -1)
            key = (-mapped_nbrs, len(candidates[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def extend() -> bool:
        v = pick_next()
        if v == -1:
            return True
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in range(nv):
                mu = mapping[u]
                if mu == -1:
                    continue
                if (u in adj1[v]) != (mu in adj2[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend():
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if not extend():
        return None
    for v in range(nv):
        for u in g1.adjacency[v]:
            if mapping[u] not in adj2[mapping[v]]:
                raise AssertionError("isomorphism replay failed")
    return tuple(mapping)


# ----------------------------------------------------------------------
# Export
# ----------------------------------------------------------------------

def graph_to_json(g: CodeGraph) -> dict:
    edges = sorted((i, j) for i, nbrs in enumerate(g.adjacency)
                   for j in nbrs if i < j)
    return {
        "params": {"n": g.params.n, "k": g.params.k, "q": g.params.q,
                   "predicate": g.params.predicate},
        "vertices": [v.to_text() for v in g.vertices],
        "edges": [list(e) for e in edges],
    }


def graph_to_dot(g: CodeGraph) -> str:
    lines = ["graph code_graph {"]
    for i, v in enumerate(g.vertices):
        label = "\\n".join(" ".join(str(x) for x in row) for row in v.rows)
        lines.append(f'  {i} [label="{label}"];')
    for i, nbrs in enumerate(g.adjacency):
        for j in nbrs:
            if i < j:
                lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
