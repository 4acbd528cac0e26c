"""Generic graph machinery and the named cubic graphs.

Graphs are simple and undirected, stored as bitmask adjacency rows.
Isomorphism and automorphism-order queries run on one engine: iterated
1-dimensional color refinement plus individualization backtracking.
Automorphism orders come from the orbit-stabilizer recursion, where each
orbit membership question is itself a constrained isomorphism search.

Pappus, Coxeter and Dyck ship as checksummed adjacency-list data files;
Petersen and Heawood are built from first principles (Kneser graph and
Fano plane incidence).
"""
from __future__ import annotations

import hashlib
import itertools
import math
from collections import deque
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

INF = float("inf")


class Graph:
    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        self.n = n
        self.adj = [0] * n
        self._nbrs: list[list[int]] | None = None
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("loops are not allowed")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        self._nbrs = None

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def is_regular(self, k: int) -> bool:
        return all(self.degree(v) == k for v in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        if self._nbrs is None:
            nbrs = []
            for u in range(self.n):
                row = []
                m = self.adj[u]
                while m:
                    bit = m & -m
                    m ^= bit
                    row.append(bit.bit_length() - 1)
                nbrs.append(row)
            self._nbrs = nbrs
        return self._nbrs[v]

    def complement(self) -> "Graph":
        g = Graph(self.n)
        full = (1 << self.n) - 1
        for v in range(self.n):
            g.adj[v] = full & ~self.adj[v] & ~(1 << v)
        return g

    def induced(self, vertices: Sequence[int]) -> "Graph":
        idx = {v: i for i, v in enumerate(vertices)}
        g = Graph(len(vertices))
        for u in vertices:
            for w in self.neighbors(u):
                if w in idx and u < w:
                    g.add_edge(idx[u], idx[w])
        return g

    def disjoint_union(self, other: "Graph") -> "Graph":
        g = Graph(self.n + other.n)
        g.adj[: self.n] = list(self.adj)
        for v in range(other.n):
            g.adj[self.n + v] = other.adj[v] << self.n
        return g

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """perm maps old vertex -> new vertex."""
        g = Graph(self.n)
        for u, v in self.edges():
            g.add_edge(perm[u], perm[v])
        return g

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            dq = deque([s])
            while dq:
                u = dq.popleft()
                for w in self.neighbors(u):
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        dq.append(w)
            comps.append(sorted(comp))
        return comps

    def girth(self):
        """Length of a shortest cycle (inf if acyclic)."""
        best = INF
        for s in range(self.n):
            dist = [-1] * self.n
            par = [-1] * self.n
            dist[s] = 0
            dq = deque([s])
            while dq:
                u = dq.popleft()
                if 2 * dist[u] + 1 >= best:
                    continue
                for w in self.neighbors(u):
                    if dist[w] == -1:
                        dist[w] = dist[u] + 1
                        par[w] = u
                        dq.append(w)
                    elif w != par[u] and dist[w] >= dist[u]:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    def diameter(self):
        best = 0
        for s in range(self.n):
            dist = [-1] * self.n
            dist[s] = 0
            dq = deque([s])
            seen = 1
            while dq:
                u = dq.popleft()
                for w in self.neighbors(u):
                    if dist[w] == -1:
                        dist[w] = dist[u] + 1
                        seen += 1
                        dq.append(w)
            if seen < self.n:
                return INF
            best = max(best, max(dist))
        return best

    def strong_product(self, other: "Graph") -> "Graph":
        """(G box H) union (G times H): the strong graph product."""
        n2 = other.n
        g = Graph(self.n * n2)
        for i in range(self.n):
            for j in range(n2):
                a = i * n2 + j
                for k in range(self.n):
                    for l in range(n2):
                        b = k * n2 + l
                        if b <= a:
                            continue
                        same_i, same_j = i == k, j == l
                        adj_i, adj_j = self.has_edge(i, k), other.has_edge(j, l)
                        if (same_i and adj_j) or (adj_i and same_j) or (adj_i and adj_j):
                            g.add_edge(a, b)
        return g


# ---------------------------------------------------------------------------
# refinement / isomorphism / automorphism engine
# ---------------------------------------------------------------------------

def _refine_pair(g1: Graph, c1: list[int], g2: Graph, c2: list[int]):
    """Jointly refine two colorings to equitability.

    Returns the refined pair, or None when the color signatures diverge
    (certifying non-isomorphism of the colored graphs).
    """
    n = g1.n
    while True:
        sig1 = [
            (c1[v], tuple(sorted(c1[u] for u in g1.neighbors(v)))) for v in range(n)
        ]
        sig2 = [
            (c2[v], tuple(sorted(c2[u] for u in g2.neighbors(v)))) for v in range(n)
        ]
        pool1, pool2 = sorted(sig1), sorted(sig2)
        if pool1 != pool2:
            return None
        mapping = {s: i for i, s in enumerate(sorted(set(pool1)))}
        n1 = [mapping[s] for s in sig1]
        n2 = [mapping[s] for s in sig2]
        if n1 == c1 and n2 == c2:
            return c1, c2
        c1, c2 = n1, n2


def _cells(colors: list[int]) -> dict[int, list[int]]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return cells


def _target_cell(colors: list[int]):
    """Smallest non-singleton cell, lowest color id on ties; None if discrete."""
    best = None
    for c, members in sorted(_cells(colors).items()):
        if len(members) > 1 and (best is None or len(members) < len(best[1])):
            best = (c, members)
    return best


def _individualize(colors: list[int], v: int) -> list[int]:
    # the new color must not depend on v, or paired searches would
    # see mismatched color pools
    out = list(colors)
    out[v] = max(colors) + 1
    return out


def _iso_search(g1: Graph, c1: list[int], g2: Graph, c2: list[int]):
    refined = _refine_pair(g1, c1, g2, c2)
    if refined is None:
        return None
    c1, c2 = refined
    target = _target_cell(c1)
    if target is None:
        # discrete: match vertices by color, then verify edges
        by_color = {c: v for v, c in enumerate(c2)}
        perm = [by_color[c] for c in c1]
        for u, v in g1.edges():
            if not g2.has_edge(perm[u], perm[v]):
                return None
        if g1.edge_count() != g2.edge_count():
            return None
        return perm
    color, members1 = target
    members2 = [v for v, c in enumerate(c2) if c == color]
    v = members1[0]
    for u in members2:
        res = _iso_search(g1, _individualize(c1, v), g2, _individualize(c2, u))
        if res is not None:
            return res
    return None


def find_isomorphism(g1: Graph, g2: Graph, colors1=None, colors2=None):
    """An isomorphism g1 -> g2 respecting vertex colors, or None."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return None
    c1 = list(colors1) if colors1 is not None else [0] * g1.n
    c2 = list(colors2) if colors2 is not None else [0] * g2.n
    if sorted(c1) != sorted(c2):
        return None
    return _iso_search(g1, c1, g2, c2)


def graph_isomorphic(g1: Graph, g2: Graph, colors1=None, colors2=None) -> bool:
    return find_isomorphism(g1, g2, colors1, colors2) is not None


def graph_aut_order(g: Graph, coloring=None) -> int:
    """Order of the (color-preserving) automorphism group.

    Orbit-stabilizer recursion: |Aut| = |orbit of the branch vertex| x
    |stabilizer|, with each orbit membership decided by a constrained
    isomorphism search of the graph against itself.
    """
    def rec(colors: list[int]) -> int:
        refined = _refine_pair(g, colors, g, list(colors))
        assert refined is not None
        colors = refined[0]
        target = _target_cell(colors)
        if target is None:
            return 1
        _, members = target
        v0 = members[0]
        sub = rec(_individualize(colors, v0))
        orbit = 1
        for u in members[1:]:
            if _iso_search(g, _individualize(colors, v0), g, _individualize(colors, u)):
                orbit += 1
        return orbit * sub

    return rec(list(coloring) if coloring is not None else [0] * g.n)


def brute_force_aut_order(g: Graph, coloring=None) -> int:
    """Reference oracle: try all vertex permutations (n <= 8)."""
    if g.n > 8:
        raise ValueError("brute force limited to 8 vertices")
    colors = list(coloring) if coloring is not None else [0] * g.n
    count = 0
    edges = set(map(frozenset, g.edges()))
    for perm in itertools.permutations(range(g.n)):
        if any(colors[v] != colors[perm[v]] for v in range(g.n)):
            continue
        if all(frozenset((perm[u], perm[v])) in edges for u, v in edges):
            count += 1
    return count


# ---------------------------------------------------------------------------
# incidence structures
# ---------------------------------------------------------------------------

def levi_graph(n_points: int, blocks: Sequence[Sequence[int]]):
    """Bipartite point-block incidence graph with a 2-coloring."""
    g = Graph(n_points + len(blocks))
    for bi, block in enumerate(blocks):
        for p in block:
            g.add_edge(p, n_points + bi)
    colors = [0] * n_points + [1] * len(blocks)
    return g, colors


def incidence_aut_order(n_points: int, blocks: Sequence[Sequence[int]]) -> int:
    g, colors = levi_graph(n_points, blocks)
    return graph_aut_order(g, colors)


def collinearity_graph(n_points: int, blocks: Sequence[Sequence[int]]) -> Graph:
    g = Graph(n_points)
    for block in blocks:
        for u, v in itertools.combinations(block, 2):
            if not g.has_edge(u, v):
                g.add_edge(u, v)
    return g


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------

_DATA_SHA256 = {
    "pappus": "c01347a651afbd14c4c9be5ec42a6063cdcb6479b0c13d4b45263e1c44bd06c5",
    "coxeter": "996ef388ba3c2967525a1536be99de0ff75b4c7c1f1378a54d23ecd399cf6fc6",
    "dyck": "f8c32f935746f05999b45076cecac0a0166867cbcd5b276e1a940d4d735ac397",
}

# name -> (vertex count, regularity, girth)
_CERTIFICATES = {
    "petersen": (10, 3, 5),
    "heawood": (14, 3, 6),
    "pappus": (18, 3, 6),
    "coxeter": (28, 3, 7),
    "dyck": (32, 3, 6),
}


def fano_plane_blocks() -> list[tuple[int, int, int]]:
    """Lines of the Fano plane on points 1..7 (nonzero GF(2)^3 vectors)."""
    return [
        tuple(sorted((a, b, a ^ b)))
        for a, b in itertools.combinations(range(1, 8), 2)
        if a ^ b > b
    ]


def _build_petersen() -> Graph:
    pairs = list(itertools.combinations(range(5), 2))
    g = Graph(10)
    for i, j in itertools.combinations(range(10), 2):
        if not set(pairs[i]) & set(pairs[j]):
            g.add_edge(i, j)
    return g


def _build_heawood() -> Graph:
    blocks = fano_plane_blocks()
    g, _ = levi_graph(7, [tuple(p - 1 for p in b) for b in blocks])
    return g


def _load_data_graph(name: str) -> Graph:
    text = resources.files("hexamagic.data").joinpath(f"{name}.txt").read_text()
    digest = hashlib.sha256(text.encode()).hexdigest()
    if digest != _DATA_SHA256[name]:
        raise ValueError(f"checksum mismatch for data file {name}.txt")
    edges = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        u, v = map(int, line.split())
        edges.append((u, v))
    n = 1 + max(max(e) for e in edges)
    return Graph(n, edges)


def named_graph(name: str) -> Graph:
    name = name.lower()
    if name not in _CERTIFICATES:
        raise ValueError(f"unknown graph name {name!r}")
    if name == "petersen":
        g = _build_petersen()
    elif name == "heawood":
        g = _build_heawood()
    else:
        g = _load_data_graph(name)
    n, k, girth = _CERTIFICATES[name]
    if g.n != n or not g.is_regular(k) or g.girth() != girth:
        raise AssertionError(f"{name} failed its validation certificate")
    return g


# ---------------------------------------------------------------------------
# independence numbers and the capacity bound
# ---------------------------------------------------------------------------

def independence_number(g: Graph) -> int:
    """Exact maximum independent set size (branch and bound)."""
    adj = g.adj
    best = 0

    def rec(cand: int, size: int) -> None:
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        bit = cand & -cand
        v = bit.bit_length() - 1
        rec(cand & ~bit & ~adj[v], size + 1)  # take v
        rec(cand ^ bit, size)  # skip v

    rec((1 << g.n) - 1, 0)
    return best


def shannon_lower_bound(g: Graph):
    """(alpha(g), alpha(g strong-product g), sqrt lower bound for capacity)."""
    if g.n * g.n > 200:
        raise ValueError("strong square too large (limit: 200 vertices)")
    a1 = independence_number(g)
    a2 = independence_number(g.strong_product(g))
    return a1, a2, math.sqrt(a2)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


# ---------------------------------------------------------------------------
# 10_3 configurations
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def enumerate_10_3() -> list[tuple[tuple[int, int, int], ...]]:
    """All combinatorial 10_3 configurations up to isomorphism.

    10 points, 10 three-point lines, 3 lines per point, two lines meeting
    in at most one point.  Search is normalized so the first point's
    lines are (0,1,2),(0,3,4),(0,5,6); class representatives are
    deduplicated with the colored Levi-graph isomorphism test.
    """
    first = [(0, 1, 2), (0, 3, 4), (0, 5, 6)]
    all_triples = [
        t for t in itertools.combinations(range(1, 10), 3)
    ]

    def compatible(t, chosen, deg):
        if any(deg[p] >= 3 for p in t):
            return False
        for s in chosen:
            if len(set(t) & set(s)) > 1:
                return False
        return True

    results: list[tuple] = []

    def dfs(chosen, deg, start):
        if len(chosen) == 10:
            if all(d == 3 for d in deg):
                results.append(tuple(chosen))
            return
        remaining = 10 - len(chosen)
        need = sum(3 - d for d in deg)
        if need != 3 * remaining:
            pass
        if need > 3 * remaining:
            return
        for idx in range(start, len(all_triples)):
            t = all_triples[idx]
            if compatible(t, chosen, deg):
                for p in t:
                    deg[p] += 1
                chosen.append(t)
                dfs(chosen, deg, idx + 1)
                chosen.pop()
                for p in t:
                    deg[p] -= 1

    deg0 = [3, 1, 1, 1, 1, 1, 1, 0, 0, 0]
    dfs(list(first), deg0, 0)

    def invariant(cfg) -> tuple:
        comp = collinearity_graph(10, cfg).complement()
        common = sorted(
            bin(comp.adj[u] & comp.adj[v]).count("1")
            for u in range(10)
            for v in range(u + 1, 10)
        )
        return (comp.girth(), tuple(common))

    reps: list[tuple] = []
    rep_keys: list[tuple] = []
    rep_levis: list = []
    for cfg in results:
        key = invariant(cfg)
        gl, cl = levi_graph(10, cfg)
        new = True
        for rep, rkey, (gl2, cl2) in zip(reps, rep_keys, rep_levis):
            if rkey != key:
                continue
            if graph_isomorphic(gl, gl2, cl, cl2):
                new = False
                break
        if new:
            reps.append(cfg)
            rep_keys.append(key)
            rep_levis.append((gl, cl))
    return reps


def generalized_petersen(n: int, k: int) -> Graph:
    g = Graph(2 * n)
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
        g.add_edge(n + i, n + (i + k) % n)
        g.add_edge(i, n + i)
    return g


@lru_cache(maxsize=1)
def select_nonrealizable_10_3():
    """The non-realizable 10_3: Petersen collinearity complement, and
    not the Desargues configuration.

    Two of the ten classes have a Petersen complement; the Desargues
    configuration (whose incidence graph is the generalized Petersen
    graph GP(10,3)) is the realizable one and is excluded.
    """
    petersen = named_graph("petersen")
    desargues = generalized_petersen(10, 3)
    hits = []
    for cfg in enumerate_10_3():
        if not graph_isomorphic(collinearity_graph(10, cfg).complement(), petersen):
            continue
        if graph_isomorphic(levi_of_10_3(cfg), desargues):
            continue
        hits.append(cfg)
    if len(hits) != 1:
        raise AssertionError(f"expected exactly one matching 10_3, found {len(hits)}")
    return hits[0]


def levi_of_10_3(cfg) -> Graph:
    g, _ = levi_graph(10, cfg)
    return g
