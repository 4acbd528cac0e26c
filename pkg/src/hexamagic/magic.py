"""Magic pentagrams and glued-triangle (18_2, 12_3) configurations.

Pentagrams: 5-cliques of the 945-vertex edge-compatibility graph
(adjacency: affine edges sharing exactly one point) with 10 distinct
vertices and an odd number of negative edges.

The (18_2, 12_3) configurations ("WA" in the CLI): three pairwise
disjoint triangles in perspective.  A triangle is a punctured Fano
plane with its midpoint line deleted, determined by (apex, midline)
with corners = apex + midpoint.  The third triangle is the pointwise
GF(2) sum of the first two under a linear correspondence, each apex
commutes with all nine midpoints, and the three gluing lines join
matched midpoints.  Configurations with an odd negative-line count
qualify; the census realizes the (18_2, 12_3) incidence structure with
every vertex on exactly two of its twelve lines.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .space import Space, mask_points, point_mask, space as shared_space


class Pentagram(NamedTuple):
    edge_ids: tuple[int, int, int, int, int]
    mask: int
    minus_edges: int
    type: int  # 1, 2, 3 for 5, 3, 1 negative edges


class Triangle(NamedTuple):
    apex: int
    midline_id: int
    midpoints: tuple[int, int, int]
    corners: tuple[int, int, int]
    side_line_ids: tuple[int, int, int]
    plane_id: int
    mask: int
    side_minus: int


class WAConfig(NamedTuple):
    triangle_ids: tuple[int, int, int]
    gluing_line_ids: tuple[int, int, int]
    mask: int
    minus_lines: int
    type: int | None  # 1..4 for 7,5,3,1 negative lines; None otherwise

    def line_ids(self, triangles: Sequence[Triangle]) -> tuple[int, ...]:
        sides: list[int] = []
        for ti in self.triangle_ids:
            sides.extend(triangles[ti].side_line_ids)
        return tuple(sides) + self.gluing_line_ids


_WA_TYPE = {7: 1, 5: 2, 3: 3, 1: 4}
_PENT_TYPE = {5: 1, 3: 2, 1: 3}


# ---------------------------------------------------------------------------
# pentagrams
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _edge_compat_arrays():
    sp = shared_space()
    n = len(sp.edges)
    masks = np.array([e.mask for e in sp.edges], dtype=np.int64)
    minus = np.array([1 if e.sign < 0 else 0 for e in sp.edges], dtype=np.int8)
    nbr = [0] * n
    for i in range(n):
        mi = int(masks[i])
        for j in range(i + 1, n):
            inter = mi & int(masks[j])
            if inter and inter & (inter - 1) == 0:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
    words = np.zeros((n, 15), dtype=np.uint64)
    for i, m in enumerate(nbr):
        for w in range(15):
            words[i, w] = (m >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return words, masks, minus


class PentagramCensus:
    def __init__(self, pents: list[Pentagram]):
        self.pentagrams = pents
        self.masks = np.array([p.mask for p in pents], dtype=np.int64)
        self.types = np.array([p.type for p in pents], dtype=np.int8)

    def __len__(self) -> int:
        return len(self.pentagrams)

    def type_split(self) -> tuple[int, int, int]:
        return tuple(int((self.types == t).sum()) for t in (1, 2, 3))

    def within(self, mask: int) -> np.ndarray:
        """Boolean selector of pentagrams whose vertices all lie in mask."""
        return (self.masks & ~np.int64(mask)) == 0

    def count_within(self, mask: int) -> tuple[int, tuple[int, int, int]]:
        sel = self.within(mask)
        types = self.types[sel]
        return int(sel.sum()), tuple(int((types == t).sum()) for t in (1, 2, 3))


def enumerate_pentagrams(sp: Space | None = None) -> PentagramCensus:
    sp = sp or shared_space()
    words, masks, minus = _edge_compat_arrays()
    rows = kernels.pentagram_cliques(words, masks, minus)
    pents = []
    for row in rows:
        ids = tuple(int(x) for x in row)
        m = 0
        neg = 0
        for e in ids:
            m |= int(masks[e])
            neg += int(minus[e])
        pents.append(Pentagram(ids, m, neg, _PENT_TYPE[neg]))
    return PentagramCensus(pents)


# ---------------------------------------------------------------------------
# triangles
# ---------------------------------------------------------------------------

class TriangleCensus:
    def __init__(self, sp: Space):
        self.space = sp
        plane_by_mask = {p.mask: i for i, p in enumerate(sp.fano_planes)}
        tris: list[Triangle] = []
        for li, ln in enumerate(sp.lines):
            a0, b0, _ = ln.points
            joint = sp.perp_mask[a0] & sp.perp_mask[b0] & ~ln.mask
            for apex in mask_points(joint):
                mids = ln.points
                corners = tuple(sorted(apex ^ m for m in mids))
                sides = []
                sminus = 0
                for k in range(3):
                    side = tuple(
                        sorted((mids[k], apex ^ mids[(k + 1) % 3], apex ^ mids[(k + 2) % 3]))
                    )
                    sid = sp.line_id[side]
                    sides.append(sid)
                    if sp.lines[sid].sign < 0:
                        sminus += 1
                mask = ln.mask | point_mask(corners)
                plane_id = plane_by_mask[mask | (1 << (apex - 1))]
                tris.append(
                    Triangle(apex, li, mids, corners, tuple(sides), plane_id, mask, sminus)
                )
        self.triangles = tris
        self.apex = np.array([t.apex for t in tris], dtype=np.int32)
        self.mids = np.array([t.midpoints for t in tris], dtype=np.int32)
        self.masks = np.array([t.mask for t in tris], dtype=np.int64)
        self.sminus = np.array([t.side_minus for t in tris], dtype=np.int8)
        self.tri_at = np.full((64, len(sp.lines)), -1, dtype=np.int32)
        for ti, t in enumerate(tris):
            self.tri_at[t.apex, t.midline_id] = ti
        # pairwise tables: line id and line sign through two commuting points
        self.line_id_table = np.full((64, 64), -1, dtype=np.int16)
        self.line_minus_table = np.full((64, 64), -1, dtype=np.int8)
        for li, ln in enumerate(sp.lines):
            a, b, c = ln.points
            neg = 1 if ln.sign < 0 else 0
            for u, v in ((a, b), (a, c), (b, c)):
                self.line_id_table[u, v] = self.line_id_table[v, u] = li
                self.line_minus_table[u, v] = self.line_minus_table[v, u] = neg
        self.perp = np.array(sp.perp_mask, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.triangles)


@lru_cache(maxsize=1)
def triangle_census() -> TriangleCensus:
    return TriangleCensus(shared_space())


# ---------------------------------------------------------------------------
# WA configurations
# ---------------------------------------------------------------------------

class WACensus:
    def __init__(self, configs: list[WAConfig], restricted_to: int | None = None):
        self.configs = configs
        self.restricted_to = restricted_to
        self.masks = np.array([c.mask for c in configs], dtype=np.int64)
        self.minus = np.array([c.minus_lines for c in configs], dtype=np.int8)

    def __len__(self) -> int:
        return len(self.configs)

    def type_split(self) -> tuple[int, int, int, int]:
        return tuple(int((self.minus == m).sum()) for m in (7, 5, 3, 1))

    def untyped_count(self) -> int:
        return int(sum(1 for c in self.configs if c.type is None))

    def within(self, mask: int) -> np.ndarray:
        return (self.masks & ~np.int64(mask)) == 0

    def count_within(self, mask: int) -> tuple[int, tuple[int, int, int, int]]:
        sel = self.within(mask)
        mins = self.minus[sel]
        return int(sel.sum()), tuple(int((mins == m).sum()) for m in (7, 5, 3, 1))


def _rows_to_configs(tc: TriangleCensus, rows: np.ndarray) -> list[WAConfig]:
    out = []
    for row in rows:
        i, j, k, g1, g2, g3, neg = (int(x) for x in row)
        mask = int(tc.masks[i]) | int(tc.masks[j]) | int(tc.masks[k])
        out.append(
            WAConfig((i, j, k), (g1, g2, g3), mask, neg, _WA_TYPE.get(neg))
        )
    return out


def _wa_chunk(args):
    start, stop, allowed, allowed_pmask = args
    tc = triangle_census()
    return kernels.wa_triples(
        tc.apex, tc.mids, tc.masks, tc.sminus, tc.perp,
        tc.line_minus_table, tc.tri_at, tc.line_id_table,
        allowed, allowed_pmask, start, stop,
    )


def enumerate_wa(
    within_mask: int | None = None,
    threads: int = 1,
    checkpoint_path: str | None = None,
    n_chunks: int = 32,
) -> WACensus:
    """Enumerate WA configurations, optionally restricted to a point set.

    The full-space scan can be chunked over anchor triangles, run on a
    process pool, and checkpointed to a JSON file for resumption.
    """
    tc = triangle_census()
    if within_mask is None:
        allowed = np.arange(len(tc), dtype=np.int32)
        allowed_pmask = (1 << 63) - 1
    else:
        sel = (tc.masks & ~np.int64(within_mask)) == 0
        allowed = np.nonzero(sel)[0].astype(np.int32)
        allowed_pmask = int(within_mask)

    n = len(allowed)
    bounds = [round(i * n / n_chunks) for i in range(n_chunks + 1)]
    chunks = [(bounds[i], bounds[i + 1]) for i in range(n_chunks) if bounds[i] < bounds[i + 1]]

    done: dict[int, list] = {}
    if checkpoint_path and os.path.exists(checkpoint_path):
        with open(checkpoint_path) as f:
            saved = json.load(f)
        if saved.get("format") == "hexamagic_wa_checkpoint_v1" and saved.get("n_allowed") == n:
            done = {int(k): v for k, v in saved["chunks"].items()}

    def save_checkpoint() -> None:
        if not checkpoint_path:
            return
        payload = {
            "format": "hexamagic_wa_checkpoint_v1",
            "n_allowed": n,
            "chunks": {str(k): v for k, v in done.items()},
        }
        tmp = checkpoint_path + ".tmp"
        with open(tmp, "w") as f:
            json.dump(payload, f)
        os.replace(tmp, checkpoint_path)

    todo = [ci for ci in range(len(chunks)) if ci not in done]
    if todo:
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                futs = {
                    ci: pool.submit(_wa_chunk, (chunks[ci][0], chunks[ci][1], allowed, allowed_pmask))
                    for ci in todo
                }
                for ci in todo:
                    done[ci] = futs[ci].result().tolist()
                    save_checkpoint()
        else:
            for ci in todo:
                done[ci] = _wa_chunk((chunks[ci][0], chunks[ci][1], allowed, allowed_pmask)).tolist()
                save_checkpoint()

    rows: list = []
    for ci in range(len(chunks)):
        rows.extend(done[ci])
    arr = np.array(rows, dtype=np.int32).reshape(-1, 7)
    return WACensus(_rows_to_configs(tc, arr), within_mask)


# ---------------------------------------------------------------------------
# derived configurations (point-line unions, disjointness graphs)
# ---------------------------------------------------------------------------

class DerivedConfig(NamedTuple):
    points: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    degree_spectrum: tuple[int, ...]  # distinct point degrees, ascending
    block_size: int


def derived_config(sp: Space, pents: Sequence[Pentagram]) -> DerivedConfig:
    """Union of vertices and distinct edges of a pentagram set."""
    blocks = sorted({sp.edges[e].points for p in pents for e in p.edge_ids})
    pts = sorted({q for b in blocks for q in b})
    deg = {p: 0 for p in pts}
    for b in blocks:
        for q in b:
            deg[q] += 1
    sizes = {len(b) for b in blocks}
    if sizes != {4}:
        raise AssertionError(f"mixed block sizes {sizes}")
    return DerivedConfig(
        tuple(pts), tuple(blocks), tuple(sorted(set(deg.values()))), 4
    )


def disjointness_graph(pents: Sequence[Pentagram]):
    from . import graphs

    g = graphs.Graph(len(pents))
    for i in range(len(pents)):
        for j in range(i + 1, len(pents)):
            if pents[i].mask & pents[j].mask == 0:
                g.add_edge(i, j)
    return g


def pentagram_levi(sp: Space, p: Pentagram):
    """Colored Levi graph of one pentagram (10 points, 5 size-4 edges)."""
    from . import graphs

    pts = mask_points(p.mask)
    idx = {q: i for i, q in enumerate(pts)}
    blocks = [tuple(idx[q] for q in sp.edges[e].points) for e in p.edge_ids]
    return graphs.levi_graph(len(pts), blocks)


def wa_levi(sp: Space, tc: TriangleCensus, c: WAConfig):
    """Colored Levi graph of one WA configuration (18 points, 12 lines)."""
    from . import graphs

    pts = mask_points(c.mask)
    idx = {q: i for i, q in enumerate(pts)}
    blocks = [
        tuple(idx[q] for q in sp.lines[li].points)
        for li in c.line_ids(tc.triangles)
    ]
    if len(blocks) != 12 or len(pts) != 18:
        raise AssertionError("WA configuration has wrong parameters")
    return graphs.levi_graph(len(pts), blocks)
