"""The split Cayley hexagon of order two, classically embedded in W(5,2).

Primary construction: points of the parabolic quadric Q(6,2)
(x0*x4 + x1*x5 + x2*x6 = x3^2) projected along the nucleus onto GF(2)^6,
keeping the quadric lines whose Grassmann coordinates satisfy the six
classical linear conditions.  The contract is not the formula but the
validator: 63 lines, 3 per point, incidence girth 12, diameter 6, a
thin Heawood substructure, and the classical perp signature.  A
backtracking search over the 315 lines exists as a fallback route.

Geometric hyperplanes are the solutions of N*chi = 1 over GF(2) (N the
line-point incidence matrix), classified into orbits under the hexagon's
automorphism group.
"""
from __future__ import annotations

import itertools
from collections import Counter, deque
from typing import NamedTuple, Sequence

import numpy as np

from . import graphs, groups, refdata
from .space import Space, mask_points, point_mask

HEXAGON_ORDER = 12_096


class HexagonReport(NamedTuple):
    ok: bool
    failed: str | None
    line_count: int
    degrees_ok: bool
    girth: float
    diameter: float
    heawood_found: bool


class Profile(NamedTuple):
    """Point counts of a hyperplane by number of full lines through them."""

    n: int
    n0: int
    n1: int
    n2: int
    n3: int

    @property
    def line_count(self) -> int:
        return (self.n1 + 2 * self.n2 + 3 * self.n3) // 3


class OrbitRecord(NamedTuple):
    label: str
    cls: str
    profile: Profile
    lines: int
    deep_points: int
    size: int
    stabilizer_order: int
    rep_mask: int
    members: tuple[int, ...]  # indices into the hyperplane list
    deep_components: tuple[int, ...]  # component sizes on the representative
    complement_name: str | None


class Hexagon:
    def __init__(self, space: Space, lines: Sequence[tuple[int, int, int]]):
        self.space = space
        self.lines = tuple(sorted(tuple(sorted(l)) for l in lines))
        self.line_ids = tuple(space.line_id[l] for l in self.lines)
        self.line_masks = tuple(point_mask(l) for l in self.lines)
        self.lines_through = {p: [] for p in space.points}
        for li, l in enumerate(self.lines):
            for p in l:
                self.lines_through[p].append(li)
        # collinearity adjacency among points (bit p-1), and line of a pair
        self.adj_mask = [0] * 64
        self.pair_line = {}
        for li, (a, b, c) in enumerate(self.lines):
            for u, v in ((a, b), (a, c), (b, c)):
                self.adj_mask[u] |= 1 << (v - 1)
                self.adj_mask[v] |= 1 << (u - 1)
                self.pair_line[(u, v)] = li
                self.pair_line[(v, u)] = li
        self.embedding_class: str | None = None

    def incidence_graph(self) -> graphs.Graph:
        g = graphs.Graph(63 + len(self.lines))
        for li, l in enumerate(self.lines):
            for p in l:
                g.add_edge(p - 1, 63 + li)
        return g

    def full_lines_of(self, mask: int) -> list[int]:
        return [li for li, lm in enumerate(self.line_masks) if lm & ~mask == 0]

    def collinearity_subgraph(self, pts: Sequence[int]) -> graphs.Graph:
        idx = {p: i for i, p in enumerate(pts)}
        g = graphs.Graph(len(pts))
        for u in pts:
            for v in mask_points(self.adj_mask[u] & point_mask(pts)):
                if v > u:
                    g.add_edge(idx[u], idx[v])
        return g


# ---------------------------------------------------------------------------
# construction via the parabolic quadric
# ---------------------------------------------------------------------------

def _quadric_points():
    pts = []
    for n in range(1, 128):
        y = tuple((n >> i) & 1 for i in range(7))
        if ((y[0] & y[4]) ^ (y[1] & y[5]) ^ (y[2] & y[6]) ^ y[3]) == 0:
            pts.append(y)
    return pts


def _polar(u, v) -> int:
    return (
        (u[0] & v[4]) ^ (u[4] & v[0]) ^ (u[1] & v[5]) ^ (u[5] & v[1])
        ^ (u[2] & v[6]) ^ (u[6] & v[2])
    )


def _project(y) -> int:
    return y[0] | (y[1] << 1) | (y[2] << 2) | (y[4] << 3) | (y[5] << 4) | (y[6] << 5)


def _grassmann_conditions(orient_low: int, orient_high: int):
    """The six line conditions p_ab = p_3c, parameterized by the two
    cyclic orientations (the classical choice is low forward, high
    reversed)."""
    low = [(1, 2), (2, 0), (0, 1)] if orient_low == 0 else [(2, 1), (0, 2), (1, 0)]
    high = [(5, 4), (6, 5), (4, 6)] if orient_high == 0 else [(4, 5), (5, 6), (6, 4)]
    conds = []
    for (a, b) in low:
        rest = ({0, 1, 2} - {a, b}).pop()
        conds.append(((a, b), (3, rest + 4)))
    for (a, b) in high:
        rest = ({4, 5, 6} - {a, b}).pop()
        conds.append(((a, b), (3, rest - 4)))
    return conds


def _quadric_line_candidates(conds):
    pts = _quadric_points()
    out = set()
    for u, v in itertools.combinations(pts, 2):
        if _polar(u, v):
            continue
        ok = True
        for (i, j), (k, l) in conds:
            pij = (u[i] & v[j]) ^ (u[j] & v[i])
            pkl = (u[k] & v[l]) ^ (u[l] & v[k])
            if pij != pkl:
                ok = False
                break
        if ok:
            w = tuple(a ^ b for a, b in zip(u, v))
            out.add(tuple(sorted((_project(u), _project(v), _project(w)))))
    return sorted(out)


def build_classical(space: Space) -> Hexagon:
    """Construct the classically embedded hexagon and validate it."""
    for orient_low in (0, 1):
        for orient_high in (0, 1):
            lines = _quadric_line_candidates(
                _grassmann_conditions(orient_low, orient_high)
            )
            if len(lines) != 63:
                continue
            if any(tuple(l) not in space.line_id for l in lines):
                continue
            hx = Hexagon(space, lines)
            if validate_hexagon(space, hx.lines).ok:
                if classify_embedding(hx) == "classical":
                    hx.embedding_class = "classical"
                    return hx
    hx = build_by_search(space)
    if not validate_hexagon(space, hx.lines).ok or classify_embedding(hx) != "classical":
        raise RuntimeError("hexagon construction failed validation; this is a bug")
    hx.embedding_class = "classical"
    return hx


# ---------------------------------------------------------------------------
# fallback: direct backtracking over the 315 lines
# ---------------------------------------------------------------------------

def build_by_search(space: Space, seed_lines: Sequence[tuple] = ()) -> Hexagon:
    """Backtracking search for a 63-line hexagon (slow fallback route).

    Maintains the partial incidence graph and rejects any line whose
    addition would close a cycle shorter than 12.
    """
    all_lines = [l.points for l in space.lines]
    chosen: list[tuple] = []
    deg = Counter()
    adj: dict[int, set] = {}

    def dist(u, v, limit) -> int:
        if u not in adj or v not in adj:
            return limit + 1
        seen = {u: 0}
        dq = deque([u])
        while dq:
            x = dq.popleft()
            if seen[x] >= limit:
                break
            for y in adj.get(x, ()):
                if y not in seen:
                    if y == v:
                        return seen[x] + 1
                    seen[y] = seen[x] + 1
                    dq.append(y)
        return limit + 1

    def can_add(l) -> bool:
        a, b, c = l
        if deg[a] >= 3 or deg[b] >= 3 or deg[c] >= 3:
            return False
        # adding the line vertex creates point-point paths of length 2;
        # any pre-existing path of length <= 9 between two of its points
        # would close an incidence cycle shorter than 12
        for u, v in ((a, b), (a, c), (b, c)):
            if dist(("p", u), ("p", v), 9) <= 9:
                return False
        return True

    def add(l):
        node = ("l", l)
        adj.setdefault(node, set())
        for p in l:
            deg[p] += 1
            adj.setdefault(("p", p), set())
            adj[node].add(("p", p))
            adj[("p", p)].add(node)
        chosen.append(l)

    def remove(l):
        node = ("l", l)
        for p in l:
            deg[p] -= 1
            adj[("p", p)].discard(node)
        del adj[node]
        chosen.pop()

    for l in seed_lines:
        add(tuple(sorted(l)))

    def rec(start: int) -> bool:
        if len(chosen) == 63:
            return all(deg[p] == 3 for p in space.points)
        # completability: every point still needs reachable candidates
        for idx in range(start, len(all_lines)):
            l = all_lines[idx]
            if can_add(l):
                add(l)
                if rec(idx + 1):
                    return True
                remove(l)
        return False

    if not rec(0):
        raise RuntimeError("hexagon line search exhausted without a solution")
    return Hexagon(space, chosen)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def find_heawood_substructure(hx: Hexagon):
    """A 14-point, 21-line thin substructure whose point graph is Heawood.

    Each of the 21 lines carries exactly two of the 14 points, every
    point lies on three of the lines; in the incidence graph this is a
    once-subdivided Heawood subgraph.  Returns the point list or None.
    """
    template = graphs.named_graph("heawood")
    order = [0]
    seen = {0}
    while len(order) < template.n:
        for v in range(template.n):
            if v not in seen and any(u in seen for u in template.neighbors(v)):
                order.append(v)
                seen.add(v)
                break

    image: dict[int, int] = {}
    used_mask = 0

    def lines_distinct(t_vertex: int, cand: int) -> bool:
        lids = set()
        for u in template.neighbors(t_vertex):
            if u in image:
                li = hx.pair_line.get((cand, image[u]))
                if li is None or li in lids:
                    return False
                lids.add(li)
        return True

    def rec(k: int) -> bool:
        nonlocal used_mask
        if k == template.n:
            # every used line must not have its third point in the image
            pts = set(image.values())
            for tu, tv in template.edges():
                a, b = image[tu], image[tv]
                third = a ^ b
                if third in pts:
                    return False
            return True
        t = order[k]
        mapped = [u for u in template.neighbors(t) if u in image]
        cand_mask = ~used_mask & point_mask(hx.space.points)
        for u in mapped:
            cand_mask &= hx.adj_mask[image[u]]
        for cand in mask_points(cand_mask):
            if not lines_distinct(t, cand):
                continue
            image[t] = cand
            used_mask |= 1 << (cand - 1)
            if rec(k + 1):
                return True
            del image[t]
            used_mask &= ~(1 << (cand - 1))
        return False

    if rec(0):
        return [image[v] for v in range(template.n)]
    return None


def validate_hexagon(space: Space, lines: Sequence[tuple]) -> HexagonReport:
    lines = [tuple(sorted(l)) for l in lines]
    n_lines = len(set(lines))
    if n_lines != 63 or any(l not in space.line_id for l in lines):
        return HexagonReport(False, "line-set", n_lines, False, 0, 0, False)
    hx = Hexagon(space, lines)
    deg_ok = all(len(hx.lines_through[p]) == 3 for p in space.points)
    if not deg_ok:
        return HexagonReport(False, "3-regularity", n_lines, False, 0, 0, False)
    inc = hx.incidence_graph()
    g = inc.girth()
    if g != 12:
        return HexagonReport(False, "girth", n_lines, True, g, 0, False)
    d = inc.diameter()
    if d != 6:
        return HexagonReport(False, "diameter", n_lines, True, g, d, False)
    hea = find_heawood_substructure(hx) is not None
    if not hea:
        return HexagonReport(False, "heawood", n_lines, True, g, d, False)
    return HexagonReport(True, None, n_lines, True, g, d, True)


class UnrecognizedEmbeddingError(ValueError):
    pass


def classify_embedding(hx: Hexagon) -> str:
    """"classical" or "skew", from the perp-hyperplane signatures."""
    classical_sig = Profile(31, 0, 24, 0, 7)
    skew_sig = Profile(31, 4, 12, 12, 3)
    count = Counter()
    for a in hx.space.points:
        try:
            count[hyperplane_profile(hx, hx.space.perp_mask[a])[0]] += 1
        except ValueError as exc:
            raise UnrecognizedEmbeddingError(str(exc)) from exc
    if count == Counter({classical_sig: 63}):
        return "classical"
    if count == Counter({classical_sig: 15, skew_sig: 48}):
        return "skew"
    raise UnrecognizedEmbeddingError(f"unrecognized embedding: {dict(count)}")


# ---------------------------------------------------------------------------
# geometric hyperplanes
# ---------------------------------------------------------------------------

def incidence_rank(hx: Hexagon) -> int:
    rows = [lm for lm in hx.line_masks]
    rank = 0
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
            rank += 1
    return rank


def enumerate_hyperplanes(hx: Hexagon) -> list[int]:
    """All 16 383 hyperplane masks: solutions of N*chi = 1, minus the
    full point set, in ascending mask order."""
    reduced: list[tuple[int, int]] = []  # (row, rhs) in row echelon form
    for lm in hx.line_masks:
        r, rhs = lm, 1
        for (pr, prhs) in reduced:
            c = pr & -pr
            if r & c:
                r ^= pr
                rhs ^= prhs
        if r:
            reduced.append((r, rhs))
        elif rhs:
            raise RuntimeError("inconsistent hyperplane system")
    # back-substitute to reduced row echelon form
    for i in range(len(reduced)):
        changed = True
        while changed:
            changed = False
            ri, rhsi = reduced[i]
            for j, (rj, rhsj) in enumerate(reduced):
                if i != j and ri & (rj & -rj):
                    ri ^= rj
                    rhsi ^= rhsj
                    changed = True
            reduced[i] = (ri, rhsi)
    pivots = {(r & -r).bit_length() - 1 for r, _ in reduced}
    particular = 0
    for r, rhs in reduced:
        if rhs:
            particular |= r & -r
    basis = []
    for col in range(63):
        if col in pivots:
            continue
        v = 1 << col
        for r, _ in reduced:
            if (r >> col) & 1:
                v |= r & -r
        basis.append(v)
    if len(basis) != 14:
        raise RuntimeError(f"solution space has dimension {len(basis)}, expected 14")
    out = {particular}
    # Gray-code enumeration of the affine solution coset
    cur = particular
    gray_prev = 0
    for i in range(1, 1 << 14):
        gray = i ^ (i >> 1)
        cur ^= basis[(gray ^ gray_prev).bit_length() - 1]
        gray_prev = gray
        out.add(cur)
    full = point_mask(hx.space.points)
    out.discard(full)
    if len(out) != 16_383:
        raise RuntimeError(f"expected 16383 hyperplanes, got {len(out)}")
    return sorted(out)


def is_hyperplane(hx: Hexagon, mask: int) -> bool:
    """Every hexagon line meets the set in exactly 1 or 3 points."""
    if mask == 0 or mask == point_mask(hx.space.points):
        return False
    for lm in hx.line_masks:
        k = bin(lm & mask).count("1")
        if k != 1 and k != 3:
            return False
    return True


def hyperplane_profile(hx: Hexagon, mask: int):
    """(Profile, full line count, deep point mask) of a hyperplane."""
    full = [li for li, lm in enumerate(hx.line_masks) if lm & ~mask == 0]
    per_point = Counter()
    for li in full:
        for p in hx.lines[li]:
            per_point[p] += 1
    ns = [0, 0, 0, 0]
    deep = 0
    for p in mask_points(mask):
        k = per_point.get(p, 0)
        if k > 3:
            raise ValueError(f"point {p} lies on {k} full lines; not a hexagon")
        ns[k] += 1
        if k == 3:
            deep |= 1 << (p - 1)
    prof = Profile(bin(mask).count("1"), *ns)
    return prof, len(full), deep


def deep_point_components(hx: Hexagon, mask: int) -> tuple[int, ...]:
    """Sizes of hexagon-collinearity components of the deep points."""
    _, _, deep = hyperplane_profile(hx, mask)
    pts = mask_points(deep)
    if not pts:
        return ()
    g = hx.collinearity_subgraph(pts)
    return tuple(sorted((len(c) for c in g.connected_components()), reverse=True))


# ---------------------------------------------------------------------------
# orbits under the hexagon's automorphism group
# ---------------------------------------------------------------------------

def hexagon_group(space: Space, hx: Hexagon) -> groups.PermGroup:
    """The line-set stabilizer of the hexagon inside Sp(6,2)."""
    G = groups.sp6_2_generators_group()
    stab = groups.line_set_stabilizer(G, hx.lines)
    if stab.order() != HEXAGON_ORDER:
        raise AssertionError(f"hexagon stabilizer order {stab.order()}")
    return stab


def _pack_keys(H: np.ndarray) -> np.ndarray:
    packed = np.packbits(H, axis=1)
    out = np.zeros((H.shape[0], 8), dtype=np.uint8)
    out[:, : packed.shape[1]] = packed
    return out.view(np.uint64).ravel()


def classify_hyperplane_orbits(
    hx: Hexagon, hyps: Sequence[int], group: groups.PermGroup
) -> list[OrbitRecord]:
    """Partition the hyperplanes into orbits and match them to the 25
    expected types; any mismatch with the reference table is fatal."""
    n = len(hyps)
    H = np.zeros((n, 63), dtype=bool)
    for i, h in enumerate(hyps):
        H[i] = [(h >> k) & 1 for k in range(63)]
    key_to_idx = {int(k): i for i, k in enumerate(_pack_keys(H))}

    images = []
    for g in group.generators:
        perm = np.array([int(g[p]) - 1 for p in range(1, 64)])
        Himg = np.zeros_like(H)
        Himg[:, perm] = H
        images.append(
            np.array([key_to_idx[int(k)] for k in _pack_keys(Himg)], dtype=np.int32)
        )

    orbit_id = np.full(n, -1, dtype=np.int32)
    orbits: list[list[int]] = []
    for i in range(n):
        if orbit_id[i] >= 0:
            continue
        oid = len(orbits)
        stack = [i]
        orbit_id[i] = oid
        members = [i]
        while stack:
            j = stack.pop()
            for im in images:
                k = int(im[j])
                if orbit_id[k] < 0:
                    orbit_id[k] = oid
                    members.append(k)
                    stack.append(k)
        orbits.append(sorted(members))

    records = []
    for members in orbits:
        rep_idx = members[0]
        rep = hyps[rep_idx]
        prof, nlines, _ = hyperplane_profile(hx, rep)
        size = len(members)
        key = (prof.n, (prof.n0, prof.n1, prof.n2, prof.n3), size)
        label = refdata.ORBIT_LABELS.get(key)
        if label is None:
            raise AssertionError(f"orbit {key} does not match any expected type")
        expected = refdata.TABLE1[label]
        if (expected.pts, expected.lns, expected.dpts, expected.copies) != (
            prof.n,
            nlines,
            prof.n3,
            size,
        ):
            raise AssertionError(f"orbit {label} disagrees with the reference row")
        records.append(
            OrbitRecord(
                label=label,
                cls=expected.cls,
                profile=prof,
                lines=nlines,
                deep_points=prof.n3,
                size=size,
                stabilizer_order=HEXAGON_ORDER // size,
                rep_mask=rep,
                members=tuple(members),
                deep_components=deep_point_components(hx, rep),
                complement_name=None,
            )
        )
    if len(records) != 25:
        raise AssertionError(f"expected 25 orbits, found {len(records)}")
    records.sort(key=lambda r: refdata.TABLE1_ORDER.index(r.label))
    return records


# ---------------------------------------------------------------------------
# complement graphs
# ---------------------------------------------------------------------------

def complement_graph(hx: Hexagon, mask: int) -> graphs.Graph:
    """Hexagon collinearity on the points off the hyperplane (always cubic)."""
    pts = mask_points(point_mask(hx.space.points) & ~mask)
    return hx.collinearity_subgraph(pts)


def identify_complement(hx: Hexagon, mask: int, levi_10_3: graphs.Graph | None = None):
    g = complement_graph(hx, mask)
    if not g.is_regular(3):
        raise AssertionError("hyperplane complement is not cubic")
    candidates: list[tuple[str, graphs.Graph]] = []
    base = {name: graphs.named_graph(name) for name in ("petersen", "heawood", "pappus", "coxeter", "dyck")}
    for name, gg in base.items():
        candidates.append((name, gg))
    candidates.append(("heawood+coxeter", base["heawood"].disjoint_union(base["coxeter"])))
    candidates.append(("pappus+pappus", base["pappus"].disjoint_union(base["pappus"])))
    if levi_10_3 is not None:
        candidates.append(("nonrealizable-10_3-levi", levi_10_3))
    for name, gg in candidates:
        if gg.n == g.n and graphs.graph_isomorphic(g, gg):
            return g, name
    return g, None
