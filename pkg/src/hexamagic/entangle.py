"""Exact entanglement classification of edge eigenvectors.

States are 8-vectors of Gaussian integers (int pairs (re, im)); a
shared power-of-two denominator is irrelevant to every decision made
here, so it is never tracked.  Classification is exact: single-qubit
reductions are pure iff all 2x2 minors of the corresponding
matricization vanish, and for fully entangled states the Cayley
hyperdeterminant separates GHZ (nonzero) from W (zero).

For three-operator lines the common eigenspaces are 2-dimensional and
edge entanglement is criterion-dependent (see edge3_entangled): the
default criterion A asks whether some eigenspace vector is a product
state, decided exactly via the gcd of the 2x2-minor quadratics.
"""
from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import pauli
from .space import Space, space as shared_space

GaussInt = tuple[int, int]
Vector = tuple[GaussInt, ...]  # length 8, basis index bit q = qubit q

SLOCC_CLASSES = ("product", "biseparable-A", "biseparable-B", "biseparable-C", "W", "GHZ")


# ---------------------------------------------------------------------------
# exact state arithmetic
# ---------------------------------------------------------------------------

def _apply_phased(sign: int, body: int, basis: int) -> tuple[int, int]:
    """Image of |basis> under sign*body: returns (i-exponent, new basis)."""
    x, z = pauli.x_part(body), pauli.z_part(body)
    k = 0 if sign > 0 else 2
    for q in range(3):
        xq, zq = (x >> q) & 1, (z >> q) & 1
        bq = (basis >> q) & 1
        if xq and zq:
            k += 1 if bq == 0 else 3
        elif zq and bq:
            k += 2
    return k & 3, basis ^ x


def _phase_mul(re: int, im: int, k: int) -> GaussInt:
    if k == 0:
        return re, im
    if k == 1:
        return -im, re
    if k == 2:
        return -re, -im
    return im, -re


def apply_operator(sign: int, body: int, v: Vector) -> Vector:
    out = [(0, 0)] * 8
    for b in range(8):
        re, im = v[b]
        if re or im:
            k, nb = _apply_phased(sign, body, b)
            pr, pi = _phase_mul(re, im, k)
            out[nb] = (out[nb][0] + pr, out[nb][1] + pi)
    return tuple(out)


def _project(sign: int, body: int, v: Vector) -> Vector:
    """Unnormalized projector (1 + sign*body) applied to v."""
    w = apply_operator(sign, body, v)
    return tuple((a + c, b + d) for (a, b), (c, d) in zip(v, w))


def is_zero(v: Vector) -> bool:
    return all(re == 0 and im == 0 for re, im in v)


def common_eigenvector(generators: Sequence[int], signs: Sequence[int]) -> Vector:
    """Joint eigenvector of signed commuting generators, exact and unnormalized.

    Raises ValueError when the requested sign sector is empty (the
    projector vanishes); the caller must flip one sign.
    """
    if len(generators) != len(signs):
        raise ValueError("one sign per generator required")
    for start in range(8):
        v: Vector = tuple((1, 0) if b == start else (0, 0) for b in range(8))
        for g, s in zip(generators, signs):
            v = _project(s, g, v)
            if is_zero(v):
                break
        if not is_zero(v):
            return v
    raise ValueError("empty sign sector: flip one generator sign")


def verify_eigenvector(v: Vector, body: int, sign: int) -> bool:
    return apply_operator(sign, body, v) == v


def eigenspace_basis(generators: Sequence[int], signs: Sequence[int]) -> list[Vector]:
    """Basis of the joint eigenspace (projectors applied to basis kets)."""
    basis: list[Vector] = []
    for start in range(8):
        v: Vector = tuple((1, 0) if b == start else (0, 0) for b in range(8))
        for g, s in zip(generators, signs):
            v = _project(s, g, v)
        if is_zero(v):
            continue
        if not _in_span(basis, v):
            basis.append(v)
    return basis


def _in_span(basis: list[Vector], v: Vector) -> bool:
    if not basis:
        return False
    if len(basis) == 1:
        return _proportional(basis[0], v)
    # rank test over Q(i) by Gaussian elimination on rows
    rows = [list(b) for b in basis] + [list(v)]
    return _rank(rows) == _rank([list(b) for b in basis])


def _proportional(u: Vector, v: Vector) -> bool:
    for i in range(8):
        for j in range(i + 1, 8):
            det = _cmul_i(u[i], v[j])
            det2 = _cmul_i(u[j], v[i])
            if det != det2:
                return False
    return True


def _cmul_i(a: GaussInt, b: GaussInt) -> GaussInt:
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def _rank(rows: list[list[GaussInt]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0])
    for c in range(cols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][c] != (0, 0):
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != (0, 0):
                # rows[r] = pr[c]*rows[r] - rows[r][c]*pr
                a, b = pr[c], rows[r][c]
                rows[r] = [
                    (
                        a[0] * x[0] - a[1] * x[1] - (b[0] * y[0] - b[1] * y[1]),
                        a[0] * x[1] + a[1] * x[0] - (b[0] * y[1] + b[1] * y[0]),
                    )
                    for x, y in zip(rows[r], pr)
                ]
        rank += 1
    return rank


def inner_product(u: Vector, v: Vector) -> GaussInt:
    """<u|v> with Gaussian-integer entries (conjugate on the left)."""
    re = im = 0
    for (a, b), (c, d) in zip(u, v):
        re += a * c + b * d
        im += a * d - b * c
    return re, im


# ---------------------------------------------------------------------------
# hyperdeterminant, tangle, classification
# ---------------------------------------------------------------------------

def _amp(v: Vector, i: int, j: int, k: int) -> GaussInt:
    return v[i | (j << 1) | (k << 2)]


def hyperdeterminant(v: Vector) -> GaussInt:
    """Cayley hyperdeterminant d1 - 2 d2 + 4 d3 of an exact 8-vector."""
    def mul(*xs):
        acc = (1, 0)
        for x in xs:
            acc = _cmul_i(acc, x)
        return acc

    a = _amp
    d1 = (0, 0)
    for (i, j, k) in ((0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)):
        t = mul(a(v, i, j, k), a(v, i, j, k), a(v, 1 - i, 1 - j, 1 - k), a(v, 1 - i, 1 - j, 1 - k))
        d1 = (d1[0] + t[0], d1[1] + t[1])
    pairs = [
        ((0, 0, 0), (0, 1, 1)), ((0, 0, 0), (1, 0, 1)), ((0, 0, 0), (1, 1, 0)),
        ((0, 1, 1), (1, 0, 1)), ((0, 1, 1), (1, 1, 0)), ((1, 0, 1), (1, 1, 0)),
    ]
    d2 = (0, 0)
    for (p, q) in pairs:
        t = mul(a(v, *p), a(v, *(1 - x for x in p)), a(v, *q), a(v, *(1 - x for x in q)))
        d2 = (d2[0] + t[0], d2[1] + t[1])
    d3a = mul(a(v, 0, 0, 0), a(v, 1, 1, 0), a(v, 1, 0, 1), a(v, 0, 1, 1))
    d3b = mul(a(v, 1, 1, 1), a(v, 0, 0, 1), a(v, 0, 1, 0), a(v, 1, 0, 0))
    return (
        d1[0] - 2 * d2[0] + 4 * (d3a[0] + d3b[0]),
        d1[1] - 2 * d2[1] + 4 * (d3a[1] + d3b[1]),
    )


def norm_squared(v: Vector) -> int:
    return sum(re * re + im * im for re, im in v)


def three_tangle(v: Vector) -> Fraction:
    """tau = 4|Hdet| / |v|^4, exact (requires |Hdet|^2 a perfect square,
    which holds for every stabilizer state: tau is 0 or 1 there)."""
    if is_zero(v):
        raise ValueError("zero vector")
    h = hyperdeterminant(v)
    habs2 = h[0] * h[0] + h[1] * h[1]
    n2 = norm_squared(v)
    num2 = 16 * habs2  # tau^2 = num2 / n2^4
    root = math.isqrt(num2)
    if root * root != num2:
        raise ValueError("three-tangle is irrational for this vector")
    return Fraction(root, n2 * n2)


def reduction_mixed(v: Vector, qubit: int) -> bool:
    """True iff the single-qubit reduction on `qubit` is mixed
    (the 2x4 matricization has rank 2)."""
    rows: dict[int, list[GaussInt]] = {0: [], 1: []}
    for b in range(8):
        rows[(b >> qubit) & 1].append(v[b])
    r0, r1 = rows[0], rows[1]
    for i in range(4):
        for j in range(4):
            if _cmul_i(r0[i], r1[j]) != _cmul_i(r0[j], r1[i]):
                return True
    return False


def classify_state(v: Vector) -> str:
    """SLOCC class of a nonzero exact vector."""
    if is_zero(v):
        raise ValueError("zero vector")
    mixed = [reduction_mixed(v, q) for q in range(3)]
    nm = sum(mixed)
    if nm == 0:
        return "product"
    if nm == 1:
        raise AssertionError("impossible reduction pattern")
    if nm == 2:
        pure_q = mixed.index(False)
        return f"biseparable-{'ABC'[pure_q]}"
    return "GHZ" if hyperdeterminant(v) != (0, 0) else "W"


# ---------------------------------------------------------------------------
# floating-point oracle
# ---------------------------------------------------------------------------

def to_complex(v: Vector) -> np.ndarray:
    arr = np.array([re + 1j * im for re, im in v], dtype=complex)
    return arr / np.linalg.norm(arr)


def classify_float(vec: np.ndarray, tol: float = 1e-9) -> str:
    """Schmidt-rank classification with floating point (test oracle)."""
    vec = np.asarray(vec, dtype=complex)
    vec = vec / np.linalg.norm(vec)
    mixed = []
    for q in range(3):
        m = np.zeros((2, 4), dtype=complex)
        cnt = [0, 0]
        for b in range(8):
            r = (b >> q) & 1
            m[r, cnt[r]] = vec[b]
            cnt[r] += 1
        sv = np.linalg.svd(m, compute_uv=False)
        mixed.append(int((sv > tol).sum()) == 2)
    nm = sum(mixed)
    if nm == 0:
        return "product"
    if nm == 2:
        return f"biseparable-{'ABC'[mixed.index(False)]}"
    h = _hdet_float(vec)
    return "GHZ" if abs(h) > tol else "W"


def _hdet_float(v: np.ndarray) -> complex:
    a = {(i, j, k): v[i | (j << 1) | (k << 2)] for i in (0, 1) for j in (0, 1) for k in (0, 1)}
    d1 = sum(
        a[i]**2 * a[tuple(1 - x for x in i)]**2
        for i in ((0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0))
    )
    pairs = [
        ((0, 0, 0), (0, 1, 1)), ((0, 0, 0), (1, 0, 1)), ((0, 0, 0), (1, 1, 0)),
        ((0, 1, 1), (1, 0, 1)), ((0, 1, 1), (1, 1, 0)), ((1, 0, 1), (1, 1, 0)),
    ]
    d2 = sum(
        a[p] * a[tuple(1 - x for x in p)] * a[q] * a[tuple(1 - x for x in q)]
        for p, q in pairs
    )
    d3 = a[0, 0, 0] * a[1, 1, 0] * a[1, 0, 1] * a[0, 1, 1] + a[1, 1, 1] * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0]
    return d1 - 2 * d2 + 4 * d3


# ---------------------------------------------------------------------------
# edge entanglement
# ---------------------------------------------------------------------------

def edge_eigenvector(sp: Space, edge_id: int, signs: Sequence[int] = (1, 1, 1)) -> Vector:
    """Joint eigenvector of an affine edge's first three points (the
    fourth is their product); flips the last sign if the sector is empty."""
    pts = sp.edges[edge_id].points[:3]
    try:
        return common_eigenvector(pts, signs)
    except ValueError:
        flipped = (*signs[:-1], -signs[-1])
        return common_eigenvector(pts, flipped)


@lru_cache(maxsize=1)
def edge_entanglement() -> np.ndarray:
    """Per-edge booleans: is the joint eigenvector GHZ-entangled?"""
    sp = shared_space()
    out = np.zeros(len(sp.edges), dtype=bool)
    for ei in range(len(sp.edges)):
        cls = classify_state(edge_eigenvector(sp, ei))
        if cls == "W":
            raise AssertionError(f"edge {ei} produced a W state")
        out[ei] = cls == "GHZ"
    return out


def edge4_entangled(sp: Space, edge_id: int) -> bool:
    return bool(edge_entanglement()[edge_id])


# three-operator lines -------------------------------------------------------

def line_eigenspace(sp: Space, line_id: int, signs: tuple[int, int] = (1, 1)) -> list[Vector]:
    a, b, _ = sp.lines[line_id].points
    basis = eigenspace_basis((a, b), signs)
    if len(basis) != 2:
        raise AssertionError(f"line {line_id}: eigenspace dimension {len(basis)}")
    return basis


Poly = tuple  # coefficients (c0, c1, c2) over Q(i), constant first

_FZERO = (Fraction(0), Fraction(0))


def _fc(g: GaussInt):
    return (Fraction(g[0]), Fraction(g[1]))


def _fadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _fsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _fmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _fdiv(a, b):
    d = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def _poly_deg(p: Poly) -> int:
    for d in range(len(p) - 1, -1, -1):
        if p[d] != _FZERO:
            return d
    return -1


def _poly_gcd(p: Poly, q: Poly) -> Poly:
    while _poly_deg(q) >= 0:
        dp, dq = _poly_deg(p), _poly_deg(q)
        if dp < dq:
            p, q = q, p
            continue
        # p -= (lead(p)/lead(q)) x^(dp-dq) q
        f = _fdiv(p[dp], q[dq])
        shift = dp - dq
        new = list(p)
        for i in range(dq + 1):
            new[i + shift] = _fsub(new[i + shift], _fmul(f, q[i]))
        p = tuple(new)
        if _poly_deg(p) < dq:
            p, q = q, p
    return p


def is_product_vector(v: Vector) -> bool:
    return not any(reduction_mixed(v, q) for q in range(3))


def span_contains_product(v0: Vector, v1: Vector) -> bool:
    """Does span{v0, v1} contain a product vector?  Exact decision via
    the common roots of the 2x2-minor quadratics of w(t) = v1 + t v0."""
    if is_product_vector(v0):
        return True
    polys: list[Poly] = []
    for q in range(3):
        rows: dict[int, list[int]] = {0: [], 1: []}
        for b in range(8):
            rows[(b >> q) & 1].append(b)
        for i in range(4):
            for j in range(i + 1, 4):
                bi0, bj0 = rows[0][i], rows[0][j]
                bi1, bj1 = rows[1][i], rows[1][j]
                # minor = w[bi0] w[bj1] - w[bj0] w[bi1], quadratic in t
                c = [_FZERO, _FZERO, _FZERO]
                for (s, pa) in ((1, (bi0, bj1)), (-1, (bj0, bi1))):
                    a0, a1 = _fc(v1[pa[0]]), _fc(v0[pa[0]])
                    b0, b1 = _fc(v1[pa[1]]), _fc(v0[pa[1]])
                    prod = [
                        _fmul(a0, b0),
                        _fadd(_fmul(a0, b1), _fmul(a1, b0)),
                        _fmul(a1, b1),
                    ]
                    for d in range(3):
                        term = prod[d] if s > 0 else (-prod[d][0], -prod[d][1])
                        c[d] = _fadd(c[d], term)
                poly = tuple(c)
                if _poly_deg(poly) >= 0:
                    polys.append(poly)
    if not polys:
        return True  # every minor vanishes identically: all members product
    g = polys[0]
    for p in polys[1:]:
        g = _poly_gcd(g, p)
        if _poly_deg(g) <= 0:
            return False
    return _poly_deg(g) >= 1


@lru_cache(maxsize=2)
def line_entanglement(criterion: str = "A") -> np.ndarray:
    """Per-line booleans under the selected criterion.

    A: no common eigenspace vector is a product state (exact test on
       the (+,+) sector; sectors are related by local Paulis).
    B: some qubit slot carries two distinct non-identity letters across
       the line's three operators.
    """
    sp = shared_space()
    out = np.zeros(len(sp.lines), dtype=bool)
    if criterion == "A":
        for li in range(len(sp.lines)):
            v0, v1 = line_eigenspace(sp, li)
            out[li] = not span_contains_product(v0, v1)
    elif criterion == "B":
        for li, ln in enumerate(sp.lines):
            ent = False
            for q in range(3):
                letters = {pauli.letter_code(p, q) for p in ln.points} - {0}
                if len(letters) >= 2:
                    ent = True
            out[li] = ent
    else:
        raise ValueError(f"unknown criterion {criterion!r}")
    return out


def edge3_entangled(sp: Space, line_id: int, criterion: str = "A") -> bool:
    return bool(line_entanglement(criterion)[line_id])


# ---------------------------------------------------------------------------
# aggregation: entanglement strings
# ---------------------------------------------------------------------------

def pentagram_entangled_counts(census) -> np.ndarray:
    ent = edge_entanglement()
    ids = np.array([p.edge_ids for p in census.pentagrams], dtype=np.int32)
    return ent[ids].sum(axis=1).astype(np.int8)


def pentagram_strings(census, selector=None) -> dict[int, tuple[int, ...]]:
    """{type: histogram g0..g5} over the selected pentagrams."""
    counts = pentagram_entangled_counts(census)
    sel = np.ones(len(census), dtype=bool) if selector is None else selector
    out = {}
    for t in (1, 2, 3):
        mask = sel & (census.types == t)
        hist = np.bincount(counts[mask], minlength=6)
        out[t] = tuple(int(x) for x in hist[:6])
    return out


def wa_entangled_counts(census, tri_census, criterion: str = "A") -> np.ndarray:
    ent = line_entanglement(criterion)
    out = np.zeros(len(census), dtype=np.int8)
    for i, c in enumerate(census.configs):
        out[i] = int(ent[list(c.line_ids(tri_census.triangles))].sum())
    return out


def wa_strings(
    census, tri_census, criterion: str = "A", selector=None, counts=None
) -> dict[int, tuple[int, ...]]:
    """{type: histogram g0..g12} over selected configurations.

    The reference strings stop at g8; whether counts above eight occur
    at all is criterion-dependent, so the full histogram is returned
    and comparisons are made with matches_reference_string().
    """
    if counts is None:
        counts = wa_entangled_counts(census, tri_census, criterion)
    sel = np.ones(len(census), dtype=bool) if selector is None else selector
    out = {}
    for t, m in ((1, 7), (2, 5), (3, 3), (4, 1)):
        mask = sel & (census.minus == m)
        hist = np.bincount(counts[mask], minlength=13)
        out[t] = tuple(int(x) for x in hist[:13])
    return out


def matches_reference_string(hist: tuple[int, ...], ref9: tuple[int, ...]) -> bool:
    return tuple(hist[:9]) == tuple(ref9) and not any(hist[9:])


# ---------------------------------------------------------------------------
# the no-W property
# ---------------------------------------------------------------------------

class AppendixReport(NamedTuple):
    pairs_checked: int
    samples_per_sector: int
    class_counts: dict
    w_found: bool


def appendix_property_check(
    pairs: Iterable[tuple[int, int]], samples: int, seed: int = 0
) -> AppendixReport:
    """Sample exact vectors from every common eigenspace of each
    commuting pair and verify none is W-class."""
    rng = random.Random(seed)
    counts: dict[str, int] = {}
    npairs = 0
    for (u1, u2) in pairs:
        if u1 == u2 or u1 == 0 or u2 == 0:
            raise ValueError("pairs must be distinct non-identity observables")
        if not pauli.commutes(u1, u2):
            raise ValueError("operators do not commute")
        npairs += 1
        for s1, s2 in itertools.product((1, -1), repeat=2):
            basis = eigenspace_basis((u1, u2), (s1, s2))
            for _ in range(samples):
                while True:
                    coeffs = [
                        (rng.randint(-9, 9), rng.randint(-9, 9)) for _ in basis
                    ]
                    v = [0j] * 8
                    w = [(0, 0)] * 8
                    for (cr, ci), bvec in zip(coeffs, basis):
                        for b in range(8):
                            pr, pi = _cmul_i((cr, ci), bvec[b])
                            w[b] = (w[b][0] + pr, w[b][1] + pi)
                    if not is_zero(tuple(w)):
                        break
                cls = classify_state(tuple(w))
                counts[cls] = counts.get(cls, 0) + 1
    return AppendixReport(npairs, samples, counts, counts.get("W", 0) > 0)


def identity_free_commuting_pairs() -> list[tuple[int, int]]:
    ident_free = [
        a for a in pauli.OBSERVABLES
        if all(pauli.letter_code(a, q) != 0 for q in range(3))
    ]
    return [
        (a, b)
        for a, b in itertools.combinations(ident_free, 2)
        if pauli.commutes(a, b)
    ]
