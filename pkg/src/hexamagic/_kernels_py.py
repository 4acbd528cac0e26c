"""Pure-Python kernels: the hot enumeration loops.

Same array-in/array-out contracts as the compiled extension; the
bitsets arrive as packed uint64 words and are widened to Python ints
here, which is what CPython does fastest.
"""
from __future__ import annotations

import numpy as np

LANE = "pure"


def _words_to_int(row) -> int:
    out = 0
    for w, word in enumerate(row):
        out |= int(word) << (64 * w)
    return out


def pentagram_cliques(nbr_words: np.ndarray, edge_masks: np.ndarray, edge_minus: np.ndarray) -> np.ndarray:
    """5-cliques of the edge-compatibility graph forming magic pentagrams.

    A clique qualifies when the union of its edge vertex sets has
    exactly 10 points and the number of negative edges is odd.  Output
    rows (5 edge ids each) are in ascending lexicographic order.
    """
    n = len(edge_masks)
    nbr = [_words_to_int(nbr_words[i]) for i in range(n)]
    masks = [int(m) for m in edge_masks]
    minus = [int(m) for m in edge_minus]
    out: list[tuple[int, int, int, int, int]] = []

    def extend(stack: list[int], cand: int, union: int, neg: int) -> None:
        depth = len(stack)
        c = cand
        while c:
            bit = c & -c
            j = bit.bit_length() - 1
            c ^= bit
            u2 = union | masks[j]
            if depth == 4:
                if bin(u2).count("1") == 10 and (neg + minus[j]) & 1:
                    out.append((*stack, j))
            else:
                extend(stack + [j], c & nbr[j], u2, neg + minus[j])

    for i in range(n):
        above = nbr[i] >> (i + 1) << (i + 1)
        extend([i], above, masks[i], minus[i])
    return np.array(out, dtype=np.int32).reshape(-1, 5)


def wa_triples(
    apex: np.ndarray,
    mids: np.ndarray,
    tmask: np.ndarray,
    sminus: np.ndarray,
    perp: np.ndarray,
    line_minus: np.ndarray,
    tri_at: np.ndarray,
    line_id: np.ndarray,
    allowed: np.ndarray,
    allowed_pmask: int = (1 << 63) - 1,
    start: int = 0,
    stop: int | None = None,
) -> np.ndarray:
    """Glued-triangle (18_2, 12_3) configurations among the triangles
    listed in `allowed`, anchored on allowed[start:stop].

    Output rows: (t1, t2, t3, gluing line ids x3, negative line count),
    one per configuration with an odd number of negative lines, ordered
    by (t1, t2) scan order.
    """
    ap = [int(x) for x in apex]
    md = [tuple(int(x) for x in row) for row in mids]
    tm = [int(x) for x in tmask]
    sm = [int(x) for x in sminus]
    pp = [int(x) for x in perp]
    ids = [int(x) for x in allowed]
    if stop is None:
        stop = len(ids)
    out = []
    perms6 = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
    for ii in range(start, stop):
        i = ids[ii]
        a1 = ap[i]
        m1 = tm[i]
        x1, y1, z1 = md[i]
        pa1 = pp[a1]
        for jj in range(ii + 1, len(ids)):
            j = ids[jj]
            if m1 & tm[j] or a1 == ap[j]:
                continue
            mj = md[j]
            if not ((pa1 >> (mj[0] - 1)) & 1 and (pa1 >> (mj[1] - 1)) & 1):
                continue
            a2 = ap[j]
            pa2 = pp[a2]
            if not ((pa2 >> (x1 - 1)) & 1 and (pa2 >> (y1 - 1)) & 1):
                continue
            a3 = a1 ^ a2
            for pm in perms6:
                x2, y2, z2 = mj[pm[0]], mj[pm[1]], mj[pm[2]]
                if not ((pp[x1] >> (x2 - 1)) & 1):
                    continue
                if not ((pp[y1] >> (y2 - 1)) & 1):
                    continue
                if not ((pp[z1] >> (z2 - 1)) & 1):
                    continue
                t1, t2, t3 = x1 ^ x2, y1 ^ y2, z1 ^ z2
                if not ((pp[t1] >> (t2 - 1)) & 1):
                    continue
                lid3 = int(line_id[t1][t2])
                k = int(tri_at[a3][lid3])
                if k < 0 or k <= j:
                    continue
                if tm[k] & (m1 | tm[j]):
                    continue
                if tm[k] & ~allowed_pmask:
                    continue
                g1 = int(line_id[x1][x2])
                g2 = int(line_id[y1][y2])
                g3 = int(line_id[z1][z2])
                neg = (
                    sm[i] + sm[j] + sm[k]
                    + int(line_minus[x1][x2]) + int(line_minus[y1][y2]) + int(line_minus[z1][z2])
                )
                if neg & 1:
                    out.append((i, j, k, g1, g2, g3, neg))
    return np.array(out, dtype=np.int32).reshape(-1, 7)
