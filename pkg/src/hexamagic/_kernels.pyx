# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the two hot enumeration loops."""

import numpy as np

cimport cython
from libc.stdint cimport int8_t, int16_t, int32_t, int64_t, uint64_t

LANE = "compiled"

DEF NWORDS = 15  # 945 bits

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount64(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int trailing_zeros64(uint64_t x) nogil:
    return __builtin_ctzll(x)


def pentagram_cliques(object nbr_words_o, object edge_masks_o, object edge_minus_o):
    cdef uint64_t[:, ::1] nbr = np.ascontiguousarray(nbr_words_o, dtype=np.uint64)
    cdef int64_t[::1] masks = np.ascontiguousarray(edge_masks_o, dtype=np.int64)
    cdef int8_t[::1] minus = np.ascontiguousarray(edge_minus_o, dtype=np.int8)
    cdef int n = masks.shape[0]

    out_rows = []
    cdef uint64_t[5][NWORDS] cand      # candidate sets per depth
    cdef int32_t[5] stack
    cdef uint64_t[5] unions
    cdef int8_t[5] negs
    cdef int depth, i, j, w, base, nz
    cdef uint64_t word, bit, u2
    cdef int neg

    for i in range(n):
        stack[0] = i
        unions[0] = <uint64_t> masks[i]
        negs[0] = minus[i]
        # candidates: neighbors of i above i
        for w in range(NWORDS):
            cand[0][w] = nbr[i][w]
        for w in range(i // 64):
            cand[0][w] = 0
        cand[0][i // 64] &= ~((<uint64_t> 1 << (i % 64 + 1)) - 1) if (i % 64) < 63 else 0
        depth = 0
        # iterative DFS
        while depth >= 0:
            # find lowest candidate bit at current depth
            j = -1
            for w in range(NWORDS):
                word = cand[depth][w]
                if word:
                    bit = word & (~word + 1)
                    cand[depth][w] = word ^ bit
                    j = w * 64 + trailing_zeros64(word)
                    break
            if j < 0:
                depth -= 1
                continue
            u2 = unions[depth] | (<uint64_t> masks[j])
            neg = negs[depth] + minus[j]
            if depth == 3:
                if popcount64(u2) == 10 and (neg & 1):
                    out_rows.append((stack[0], stack[1], stack[2], stack[3], j))
            else:
                nz = 0
                for w in range(NWORDS):
                    cand[depth + 1][w] = cand[depth][w] & nbr[j][w]
                    if cand[depth + 1][w]:
                        nz = 1
                if nz:
                    depth += 1
                    stack[depth] = j
                    unions[depth] = u2
                    negs[depth] = <int8_t> neg
    return np.array(out_rows, dtype=np.int32).reshape(-1, 5)


def wa_triples(object apex_o, object mids_o, object tmask_o, object sminus_o,
               object perp_o, object line_minus_o, object tri_at_o, object line_id_o,
               object allowed_o, long long allowed_pmask=(1 << 63) - 1,
               int start=0, stop=None):
    cdef int32_t[::1] ap = np.ascontiguousarray(apex_o, dtype=np.int32)
    cdef int32_t[:, ::1] md = np.ascontiguousarray(mids_o, dtype=np.int32)
    cdef int64_t[::1] tm = np.ascontiguousarray(tmask_o, dtype=np.int64)
    cdef int8_t[::1] sm = np.ascontiguousarray(sminus_o, dtype=np.int8)
    cdef int64_t[::1] pp = np.ascontiguousarray(perp_o, dtype=np.int64)
    cdef int8_t[:, ::1] lm = np.ascontiguousarray(line_minus_o, dtype=np.int8)
    cdef int32_t[:, ::1] ta = np.ascontiguousarray(tri_at_o, dtype=np.int32)
    cdef int16_t[:, ::1] lid = np.ascontiguousarray(line_id_o, dtype=np.int16)
    cdef int32_t[::1] ids = np.ascontiguousarray(allowed_o, dtype=np.int32)
    cdef int nids = ids.shape[0]
    cdef int stop_i = nids if stop is None else <int> stop

    cdef int[6][3] perms6
    perms6[0][:] = [0, 1, 2]; perms6[1][:] = [0, 2, 1]; perms6[2][:] = [1, 0, 2]
    perms6[3][:] = [1, 2, 0]; perms6[4][:] = [2, 0, 1]; perms6[5][:] = [2, 1, 0]

    out_rows = []
    cdef int ii, jj, p, i, j, k
    cdef int a1, a2, a3, x1, y1, z1, x2, y2, z2, t1, t2, t3, g1, g2, g3, neg, lid3
    cdef int64_t m1, pa1, pa2, m12

    for ii in range(start, stop_i):
        i = ids[ii]
        a1 = ap[i]
        m1 = tm[i]
        x1 = md[i][0]; y1 = md[i][1]; z1 = md[i][2]
        pa1 = pp[a1]
        for jj in range(ii + 1, nids):
            j = ids[jj]
            if (m1 & tm[j]) or a1 == ap[j]:
                continue
            if not ((pa1 >> (md[j][0] - 1)) & 1 and (pa1 >> (md[j][1] - 1)) & 1):
                continue
            a2 = ap[j]
            pa2 = pp[a2]
            if not ((pa2 >> (x1 - 1)) & 1 and (pa2 >> (y1 - 1)) & 1):
                continue
            a3 = a1 ^ a2
            m12 = m1 | tm[j]
            for p in range(6):
                x2 = md[j][perms6[p][0]]; y2 = md[j][perms6[p][1]]; z2 = md[j][perms6[p][2]]
                if not ((pp[x1] >> (x2 - 1)) & 1):
                    continue
                if not ((pp[y1] >> (y2 - 1)) & 1):
                    continue
                if not ((pp[z1] >> (z2 - 1)) & 1):
                    continue
                t1 = x1 ^ x2; t2 = y1 ^ y2; t3 = z1 ^ z2
                if not ((pp[t1] >> (t2 - 1)) & 1):
                    continue
                lid3 = lid[t1][t2]
                k = ta[a3][lid3]
                if k < 0 or k <= j:
                    continue
                if tm[k] & m12:
                    continue
                if tm[k] & (~(<int64_t> allowed_pmask)):
                    continue
                g1 = lid[x1][x2]; g2 = lid[y1][y2]; g3 = lid[z1][z2]
                neg = sm[i] + sm[j] + sm[k] + lm[x1][x2] + lm[y1][y2] + lm[z1][z2]
                if neg & 1:
                    out_rows.append((i, j, k, g1, g2, g3, neg))
    return np.array(out_rows, dtype=np.int32).reshape(-1, 7)
