"""Benchmark: compiled Cython kernels against the pure-Python fallback.

Runs the two hot enumeration loops (pentagram clique search, glued-
triangle scan) through both lanes, verifies they produce identical
output, and prints the timings.

    python benchmarks/bench_kernels.py [repeats]
"""
import sys
import time

import numpy as np

from hexamagic import _kernels_py, kernels
from hexamagic.magic import _edge_compat_arrays, triangle_census


def timed(fn, *args, repeats=1):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return out, best


def main() -> int:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    if not kernels.compiled_available():
        print("compiled extension not available; nothing to compare")
        return 1
    from hexamagic import _kernels

    print(f"active lane: {kernels.LANE}")
    words, masks, minus = _edge_compat_arrays()
    tc = triangle_census()
    wa_args = (
        tc.apex, tc.mids, tc.masks, tc.sminus, tc.perp,
        tc.line_minus_table, tc.tri_at, tc.line_id_table,
        np.arange(len(tc), dtype=np.int32),
    )

    rows = []
    for name, args in (
        ("pentagram 5-clique search (945 edges)", (words, masks, minus)),
        ("glued-triangle scan (3780 triangles)", wa_args),
    ):
        fn_c = _kernels.pentagram_cliques if "pentagram" in name else _kernels.wa_triples
        fn_p = _kernels_py.pentagram_cliques if "pentagram" in name else _kernels_py.wa_triples
        out_c, t_c = timed(fn_c, *args, repeats=repeats)
        out_p, t_p = timed(fn_p, *args, repeats=repeats)
        assert out_c.shape == out_p.shape and (out_c == out_p).all(), name
        rows.append((name, len(out_c), t_c, t_p))

    print(f"{'kernel':45s} {'results':>8s} {'compiled':>10s} {'pure':>10s} {'speedup':>8s}")
    for name, n, t_c, t_p in rows:
        print(f"{name:45s} {n:8d} {t_c:9.3f}s {t_p:9.3f}s {t_p / t_c:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
