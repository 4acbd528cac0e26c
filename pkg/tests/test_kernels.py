import numpy as np
import pytest

from hexamagic import kernels, magic
from hexamagic.magic import _edge_compat_arrays, triangle_census


pytestmark = pytest.mark.skipif(
    not kernels.compiled_available(), reason="compiled kernels not built"
)


def test_pentagram_kernels_agree():
    from hexamagic import _kernels, _kernels_py

    words, masks, minus = _edge_compat_arrays()
    compiled = _kernels.pentagram_cliques(words, masks, minus)
    pure = _kernels_py.pentagram_cliques(words, masks, minus)
    assert compiled.shape == pure.shape == (12_096, 5)
    assert (compiled == pure).all()


def test_wa_kernels_agree():
    from hexamagic import _kernels, _kernels_py

    tc = triangle_census()
    allowed = np.arange(len(tc), dtype=np.int32)
    args = (
        tc.apex, tc.mids, tc.masks, tc.sminus, tc.perp,
        tc.line_minus_table, tc.tri_at, tc.line_id_table, allowed,
    )
    compiled = _kernels.wa_triples(*args)
    pure = _kernels_py.wa_triples(*args)
    assert compiled.shape == pure.shape == (40_320, 7)
    assert (compiled == pure).all()


def test_wa_kernel_chunking_is_a_partition():
    from hexamagic import _kernels

    tc = triangle_census()
    allowed = np.arange(len(tc), dtype=np.int32)
    args = (
        tc.apex, tc.mids, tc.masks, tc.sminus, tc.perp,
        tc.line_minus_table, tc.tri_at, tc.line_id_table, allowed,
    )
    whole = _kernels.wa_triples(*args)
    mid = len(tc) // 2
    part1 = _kernels.wa_triples(*args, start=0, stop=mid)
    part2 = _kernels.wa_triples(*args, start=mid, stop=len(tc))
    stitched = np.concatenate([part1, part2], axis=0)
    assert (whole == stitched).all()
