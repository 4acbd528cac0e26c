import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from hexamagic import entangle, magic, pauli, refdata
from hexamagic.entangle import (
    classify_state,
    common_eigenvector,
    hyperdeterminant,
    inner_product,
    three_tangle,
)


def _ket(bits: str):
    idx = int(bits[::-1], 2)  # leftmost letter = qubit 0 = low bit
    return tuple((1, 0) if b == idx else (0, 0) for b in range(8))


def test_ghz_construction():
    gens = [pauli.parse_label(s) for s in ("XXX", "ZZI", "IZZ")]
    v = common_eigenvector(gens, (1, 1, 1))
    nz = {b: amp for b, amp in enumerate(v) if amp != (0, 0)}
    assert set(nz) == {0, 7}
    assert nz[0] == nz[7]
    assert classify_state(v) == "GHZ"
    assert three_tangle(v) == 1


def test_diagonal_stabilizer_gives_basis_state():
    gens = [pauli.parse_label(s) for s in ("ZII", "IZI", "ZZZ")]
    v = common_eigenvector(gens, (1, 1, 1))
    assert sum(1 for amp in v if amp != (0, 0)) == 1
    assert classify_state(v) == "product"


def test_empty_sector_raises_and_flip_recovers(sp):
    e = sp.edges[0]
    bad = None
    for signs in itertools.product((1, -1), repeat=3):
        prod_sign = e.sign
        try:
            common_eigenvector(e.points[:3], signs)
        except ValueError:
            bad = signs
            break
    # some sign pattern must be empty only when inconsistent with the
    # edge product sign; edge_eigenvector flips and always succeeds
    v = entangle.edge_eigenvector(sp, 0, (1, 1, 1))
    assert not entangle.is_zero(v)


def test_eight_sectors_give_orthonormal_basis(sp):
    rng = random.Random(61)
    for ei in rng.sample(range(len(sp.edges)), 10):
        pts = sp.edges[ei].points[:3]
        vecs = []
        for signs in itertools.product((1, -1), repeat=3):
            try:
                vecs.append(common_eigenvector(pts, signs))
            except ValueError:
                pass
        assert len(vecs) == 8
        for i, u in enumerate(vecs):
            for j, w in enumerate(vecs):
                ip = inner_product(u, w)
                if i != j:
                    assert ip == (0, 0)
                else:
                    assert ip[0] > 0 and ip[1] == 0


def test_sector_class_invariance(sp):
    rng = random.Random(67)
    for ei in rng.sample(range(len(sp.edges)), 25):
        pts = sp.edges[ei].points[:3]
        classes = set()
        for signs in itertools.product((1, -1), repeat=3):
            try:
                classes.add(classify_state(common_eigenvector(pts, signs)))
            except ValueError:
                pass
        assert len(classes) == 1


def test_three_tangle_reference_values():
    ghz = tuple((1, 0) if b in (0, 7) else (0, 0) for b in range(8))
    assert three_tangle(ghz) == 1
    assert three_tangle(_ket("000")) == 0
    w = tuple((1, 0) if b in (1, 2, 4) else (0, 0) for b in range(8))
    assert three_tangle(w) == 0
    assert all(entangle.reduction_mixed(w, q) for q in range(3))
    assert classify_state(w) == "W"


def test_three_tangle_normalization():
    ghz2 = tuple((2, 0) if b in (0, 7) else (0, 0) for b in range(8))
    assert three_tangle(ghz2) == 1
    half = tuple((1, 0) if b == 0 else ((3, 0) if b == 7 else (0, 0)) for b in range(8))
    # |000> + 3|111>: tau = 4*9/100
    assert three_tangle(half) == Fraction(9, 25)


def test_tangle_invariance_under_qubit_permutations(sp):
    rng = random.Random(71)
    perms = list(itertools.permutations(range(3)))
    for _ in range(40):
        v = tuple((rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(8))
        if entangle.is_zero(v):
            continue
        h0 = hyperdeterminant(v)
        ref = h0[0] * h0[0] + h0[1] * h0[1]
        for perm in perms:
            w = [None] * 8
            for b in range(8):
                nb = 0
                for q in range(3):
                    nb |= ((b >> q) & 1) << perm[q]
                w[nb] = v[b]
            h = hyperdeterminant(tuple(w))
            assert h[0] * h[0] + h[1] * h[1] == ref


def test_tangle_invariance_on_all_edge_eigenvectors(sp):
    # exhaustive: every edge eigenvector, all qubit permutations and a
    # set of local Paulis leave the tangle unchanged
    singles = [pauli.parse_label(s) for s in ("XII", "IXI", "IIX", "ZII", "IZI", "IIZ", "YII")]
    perms = list(itertools.permutations(range(3)))
    for ei in range(len(sp.edges)):
        v = entangle.edge_eigenvector(sp, ei)
        t0 = three_tangle(v)
        assert t0 in (0, 1)
        for g in singles:
            assert three_tangle(entangle.apply_operator(1, g, v)) == t0
        for perm in perms:
            w = [None] * 8
            for b in range(8):
                nb = 0
                for q in range(3):
                    nb |= ((b >> q) & 1) << perm[q]
                w[nb] = v[b]
            assert three_tangle(tuple(w)) == t0


def test_biseparable_example():
    # |0> x (|00> + |11>) on qubits B,C
    v = tuple((1, 0) if b in (0, 6) else (0, 0) for b in range(8))
    assert classify_state(v) == "biseparable-A"


def test_edges_never_w(sp):
    ent = entangle.edge_entanglement()
    assert len(ent) == 945
    assert int(ent.sum()) == 378


def test_eq2_histogram(pentagrams):
    counts = entangle.pentagram_entangled_counts(pentagrams)
    hist = tuple(int(x) for x in np.bincount(counts, minlength=6)[:6])
    assert hist == refdata.EQ2_HISTOGRAM
    assert hist == tuple(216 * k for k in (3, 17, 18, 14, 3, 1))


def test_table4_trivial_rows(pentagrams):
    strings = entangle.pentagram_strings(pentagrams)
    assert strings[1] == (0, 0, 0, 54, 0, 54)
    assert strings[2] == (0, 810, 972, 1836, 324, 162)
    assert strings[3] == (648, 2862, 2916, 1134, 324, 0)


def test_unentangled_pentagrams_are_type_3(pentagrams):
    counts = entangle.pentagram_entangled_counts(pentagrams)
    sel = counts == 0
    assert int(sel.sum()) == 648
    assert (pentagrams.types[sel] == 3).all()


def test_line_criteria_examples(sp):
    diag = sp.line_of_pair(pauli.parse_label("ZIZ"), pauli.parse_label("ZZI"))
    assert not entangle.edge3_entangled(sp, diag, "A")
    assert not entangle.edge3_entangled(sp, diag, "B")
    ent = sp.line_of_pair(pauli.parse_label("IZZ"), pauli.parse_label("XYX"))
    assert entangle.edge3_entangled(sp, ent, "A")
    assert entangle.edge3_entangled(sp, ent, "B")


def test_line_criteria_agree_everywhere(sp):
    a = entangle.line_entanglement("A")
    b = entangle.line_entanglement("B")
    assert (a == b).all()
    assert int(a.sum()) == 180


def test_unknown_criterion(sp):
    with pytest.raises(ValueError):
        entangle.line_entanglement("C")


def test_criterion_a_sector_independence(sp):
    rng = random.Random(79)
    for li in rng.sample(range(len(sp.lines)), 25):
        decisions = set()
        for signs in itertools.product((1, -1), repeat=2):
            v0, v1 = entangle.line_eigenspace(sp, li, signs)
            decisions.add(entangle.span_contains_product(v0, v1))
        assert len(decisions) == 1


def test_open_question_line(sp):
    # the reference treats (IXY, XXI, XIY) as entangled although its
    # eigenspaces admit a full product basis; both criteria here say no
    li = sp.line_of_pair(pauli.parse_label("IXY"), pauli.parse_label("XXI"))
    assert not entangle.edge3_entangled(sp, li, "A")
    assert not entangle.edge3_entangled(sp, li, "B")


def test_appendix_no_w_on_lines(sp):
    pairs = [(ln.points[0], ln.points[1]) for ln in sp.lines]
    report = entangle.appendix_property_check(pairs, samples=5, seed=1)
    assert not report.w_found
    assert report.pairs_checked == 315


def test_appendix_no_w_identity_free(sp):
    pairs = entangle.identity_free_commuting_pairs()
    assert all(
        all(pauli.letter_code(a, q) and pauli.letter_code(b, q) for q in range(3))
        for a, b in pairs
    )
    report = entangle.appendix_property_check(pairs, samples=5, seed=2)
    assert not report.w_found


def test_appendix_rejects_bad_pairs():
    with pytest.raises(ValueError):
        entangle.appendix_property_check([(1, 1)], samples=1)
    with pytest.raises(ValueError):
        entangle.appendix_property_check(
            [(pauli.parse_label("XII"), pauli.parse_label("ZII"))], samples=1
        )


def test_classifier_agrees_with_float_oracle(sp):
    rng = random.Random(83)
    for _ in range(300):
        ei = rng.randrange(len(sp.edges))
        signs = tuple(rng.choice((1, -1)) for _ in range(3))
        try:
            v = common_eigenvector(sp.edges[ei].points[:3], signs)
        except ValueError:
            v = common_eigenvector(sp.edges[ei].points[:3], (*signs[:2], -signs[2]))
        assert classify_state(v) == entangle.classify_float(entangle.to_complex(v))


def test_eigenvectors_verify(sp):
    rng = random.Random(89)
    for ei in rng.sample(range(len(sp.edges)), 20):
        e = sp.edges[ei]
        v = entangle.edge_eigenvector(sp, ei)
        # v is stabilized by all four edge operators with +/- signs
        for p in e.points:
            plus = entangle.apply_operator(1, p, v)
            minus = entangle.apply_operator(-1, p, v)
            assert plus == v or minus == v
