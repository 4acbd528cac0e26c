import random

import pytest

from hexamagic import hexagon as hx, refdata
from hexamagic.space import point_mask


def test_hexagon_basic(sp, hexagon):
    assert len(hexagon.lines) == 63
    assert all(len(hexagon.lines_through[p]) == 3 for p in sp.points)


def test_hexagon_incidence_graph(hexagon):
    inc = hexagon.incidence_graph()
    assert inc.girth() == 12
    assert inc.diameter() == 6


def test_validate_accepts_the_hexagon(sp, hexagon):
    report = hx.validate_hexagon(sp, hexagon.lines)
    assert report.ok and report.failed is None


def test_validate_rejects_random_lines(sp):
    rng = random.Random(23)
    lines = [sp.lines[i].points for i in rng.sample(range(315), 63)]
    report = hx.validate_hexagon(sp, lines)
    assert not report.ok
    assert report.failed in ("3-regularity", "girth", "diameter", "heawood")


def test_validate_rejects_truncation(sp):
    lines = [ln.points for ln in sp.lines[:63]]
    report = hx.validate_hexagon(sp, lines)
    assert not report.ok
    assert report.failed == "3-regularity"


def test_classify_embedding_classical(hexagon):
    assert hx.classify_embedding(hexagon) == "classical"


def test_classify_embedding_rejects_garbage(sp, hexagon):
    # a non-hexagon line set gives unrecognizable perp signatures
    broken = hx.Hexagon(sp, [ln.points for ln in sp.lines[:63]])
    with pytest.raises(hx.UnrecognizedEmbeddingError):
        hx.classify_embedding(broken)


def test_perp_profiles(sp, hexagon):
    for a in sp.points:
        prof, nlines, deep = hx.hyperplane_profile(hexagon, sp.perp_mask[a])
        assert prof == hx.Profile(31, 0, 24, 0, 7)
        assert nlines == 15
        assert bin(deep).count("1") == 7


def test_symmetric_set_profile(sp, hexagon):
    prof, nlines, _ = hx.hyperplane_profile(hexagon, sp.symmetric_mask)
    assert prof == hx.Profile(35, 0, 21, 0, 14)
    assert nlines == 21


def test_hyperplane_count_and_rank(pipeline):
    assert len(pipeline.hyperplanes) == 16_383
    assert hx.incidence_rank(pipeline.hexagon) == 49


def test_all_hyperplanes_satisfy_predicate(pipeline):
    hexn = pipeline.hexagon
    assert all(hx.is_hyperplane(hexn, h) for h in pipeline.hyperplanes)


def test_random_sets_fail_predicate(sp, pipeline):
    rng = random.Random(31)
    hyp_set = set(pipeline.hyperplanes)
    hexn = pipeline.hexagon
    failures = 0
    for _ in range(1000):
        mask = rng.getrandbits(63)
        if mask in hyp_set or mask == 0 or mask == point_mask(sp.points):
            continue
        if not hx.is_hyperplane(hexn, mask):
            failures += 1
        else:
            raise AssertionError("non-solution passed the hyperplane predicate")
    assert failures > 990


def test_perps_are_hyperplanes(sp, pipeline):
    hyp_set = set(pipeline.hyperplanes)
    for a in sp.points:
        assert sp.perp_mask[a] in hyp_set


def test_profile_identities(pipeline):
    rng = random.Random(37)
    hexn = pipeline.hexagon
    for i in rng.sample(range(16_383), 200):
        prof, nlines, deep = hx.hyperplane_profile(hexn, pipeline.hyperplanes[i])
        assert prof.n == prof.n0 + prof.n1 + prof.n2 + prof.n3
        assert prof.line_count == nlines
        assert bin(deep).count("1") == prof.n3


def test_orbits_match_reference_table(pipeline):
    records = pipeline.orbit_records
    assert len(records) == 25
    assert sum(r.size for r in records) == 16_383
    for rec in records:
        exp = refdata.TABLE1[rec.label]
        assert rec.profile.n == exp.pts
        assert (rec.profile.n0, rec.profile.n1, rec.profile.n2, rec.profile.n3) == exp.profile
        assert rec.lines == exp.lns
        assert rec.deep_points == exp.dpts
        assert rec.size == exp.copies
        assert rec.stabilizer_order == exp.stabilizer_order


def test_profile_constant_across_orbit(pipeline):
    rng = random.Random(41)
    hexn = pipeline.hexagon
    for rec in pipeline.orbit_records:
        sample = rng.sample(list(rec.members), min(10, rec.size))
        for i in sample:
            prof, _, _ = hx.hyperplane_profile(hexn, pipeline.hyperplanes[i])
            assert prof == rec.profile


def test_v24_v25_distinguished_by_size(pipeline):
    by_label = pipeline.orbit_by_label
    assert by_label["V24"].profile == by_label["V25"].profile
    assert by_label["V24"].size == 1512
    assert by_label["V25"].size == 2016


def test_perp_orbit_is_v6(sp, pipeline):
    hyp_index = {h: i for i, h in enumerate(pipeline.hyperplanes)}
    v6 = set(pipeline.orbit_by_label["V6"].members)
    for a in sp.points:
        assert hyp_index[sp.perp_mask[a]] in v6


def test_symmetric_copy_is_v3(sp, pipeline):
    hyp_index = {h: i for i, h in enumerate(pipeline.hyperplanes)}
    assert hyp_index[sp.symmetric_mask] in set(pipeline.orbit_by_label["V3"].members)


def test_complements_cubic_and_identified(pipeline):
    hexn = pipeline.hexagon
    names = pipeline.complement_names
    for rec in pipeline.orbit_records:
        g = hx.complement_graph(hexn, rec.rep_mask)
        assert g.n == 63 - rec.profile.n
        assert g.is_regular(3)
        assert names[rec.label] == refdata.TABLE1[rec.label].complement


def test_search_route_completes_punctured_hexagon(sp, hexagon):
    # drop lines from the known hexagon and let the backtracking
    # fallback re-complete it (a full search from scratch is too slow
    # for the test suite)
    seed = hexagon.lines[:53]
    rebuilt = hx.build_by_search(sp, seed_lines=seed)
    assert hx.validate_hexagon(sp, rebuilt.lines).ok
