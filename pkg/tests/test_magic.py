import itertools
import random

from hexamagic import graphs, magic, refdata


def test_pentagram_census(pentagrams):
    assert len(pentagrams) == 12_096
    assert pentagrams.type_split() == (108, 4104, 7884)


def test_pentagram_structure(sp, pentagrams):
    rng = random.Random(43)
    for i in rng.sample(range(len(pentagrams)), 60):
        p = pentagrams.pentagrams[i]
        assert bin(p.mask).count("1") == 10
        point_degree = {}
        for e in p.edge_ids:
            for q in sp.edges[e].points:
                point_degree[q] = point_degree.get(q, 0) + 1
        assert set(point_degree.values()) == {2}
        for e1, e2 in itertools.combinations(p.edge_ids, 2):
            inter = sp.edges[e1].mask & sp.edges[e2].mask
            assert bin(inter).count("1") == 1
        assert p.minus_edges % 2 == 1


def test_pentagram_canonical_order(pentagrams):
    ids = [p.edge_ids for p in pentagrams.pentagrams]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)


def test_triangle_census(sp):
    tc = magic.triangle_census()
    assert len(tc) == 3780
    rng = random.Random(47)
    for i in rng.sample(range(len(tc)), 40):
        t = tc.triangles[i]
        plane = sp.fano_planes[t.plane_id]
        assert t.apex in plane.points
        midline = sp.lines[t.midline_id]
        assert t.apex not in midline.points
        assert t.midpoints == midline.points
        assert set(t.corners) == {t.apex ^ m for m in t.midpoints}
        # corners on two sides, midpoints on one
        on = {p: 0 for p in t.midpoints + t.corners}
        for sid in t.side_line_ids:
            for p in sp.lines[sid].points:
                on[p] += 1
        assert all(on[c] == 2 for c in t.corners)
        assert all(on[m] == 1 for m in t.midpoints)


def test_triangle_count_by_brute_force(sp):
    # (plane, apex, line avoiding the apex) triples
    total = 0
    for plane in sp.fano_planes:
        for apex in plane.points:
            for li in plane.line_ids:
                if apex not in sp.lines[li].points:
                    total += 1
    assert total == 3780


def test_wa_census_totals(wa_census):
    assert len(wa_census) == 40_320
    assert wa_census.type_split() == (1917, 12069, 18999, 7317)
    assert wa_census.untyped_count() == 18


def test_wa_structure(sp, wa_census):
    tc = magic.triangle_census()
    rng = random.Random(53)
    for i in rng.sample(range(len(wa_census)), 40):
        c = wa_census.configs[i]
        assert bin(c.mask).count("1") == 18
        lines = c.line_ids(tc.triangles)
        assert len(set(lines)) == 12
        deg = {}
        neg = 0
        for li in lines:
            ln = sp.lines[li]
            if ln.sign < 0:
                neg += 1
            for p in ln.points:
                deg[p] = deg.get(p, 0) + 1
        on_config = {p: d for p, d in deg.items() if (c.mask >> (p - 1)) & 1}
        assert set(on_config.values()) == {2}
        assert len(on_config) == 18
        assert neg == c.minus_lines
        assert neg % 2 == 1
        # pairwise line intersections at most one point
        for a, b in itertools.combinations(lines, 2):
            inter = sp.lines[a].mask & sp.lines[b].mask
            assert bin(inter).count("1") <= 1


def test_wa_triangles_in_perspective(sp, wa_census):
    tc = magic.triangle_census()
    rng = random.Random(59)
    for i in rng.sample(range(len(wa_census)), 30):
        c = wa_census.configs[i]
        t1, t2, t3 = (tc.triangles[k] for k in c.triangle_ids)
        assert t1.apex ^ t2.apex == t3.apex
        # each apex commutes with all nine midpoints
        from hexamagic import pauli

        mids = t1.midpoints + t2.midpoints + t3.midpoints
        for a in (t1.apex, t2.apex, t3.apex):
            assert all(pauli.commutes(a, m) for m in mids)


def test_pentagrams_within_table2(pipeline):
    census = pipeline.pentagrams
    for label, exp in refdata.TABLE2.items():
        if label == "trivial":
            assert len(census) == exp.pents
            continue
        rec = pipeline.orbit_by_label[label]
        total, _ = census.count_within(pipeline.hyperplanes[rec.members[0]])
        assert total == exp.pents
        assert rec.size * total == exp.product


def test_pentagrams_symmetric_copy_split(sp, pipeline):
    total, split = pipeline.pentagrams.count_within(sp.symmetric_mask)
    assert total == 336
    assert split == (2, 84, 250)


def test_no_pentagrams_outside_table2(pipeline):
    census = pipeline.pentagrams
    for rec in pipeline.orbit_records:
        if rec.label in refdata.TABLE2:
            continue
        total, _ = census.count_within(pipeline.hyperplanes[rec.members[0]])
        assert total == 0


def test_wa_within_table3(pipeline):
    census = pipeline.wa_full
    for label, exp in refdata.TABLE3.items():
        rec = pipeline.orbit_by_label[label]
        total, _ = census.count_within(pipeline.hyperplanes[rec.members[0]])
        assert total == exp.was
    # the symmetric-elements copy contains none
    total, _ = census.count_within(pipeline.space.symmetric_mask)
    assert total == 0


def test_wa_restricted_enumeration_matches_filter(pipeline):
    mask = pipeline.hyperplanes[pipeline.orbit_by_label["V4"].members[0]]
    sub = magic.enumerate_wa(within_mask=mask)
    assert len(sub) == 336
    full_sel = pipeline.wa_full.within(mask)
    assert int(full_sel.sum()) == len(sub)
    sub_keys = {(c.triangle_ids, c.gluing_line_ids) for c in sub.configs}
    full_keys = {
        (c.triangle_ids, c.gluing_line_ids)
        for c, keep in zip(pipeline.wa_full.configs, full_sel)
        if keep
    }
    assert sub_keys == full_keys


def test_wa_checkpoint_resume(tmp_path, pipeline):
    mask = pipeline.hyperplanes[pipeline.orbit_by_label["V10"].members[0]]
    ckpt = str(tmp_path / "wa.ckpt")
    first = magic.enumerate_wa(within_mask=mask, checkpoint_path=ckpt, n_chunks=4)
    resumed = magic.enumerate_wa(within_mask=mask, checkpoint_path=ckpt, n_chunks=4)
    assert [c.triangle_ids for c in first.configs] == [c.triangle_ids for c in resumed.configs]
    assert len(first) == 16


def test_derived_config_108(sp, pentagrams):
    type1 = [p for p in pentagrams.pentagrams if p.type == 1]
    cfg = magic.derived_config(sp, type1)
    assert len(cfg.points) == 36
    assert len(cfg.blocks) == 81
    assert cfg.degree_spectrum == (3, 11)
    dj = magic.disjointness_graph(type1)
    assert graphs.graph_aut_order(dj) == 324


def test_pentagram_levi_aut(sp, pentagrams):
    g, colors = magic.pentagram_levi(sp, pentagrams.pentagrams[0])
    assert g.n == 15
    assert graphs.graph_aut_order(g, colors) == 120


def test_wa_levi_aut(sp, wa_census):
    tc = magic.triangle_census()
    g, colors = magic.wa_levi(sp, tc, wa_census.configs[0])
    assert g.n == 30
    assert graphs.graph_aut_order(g, colors) == 36


def test_smallest_pentagram_orbit(pipeline):
    bearing = []
    for rec in pipeline.orbit_records:
        total, _ = pipeline.pentagrams.count_within(pipeline.hyperplanes[rec.members[0]])
        if total:
            bearing.append((rec.profile.n, rec.label))
    assert min(bearing)[1] == "V12"
