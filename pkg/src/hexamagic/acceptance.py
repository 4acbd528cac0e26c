"""The acceptance suite: every headline count checked at zero tolerance.

Each criterion function returns (ok, detail).  run_all() executes them
in dependency order, timing each; the CLI's verify-all and the test
suite both drive this module so there is a single source of truth.
"""
from __future__ import annotations

import math
import random
import time
from typing import Callable, NamedTuple

import numpy as np

from . import entangle, graphs, groups, hexagon as hexmod, magic, pauli, refdata
from .pipeline import Pipeline
from .space import point_mask


class CriterionResult(NamedTuple):
    criterion: int
    name: str
    ok: bool
    hard: bool
    detail: str
    seconds: float


def c1_substrate(pl: Pipeline):
    sp = pl.space
    sub = {
        "points": len(sp.points),
        "lines": len(sp.lines),
        "fano": len(sp.fano_planes),
        "edges": len(sp.edges),
    }
    ok = sub == refdata.SUBSTRATE
    perps_ok = all(bin(sp.perp_mask[a]).count("1") == 31 for a in sp.points)
    sym_ok = (
        len(sp.symmetric_points) == refdata.SYMMETRIC_POINTS
        and len(sp.symmetric_line_ids()) == refdata.SYMMETRIC_LINES
    )
    ok = ok and perps_ok and sym_ok
    return ok, f"counts={sub} perps31={perps_ok} symmetric={sym_ok}"


def c2_hexagon(pl: Pipeline):
    report = hexmod.validate_hexagon(pl.space, pl.hexagon.lines)
    cls = hexmod.classify_embedding(pl.hexagon)
    ok = report.ok and cls == "classical"
    return ok, f"validator={report} embedding={cls}"


def c3_groups(pl: Pipeline):
    sp_order = pl.sp6_2_order
    g2_order = pl.hexagon_group.order()
    sym_pts = pl.space.symmetric_points
    idx = {p: i for i, p in enumerate(sym_pts)}
    blocks = [
        tuple(idx[p] for p in pl.space.lines[li].points)
        for li in pl.space.symmetric_line_ids()
    ]
    sym_aut = graphs.incidence_aut_order(len(sym_pts), blocks)

    pent = pl.pentagrams.pentagrams[0]
    g, colors = magic.pentagram_levi(pl.space, pent)
    pent_aut = graphs.graph_aut_order(g, colors)

    wa0 = pl.wa_full.configs[0]
    gw, cw = magic.wa_levi(pl.space, pl.triangles, wa0)
    wa_aut = graphs.graph_aut_order(gw, cw)

    ratios = (
        sp_order // pent_aut == refdata.HEXAGON_AUT_ORDER
        and sym_aut // pent_aut == 336
        and sp_order // wa_aut == 40320
    )
    ok = (
        sp_order == refdata.SP6_2_ORDER
        and g2_order == refdata.HEXAGON_AUT_ORDER
        and sym_aut == refdata.SYM35_STRUCTURE_AUT_ORDER
        and pent_aut == refdata.PENTAGRAM_AUT_ORDER
        and wa_aut == refdata.WA_AUT_ORDER
        and ratios
    )
    return ok, (
        f"|Sp(6,2)|={sp_order} |G2(2)|={g2_order} sym35={sym_aut} "
        f"pentagram_levi={pent_aut} wa_levi={wa_aut} ratios={ratios}"
    )


def c4_hyperplanes(pl: Pipeline):
    n = len(pl.hyperplanes)
    records = pl.orbit_records  # classification hard-asserts profile/size rows
    names = pl.complement_names
    cmp_ok = all(
        names[r.label] == refdata.TABLE1[r.label].complement
        for r in records
        if refdata.TABLE1[r.label].complement is not None
    )
    rank = hexmod.incidence_rank(pl.hexagon)
    deep_ok = all(r.deep_points == refdata.TABLE1[r.label].dpts for r in records)
    ok = (
        n == refdata.HYPERPLANE_TOTAL
        and len(records) == 25
        and cmp_ok
        and rank == refdata.INCIDENCE_RANK
        and deep_ok
    )
    return ok, f"hyperplanes={n} orbits={len(records)} rank={rank} complements={cmp_ok}"


def _per_copy_counts(masks: np.ndarray, hyps: list[int], members) -> np.ndarray:
    out = np.empty(len(members), dtype=np.int64)
    for i, m in enumerate(members):
        out[i] = int(((masks & ~np.int64(hyps[m])) == 0).sum())
    return out


def c5_pentagrams(pl: Pipeline):
    census = pl.pentagrams
    total_ok = len(census) == refdata.PENTAGRAM_TOTAL
    split_ok = census.type_split() == refdata.PENTAGRAM_TYPE_SPLIT

    problems = []
    bearing = []
    for rec in pl.orbit_records:
        counts = _per_copy_counts(census.masks, pl.hyperplanes, rec.members)
        const = counts.min() == counts.max()
        total = int(counts[0])
        if not const:
            problems.append(f"{rec.label}: totals vary")
        if rec.label in refdata.TABLE2:
            exp = refdata.TABLE2[rec.label]
            if total != exp.pents or rec.size * total != exp.product:
                problems.append(f"{rec.label}: total {total} (expected {exp.pents})")
        elif total != 0:
            problems.append(f"{rec.label}: unexpected pentagrams ({total})")
        if total:
            bearing.append((rec.label, refdata.TABLE1[rec.label].pts))
    smallest = min(bearing, key=lambda t: t[1])[0]
    if smallest != refdata.SMALLEST_PENTAGRAM_ORBIT:
        problems.append(f"smallest bearing orbit {smallest}")
    # the canonical symmetric copy must reproduce the reference split
    _, v3_split = census.count_within(pl.space.symmetric_mask)
    if v3_split != refdata.TABLE2["V3"].split:
        problems.append(f"V3 split {v3_split}")
    ok = total_ok and split_ok and not problems
    return ok, f"total={len(census)} split={census.type_split()} problems={problems or 'none'}"


def c6_wa(pl: Pipeline):
    ntri = len(pl.triangles)
    census = pl.wa_full
    problems = []
    if ntri != refdata.TRIANGLE_TOTAL:
        problems.append(f"triangles={ntri}")
    for rec in pl.orbit_records:
        counts = _per_copy_counts(census.masks, pl.hyperplanes, rec.members)
        total = int(counts[0])
        if counts.min() != counts.max():
            problems.append(f"{rec.label}: totals vary")
        if rec.label in refdata.TABLE3:
            if total != refdata.TABLE3[rec.label].was:
                problems.append(f"{rec.label}: {total}")
        elif total != 0:
            problems.append(f"{rec.label}: unexpected WAs ({total})")
    conjecture = len(census) == refdata.WA_CONJECTURED_TOTAL
    detail = (
        f"triangles={ntri} full={len(census)} "
        f"conjectured={refdata.WA_CONJECTURED_TOTAL} agreement={conjecture} "
        f"untyped={census.untyped_count()} problems={problems or 'none'}"
    )
    return not problems, detail


def c7_entanglement(pl: Pipeline):
    census = pl.pentagrams
    counts = entangle.pentagram_entangled_counts(census)
    hist = tuple(int(x) for x in np.bincount(counts, minlength=6)[:6])
    eq2_ok = hist == refdata.EQ2_HISTOGRAM

    strings = entangle.pentagram_strings(census)
    trivial_ok = all(strings[t] == refdata.TABLE4_TRIVIAL[t] for t in (1, 2, 3))

    unent = counts == 0
    n_unent = int(unent.sum())
    unent_ok = n_unent == refdata.UNENTANGLED_PENTAGRAM_TOTAL and bool(
        (census.types[unent] == 3).all()
    )

    pairs = [(ln.points[0], ln.points[1]) for ln in pl.space.lines]
    report = entangle.appendix_property_check(pairs, samples=5, seed=0)
    no_w = not report.w_found

    ok = eq2_ok and trivial_ok and unent_ok and no_w
    return ok, (
        f"histogram={hist} trivial_rows={trivial_ok} "
        f"unentangled={n_unent} no_W={no_w} classes={report.class_counts}"
    )


def c8_table5(pl: Pipeline):
    tc = pl.triangles
    census = pl.wa_full
    agreement = {}
    for crit in ("A", "B"):
        counts = entangle.wa_entangled_counts(census, tc, crit)
        first_match = 0
        some_copy = 0
        total = 0
        for (label, typ), expected in refdata.TABLE5_COPIES.items():
            rec = pl.orbit_by_label[label]
            total += 1
            found_first = found_any = False
            for pos, member in enumerate(rec.members):
                sel = census.within(pl.hyperplanes[member])
                strings = entangle.wa_strings(census, tc, crit, sel, counts=counts)
                if entangle.matches_reference_string(strings[typ], expected):
                    found_any = True
                    if pos == 0:
                        found_first = True
                    break
            first_match += found_first
            some_copy += found_any
        agreement[crit] = (first_match, some_copy, total)
    detail = "criterion-dependent; " + "; ".join(
        f"criterion {c}: first-copy {f}/{t}, some-copy {s}/{t} reference rows"
        for c, (f, s, t) in agreement.items()
    )
    return True, detail  # soft criterion: never hard-fails


def c9_derived(pl: Pipeline):
    sp = pl.space
    census = pl.pentagrams
    counts = entangle.pentagram_entangled_counts(census)

    type1 = [p for p in census.pentagrams if p.type == 1]
    cfg1 = magic.derived_config(sp, type1)
    dj = magic.disjointness_graph(type1)
    aut1 = graphs.graph_aut_order(dj)
    ok1 = (
        len(cfg1.points) == refdata.CONFIG_108["points"]
        and len(cfg1.blocks) == refdata.CONFIG_108["edges"]
        and cfg1.degree_spectrum == refdata.CONFIG_108["degrees"]
        and aut1 == refdata.CONFIG_108["disjointness_aut"]
    )

    five = [p for p, c in zip(census.pentagrams, counts) if c == 5]
    cfg2 = magic.derived_config(sp, five)
    idx = {p: i for i, p in enumerate(cfg2.points)}
    g2, col2 = graphs.levi_graph(
        len(cfg2.points), [tuple(idx[q] for q in b) for b in cfg2.blocks]
    )
    aut2 = graphs.graph_aut_order(g2, col2)
    ok2 = (
        len(cfg2.points) == refdata.CONFIG_216["points"]
        and len(cfg2.blocks) == refdata.CONFIG_216["edges"]
        and cfg2.degree_spectrum == refdata.CONFIG_216["degrees"]
        and aut2 == refdata.CONFIG_216["aut"]
        and len(five) == 216
    )

    ident_free = [
        a for a in pauli.OBSERVABLES
        if all(pauli.letter_code(a, q) != 0 for q in range(3))
    ]
    if_mask = point_mask(ident_free)
    blocks27 = sorted(
        {
            sp.edges[e].points
            for p in type1
            for e in p.edge_ids
            if sp.edges[e].mask & ~if_mask == 0
        }
    )
    deg = {}
    for b in blocks27:
        for q in b:
            deg[q] = deg.get(q, 0) + 1
    ok3 = (
        len(ident_free) == refdata.CONFIG_27["points"]
        and len(blocks27) == refdata.CONFIG_27["edges"]
        and set(deg.values()) == {refdata.CONFIG_27["point_degree"]}
        and len(deg) == 27
    )

    ok = ok1 and ok2 and ok3
    return ok, (
        f"108-set: pts={len(cfg1.points)} edges={len(cfg1.blocks)} "
        f"degrees={cfg1.degree_spectrum} aut={aut1}; "
        f"216-set: pts={len(cfg2.points)} edges={len(cfg2.blocks)} "
        f"degrees={cfg2.degree_spectrum} aut={aut2}; "
        f"27-set: edges={len(blocks27)} degree9={sorted(set(deg.values()))}"
    )


def c10_graph_facts(pl: Pipeline):
    cfg = pl.nonrealizable_10_3
    comp = graphs.collinearity_graph(10, cfg).complement()
    pet_ok = graphs.graph_isomorphic(comp, graphs.named_graph("petersen"))
    c5 = graphs.cycle_graph(5)
    a1, a2, bound = graphs.shannon_lower_bound(c5)
    shannon_ok = a1 == 2 and a2 == 5 and abs(bound - math.sqrt(5)) < 1e-12
    ok = pet_ok and shannon_ok
    return ok, f"petersen_complement={pet_ok} alpha={a1} alpha_square={a2}"


def c11_oracles(pl: Pipeline):
    dense = [None] + [pauli.dense_observable(a) for a in pauli.OBSERVABLES]
    mism = 0
    for a in pauli.OBSERVABLES:
        for b in pauli.OBSERVABLES:
            ab = dense[a] @ dense[b]
            if pauli.commutes(a, b) != np.allclose(ab, dense[b] @ dense[a]):
                mism += 1
            prod = pauli.mul(pauli.PhasedPauli(0, a), pauli.PhasedPauli(0, b))
            if not np.allclose(pauli.dense_matrix(prod), ab):
                mism += 1
    sp = pl.space
    rng = random.Random(42)
    agree = True
    for _ in range(1000):
        e = rng.randrange(len(sp.edges))
        signs = tuple(rng.choice((1, -1)) for _ in range(3))
        try:
            v = entangle.common_eigenvector(sp.edges[e].points[:3], signs)
        except ValueError:
            v = entangle.common_eigenvector(
                sp.edges[e].points[:3], (*signs[:2], -signs[2])
            )
        exact = entangle.classify_state(v)
        approx = entangle.classify_float(entangle.to_complex(v))
        if exact != approx:
            agree = False
    ok = mism == 0 and agree
    return ok, f"dense_mismatches={mism} classifier_agreement={agree}"


CRITERIA: list[tuple[int, str, Callable, bool]] = [
    (1, "substrate counts", c1_substrate, True),
    (2, "hexagon validation", c2_hexagon, True),
    (3, "group orders", c3_groups, True),
    (4, "hyperplane classification", c4_hyperplanes, True),
    (5, "pentagram census", c5_pentagrams, True),
    (6, "WA census", c6_wa, True),
    (7, "pentagram entanglement", c7_entanglement, True),
    (8, "WA entanglement strings", c8_table5, False),
    (9, "derived configurations", c9_derived, True),
    (10, "graph facts", c10_graph_facts, True),
    (11, "oracle equivalence", c11_oracles, True),
]


def run_all(pl: Pipeline, only: set[int] | None = None) -> list[CriterionResult]:
    results = []
    for num, name, fn, hard in CRITERIA:
        if only and num not in only:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn(pl)
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"exception: {exc!r}"
        results.append(CriterionResult(num, name, ok, hard, detail, time.perf_counter() - t0))
    return results
