"""Lazy, cache-aware assembly of every census artifact.

One Pipeline instance wires together the substrate, the hexagon, its
hyperplane orbits, the pentagram and WA censuses and the entanglement
tables, loading from the cache when possible and computing (then
storing) otherwise.
"""
from __future__ import annotations

import random
from functools import cached_property

import numpy as np

from . import entangle, groups, hexagon as hexmod, magic, refdata
from .cache import Cache
from .space import space as shared_space


class Pipeline:
    def __init__(self, cache: Cache | None = None, threads: int = 1, checkpoint: str | None = None):
        self.cache = cache or Cache(enabled=False)
        self.threads = threads
        self.checkpoint = checkpoint

    @cached_property
    def space(self):
        return shared_space()

    @cached_property
    def hexagon(self) -> hexmod.Hexagon:
        def build():
            return hexmod.build_classical(self.space)

        def encode(hx):
            return {"lines": [list(l) for l in hx.lines]}

        def decode(payload):
            hx = hexmod.Hexagon(self.space, [tuple(l) for l in payload["lines"]])
            # cheap sanity; the expensive validation ran when it was built
            if len(hx.lines) != 63 or any(
                len(hx.lines_through[p]) != 3 for p in self.space.points
            ):
                raise ValueError("cached hexagon is not 3-regular")
            hx.embedding_class = "classical"
            return hx

        return self.cache.get("hexagon", build, encode, decode)

    @cached_property
    def hyperplanes(self) -> list[int]:
        return hexmod.enumerate_hyperplanes(self.hexagon)

    @cached_property
    def hexagon_group(self) -> groups.PermGroup:
        def build():
            return hexmod.hexagon_group(self.space, self.hexagon)

        def encode(g):
            return {"generators": [list(map(int, p)) for p in g.generators]}

        def decode(payload):
            g = groups.PermGroup([np.array(p, dtype=np.uint8) for p in payload["generators"]])
            if g.order() != refdata.HEXAGON_AUT_ORDER:
                raise ValueError("cached generators have wrong closure order")
            return g

        return self.cache.get("hexagon_group", build, encode, decode)

    @cached_property
    def orbit_records(self) -> list[hexmod.OrbitRecord]:
        def build():
            return hexmod.classify_hyperplane_orbits(
                self.hexagon, self.hyperplanes, self.hexagon_group
            )

        def encode(records):
            labels = [""] * len(self.hyperplanes)
            for rec in records:
                for m in rec.members:
                    labels[m] = rec.label
            return {"labels": labels}

        def decode(payload):
            labels = payload["labels"]
            if len(labels) != len(self.hyperplanes) or set(labels) != set(refdata.TABLE1):
                raise ValueError("stale orbit labels")
            members: dict[str, list[int]] = {}
            for i, lab in enumerate(labels):
                members.setdefault(lab, []).append(i)
            records = []
            for lab, mem in members.items():
                exp = refdata.TABLE1[lab]
                rep = self.hyperplanes[mem[0]]
                prof, nlines, _ = hexmod.hyperplane_profile(self.hexagon, rep)
                if (prof.n, (prof.n0, prof.n1, prof.n2, prof.n3), len(mem)) != (
                    exp.pts,
                    exp.profile,
                    exp.copies,
                ):
                    raise ValueError(f"cached orbit {lab} fails verification")
                records.append(
                    hexmod.OrbitRecord(
                        label=lab,
                        cls=exp.cls,
                        profile=prof,
                        lines=nlines,
                        deep_points=prof.n3,
                        size=len(mem),
                        stabilizer_order=refdata.HEXAGON_AUT_ORDER // len(mem),
                        rep_mask=rep,
                        members=tuple(mem),
                        deep_components=hexmod.deep_point_components(self.hexagon, rep),
                        complement_name=None,
                    )
                )
            records.sort(key=lambda r: refdata.TABLE1_ORDER.index(r.label))
            return records

        return self.cache.get("orbit_labels", build, encode, decode)

    @cached_property
    def orbit_by_label(self) -> dict[str, hexmod.OrbitRecord]:
        return {r.label: r for r in self.orbit_records}

    @cached_property
    def nonrealizable_10_3(self):
        from . import graphs

        def build():
            return graphs.select_nonrealizable_10_3()

        def encode(cfg):
            return {"lines": [list(t) for t in cfg]}

        def decode(payload):
            cfg = tuple(tuple(t) for t in payload["lines"])
            deg: dict[int, int] = {}
            for t in cfg:
                for p in t:
                    deg[p] = deg.get(p, 0) + 1
            if len(cfg) != 10 or set(deg.values()) != {3}:
                raise ValueError("cached 10_3 fails its axioms")
            return cfg

        return self.cache.get("nonrealizable_10_3", build, encode, decode)

    @cached_property
    def complement_names(self) -> dict[str, str | None]:
        from . import graphs

        levi = graphs.levi_of_10_3(self.nonrealizable_10_3)

        def build():
            out = {}
            for rec in self.orbit_records:
                _, name = hexmod.identify_complement(self.hexagon, rec.rep_mask, levi)
                out[rec.label] = name
            return out

        def encode(d):
            return {k: v for k, v in d.items()}

        def decode(payload):
            if set(payload) != {r.label for r in self.orbit_records}:
                raise ValueError("stale complement table")
            return dict(payload)

        return self.cache.get("complement_names", build, encode, decode)

    @cached_property
    def pentagrams(self) -> magic.PentagramCensus:
        def build():
            return magic.enumerate_pentagrams(self.space)

        def encode(census):
            return {"edges": [list(p.edge_ids) for p in census.pentagrams]}

        def decode(payload):
            sp = self.space
            pents = []
            for ids in payload["edges"]:
                ids = tuple(ids)
                m = 0
                neg = 0
                for e in ids:
                    m |= sp.edges[e].mask
                    neg += 1 if sp.edges[e].sign < 0 else 0
                pents.append(magic.Pentagram(ids, m, neg, magic._PENT_TYPE[neg]))
            if len(pents) != refdata.PENTAGRAM_TOTAL:
                raise ValueError("cached pentagram census has wrong size")
            return magic.PentagramCensus(pents)

        return self.cache.get("pentagrams", build, encode, decode)

    @cached_property
    def triangles(self) -> magic.TriangleCensus:
        return magic.triangle_census()

    @cached_property
    def wa_full(self) -> magic.WACensus:
        def build():
            return magic.enumerate_wa(
                threads=self.threads, checkpoint_path=self.checkpoint
            )

        def encode(census):
            return {
                "rows": [
                    list(c.triangle_ids) + list(c.gluing_line_ids) + [c.minus_lines]
                    for c in census.configs
                ]
            }

        def decode(payload):
            rows = np.array(payload["rows"], dtype=np.int32).reshape(-1, 7)
            return magic.WACensus(magic._rows_to_configs(self.triangles, rows))

        return self.cache.get("wa_full", build, encode, decode)

    @cached_property
    def edge_entanglement(self) -> np.ndarray:
        def build():
            return entangle.edge_entanglement()

        def encode(arr):
            return {"bits": "".join("1" if b else "0" for b in arr)}

        def decode(payload):
            return np.array([c == "1" for c in payload["bits"]], dtype=bool)

        return self.cache.get("edge_entanglement", build, encode, decode)

    def line_entanglement(self, criterion: str) -> np.ndarray:
        def build():
            return entangle.line_entanglement(criterion)

        def encode(arr):
            return {"bits": "".join("1" if b else "0" for b in arr)}

        def decode(payload):
            return np.array([c == "1" for c in payload["bits"]], dtype=bool)

        return self.cache.get(f"line_entanglement_{criterion}", build, encode, decode)

    @cached_property
    def sp6_2_order(self) -> int:
        def build():
            return groups.sp6_2().order()

        return self.cache.get("sp6_2_order", build, lambda v: {"order": v}, lambda p: int(p["order"]))

    # ------------------------------------------------------------------
    # copy selection
    # ------------------------------------------------------------------

    def select_copy(self, label: str, copy_seed: int = 0) -> int:
        """A reproducible copy of the orbit: the symmetric-elements copy
        for V3 (its canonical choice), else seeded over the orbit."""
        rec = self.orbit_by_label[label]
        if label == "V3":
            return self.space.symmetric_mask
        idx = random.Random(copy_seed).randrange(rec.size)
        return self.hyperplanes[rec.members[idx]]
