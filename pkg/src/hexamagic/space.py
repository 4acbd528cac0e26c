"""The symplectic polar space W(5,2) over the 63 observables.

Canonical orderings: lines, Fano planes and affine edges are sorted by
their member tuples ascending, so ids are stable across runs.  Point
sets are also carried as 63-bit masks (bit p-1 for observable p).
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, NamedTuple

from . import pauli

FULL_MASK = (1 << 63) - 1


def point_mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << (p - 1)
    return m


def mask_points(mask: int) -> list[int]:
    out = []
    while mask:
        bit = mask & -mask
        mask ^= bit
        out.append(bit.bit_length())
    return out


class Line(NamedTuple):
    points: tuple[int, int, int]
    sign: int
    mask: int


class FanoPlane(NamedTuple):
    points: tuple[int, ...]  # 7 points
    line_ids: tuple[int, ...]  # the 7 lines inside, ids into Space.lines
    mask: int


class AffineEdge(NamedTuple):
    points: tuple[int, int, int, int]
    sign: int
    plane_id: int
    removed_line_id: int
    mask: int


def product_sign(ops: Iterable[int]) -> int:
    """Sign of the product of a mutually commuting, GF(2)-closing set.

    Rejects sets that do not pairwise commute or whose GF(2) sum is
    nonzero (their product would not be proportional to the identity).
    """
    ops = list(ops)
    for a, b in itertools.combinations(set(ops), 2):
        if not pauli.commutes(a, b):
            raise ValueError(
                f"{pauli.format_label(a)} and {pauli.format_label(b)} do not commute"
            )
    acc = pauli.product(ops)
    if acc.body != 0:
        raise ValueError("operator set does not multiply to the identity")
    return acc.sign


class Space:
    """Points, lines, Fano planes, affine edges and perps of W(5,2)."""

    def __init__(self) -> None:
        self.points = pauli.OBSERVABLES

        self.perp_mask = [0] * 64  # indexed by observable
        for a in self.points:
            m = 0
            for b in self.points:
                if pauli.commutes(a, b):
                    m |= 1 << (b - 1)
            self.perp_mask[a] = m

        lines = []
        for a, b in itertools.combinations(self.points, 2):
            if pauli.commutes(a, b):
                c = a ^ b
                if c > b:
                    pts = (a, b, c)
                    lines.append(Line(pts, product_sign(pts), point_mask(pts)))
        lines.sort()
        self.lines = tuple(lines)
        self.line_id = {ln.points: i for i, ln in enumerate(self.lines)}
        self.line_id_by_mask = {ln.mask: i for i, ln in enumerate(self.lines)}

        plane_sets = set()
        for ln in self.lines:
            a, b, _ = ln.points
            joint = self.perp_mask[a] & self.perp_mask[b] & ~ln.mask
            for d in mask_points(joint):
                plane_sets.add(tuple(sorted({a, b, a ^ b, d, a ^ d, b ^ d, a ^ b ^ d})))
        planes = []
        for pts in sorted(plane_sets):
            inner = tuple(
                self.line_id[t]
                for t in itertools.combinations(pts, 3)
                if t in self.line_id
            )
            planes.append(FanoPlane(pts, inner, point_mask(pts)))
        self.fano_planes = tuple(planes)

        edges = []
        for pi, plane in enumerate(self.fano_planes):
            for li in plane.line_ids:
                ln = self.lines[li]
                pts = tuple(sorted(set(plane.points) - set(ln.points)))
                edges.append((pts, pi, li))
        edges.sort()
        self.edges = tuple(
            AffineEdge(pts, product_sign(pts), pi, li, point_mask(pts))
            for (pts, pi, li) in edges
        )

    def perp(self, a: int) -> set[int]:
        """The 31 observables commuting with a, a itself included."""
        return set(mask_points(self.perp_mask[a]))

    def line_of_pair(self, a: int, b: int) -> int:
        """Line id through two distinct commuting points."""
        return self.line_id[tuple(sorted((a, b, a ^ b)))]

    @property
    def symmetric_points(self) -> tuple[int, ...]:
        return tuple(a for a in self.points if pauli.is_symmetric(a))

    @property
    def symmetric_mask(self) -> int:
        return point_mask(self.symmetric_points)

    def symmetric_line_ids(self) -> tuple[int, ...]:
        """Lines all of whose points are symmetric observables."""
        sm = self.symmetric_mask
        return tuple(i for i, ln in enumerate(self.lines) if ln.mask & ~sm == 0)

    def edge_sign_counts(self) -> tuple[int, int]:
        plus = sum(1 for e in self.edges if e.sign > 0)
        return plus, len(self.edges) - plus


@lru_cache(maxsize=1)
def space() -> Space:
    """The shared, immutable substrate (built once per process)."""
    return Space()
