"""Permutation groups on the 63 observables: Sp(6,2), stabilizers, orbits.

Permutations are numpy uint8 arrays of length 64 indexed by observable
(index 0 is fixed and unused).  Groups are materialized exhaustively by
breadth-first closure over their generators; at this scale (at most the
1 451 520 elements of Sp(6,2), 91 MB as a dense array) that is simpler
and more transparent than stabilizer-chain machinery.
"""
from __future__ import annotations

from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from . import pauli

SP6_2_ORDER = 1_451_520

# Word lists of transvections whose two products generate all of Sp(6,2)
# (verified by the closure order assertion in sp6_2()).
_GEN_WORDS = (
    (21, 61, 10, 26, 42, 4, 5, 53),
    (35, 7, 24, 38, 4, 59, 33, 14),
)


def identity_perm() -> np.ndarray:
    return np.arange(64, dtype=np.uint8)


def compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """(p o q)(x) = p(q(x))."""
    return p[q]


def inverse(p: np.ndarray) -> np.ndarray:
    out = np.empty(64, dtype=np.uint8)
    out[p] = identity_perm()
    return out


def transvection(v: int) -> np.ndarray:
    """w -> w + <w,v> v; the elementary symplectic map along v."""
    return np.array(
        [0] + [w ^ (v if pauli.symplectic_form(w, v) else 0) for w in pauli.OBSERVABLES],
        dtype=np.uint8,
    )


def _void_view(arr: np.ndarray) -> np.ndarray:
    return arr.view([("", "V64")]).ravel()


def closure(gens: Sequence[np.ndarray], cap: int = 2_000_000) -> np.ndarray:
    """All elements of <gens> as an (N, 64) array, lexicographically sorted."""
    seen = identity_perm()[None, :]
    seen_view = _void_view(seen)
    frontier = seen
    while len(frontier):
        cands = np.concatenate([frontier[:, g] for g in gens], axis=0)
        cands = np.unique(cands, axis=0)
        cv = _void_view(cands)
        pos = np.clip(np.searchsorted(seen_view, cv), 0, len(seen_view) - 1)
        frontier = cands[seen_view[pos] != cv]
        if len(frontier):
            seen = np.concatenate([seen, frontier], axis=0)
            seen = seen[np.argsort(_void_view(seen), kind="stable")]
            seen_view = _void_view(seen)
        if len(seen) > cap:
            raise RuntimeError(f"group closure exceeded cap {cap}")
    return seen


class PermGroup:
    """A permutation group given by generators, with exhaustive elements."""

    def __init__(self, generators: Sequence[np.ndarray]):
        self.generators = [np.asarray(g, dtype=np.uint8) for g in generators]
        self._elements: np.ndarray | None = None
        self.orbit_size: int | None = None  # set by line_set_stabilizer

    def elements(self) -> np.ndarray:
        if self._elements is None:
            self._elements = closure(self.generators)
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def contains(self, p: np.ndarray) -> bool:
        el = self.elements()
        view = _void_view(el)
        key = _void_view(np.asarray(p, dtype=np.uint8)[None, :])
        pos = np.searchsorted(view, key[0])
        return pos < len(view) and view[pos] == key[0]

    def orbit_of(self, item: Hashable, act: Callable) -> set:
        """Orbit of one item under the generator action act(perm, item)."""
        seen = {item}
        frontier = [item]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = act(g, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def orbits(self, items: Iterable[Hashable], act: Callable) -> list[list]:
        """Orbit partition of items (each orbit sorted, orbits by minimum)."""
        remaining = set(items)
        out = []
        for x in sorted(remaining):
            if x not in remaining:
                continue
            orb = self.orbit_of(x, act)
            if not orb <= set(remaining) | orb:
                raise ValueError("items are not closed under the group action")
            missing = orb - remaining
            if missing:
                raise ValueError(f"orbit leaves the item set: {sorted(missing)[:3]}")
            remaining -= orb
            out.append(sorted(orb))
        return out


def act_on_point(g: np.ndarray, p: int) -> int:
    return int(g[p])


def act_on_mask(g: np.ndarray, mask: int) -> int:
    out = 0
    while mask:
        bit = mask & -mask
        mask ^= bit
        out |= 1 << (int(g[bit.bit_length()]) - 1)
    return out


def act_on_line_set(g: np.ndarray, lineset: tuple) -> tuple:
    return tuple(
        sorted(tuple(sorted((int(g[a]), int(g[b]), int(g[c])))) for (a, b, c) in lineset)
    )


def sp6_2_generators() -> list[np.ndarray]:
    """Two products of transvections that together generate Sp(6,2)."""
    gens = []
    for word in _GEN_WORDS:
        r = transvection(word[0])
        for v in word[1:]:
            r = compose(r, transvection(v))
        gens.append(r)
    return gens


def sp6_2_generators_group() -> PermGroup:
    """Sp(6,2) as a lazy group (elements only materialized on demand)."""
    return PermGroup(sp6_2_generators())


def sp6_2() -> PermGroup:
    """The full symplectic group on the 63 observables, order 1 451 520.

    Generated by symplectic transvections; for closure speed two fixed
    transvection words are used as generators, and the resulting order
    is asserted.
    """
    G = sp6_2_generators_group()
    if G.order() != SP6_2_ORDER:
        raise AssertionError(f"Sp(6,2) closure gave {G.order()}")
    return G


def line_set_stabilizer(G: PermGroup, lines: Sequence[tuple]) -> PermGroup:
    """Setwise stabilizer in G of a set of point-triples.

    Computed by the orbit of the line set with Schreier generators, so
    it never materializes G itself.  The returned group's elements are
    the stabilizer, materialized exhaustively.
    """
    base = act_on_line_set(identity_perm(), tuple(lines))
    witness = {base: identity_perm()}
    frontier = [base]
    schreier: list[np.ndarray] = []
    while frontier:
        nxt = []
        for key in frontier:
            u = witness[key]
            for g in G.generators:
                gu = compose(g, u)
                k2 = act_on_line_set(gu, tuple(lines))
                if k2 not in witness:
                    witness[k2] = gu
                    nxt.append(k2)
                else:
                    s = compose(inverse(witness[k2]), gu)
                    schreier.append(s)
        frontier = nxt

    uniq = np.unique(np.stack(schreier), axis=0) if schreier else np.empty((0, 64))
    sub_gens: list[np.ndarray] = []
    sub = PermGroup([identity_perm()])
    for row in uniq:
        if sub.contains(row):
            continue
        sub_gens.append(row.copy())
        sub = PermGroup(sub_gens)
        sub.elements()
    stab = PermGroup(sub_gens if sub_gens else [identity_perm()])
    stab.orbit_size = len(witness)
    return stab
