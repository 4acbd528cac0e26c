import numpy as np
import pytest

from hexamagic import groups, pauli
from hexamagic.space import space


@pytest.fixture(scope="module")
def sp62():
    return groups.sp6_2()


def test_sp62_order(sp62):
    assert sp62.order() == 1_451_520


def test_transvections_preserve_lines():
    sp = space()
    line_set = {ln.points for ln in sp.lines}
    for v in (1, 5, 23, 44, 63):
        t = groups.transvection(v)
        for ln in sp.lines[::13]:
            img = tuple(sorted(int(t[p]) for p in ln.points))
            assert img in line_set


def test_generators_preserve_commutation(sp62):
    for g in sp62.generators:
        for a in (1, 9, 30, 63):
            for b in (2, 17, 45):
                assert pauli.commutes(a, b) == pauli.commutes(int(g[a]), int(g[b]))


def test_transitive_on_points(sp62):
    orbit = sp62.orbit_of(1, groups.act_on_point)
    assert orbit == set(range(1, 64))


def test_orbit_sizes_divide_group_order(sp62):
    sp = space()
    orb = sp62.orbit_of(sp.lines[0].points, lambda g, l: tuple(sorted(int(g[p]) for p in l)))
    assert len(orb) == 315
    assert sp62.order() % len(orb) == 0


def test_orbits_partition(sp62):
    sp = space()
    parts = sp62.orbits(
        [ln.points for ln in sp.lines],
        lambda g, l: tuple(sorted(int(g[p]) for p in l)),
    )
    assert [len(p) for p in parts] == [315]


def test_full_line_set_stabilizer_is_whole_group(sp62):
    sp = space()
    stab = groups.line_set_stabilizer(sp62, [ln.points for ln in sp.lines])
    assert stab.orbit_size == 1
    assert stab.order() == sp62.order()


def test_symmetric_structure_stabilizer(sp62):
    sp = space()
    sym_lines = [sp.lines[li].points for li in sp.symmetric_line_ids()]
    stab = groups.line_set_stabilizer(sp62, sym_lines)
    assert stab.order() == 40_320


def test_compose_inverse():
    rng = np.random.default_rng(0)
    p = np.concatenate([[0], rng.permutation(np.arange(1, 64))]).astype(np.uint8)
    q = np.concatenate([[0], rng.permutation(np.arange(1, 64))]).astype(np.uint8)
    pq = groups.compose(p, q)
    x = 17
    assert pq[x] == p[q[x]]
    assert (groups.compose(p, groups.inverse(p)) == groups.identity_perm()).all()


def test_act_on_mask():
    t = groups.transvection(7)
    mask = (1 << (5 - 1)) | (1 << (40 - 1))
    img = groups.act_on_mask(t, mask)
    assert img == (1 << (int(t[5]) - 1)) | (1 << (int(t[40]) - 1))


def test_closure_rejects_cap():
    with pytest.raises(RuntimeError):
        groups.closure(groups.sp6_2_generators(), cap=1000)
