from collections import Counter
from itertools import combinations, permutations

import numpy as np
import pytest

from qatlas import structures as st
from qatlas.f2core import Theta, pairing, subspaces, theta_sum3


def test_parity_lists_partition_all_thetas():
    assert len(st.ODD) == 28 and len(st.EVEN) == 36
    assert set(st.ODD).isdisjoint(st.EVEN)
    assert len(set(st.ODD) | set(st.EVEN)) == 64
    assert list(st.ODD) == sorted(st.ODD)


def test_steiner_shape_and_double_definition():
    for v in range(1, 64):
        c = st.steiner_complex(v)
        assert len(c.members) == 12 and len(c.pairs) == 6
        assert all(a.shift ^ b.shift == v for a, b in c.pairs)
        assert frozenset(c.members) == st.steiner_from_fibre(v)


def test_steiner_incidence_27():
    inc = Counter(t for v in range(1, 64) for t in st.steiner_complex(v).members)
    assert set(inc) == set(st.ODD)
    assert set(inc.values()) == {27}


def test_steiner_zero_key_rejected():
    with pytest.raises(st.StructureError):
        st.steiner_complex(0)


def test_triad_census():
    kinds = Counter(st.triad_type(*t) for t in combinations(st.ODD, 3))
    assert kinds == {"syzygetic": 1260, "azygetic": 2016}


def test_triad_type_domain_errors():
    a, b = st.ODD[:2]
    with pytest.raises(st.StructureError):
        st.triad_type(a, a, b)
    with pytest.raises(st.StructureError):
        st.triad_type(a, b, st.EVEN[0])


def test_tetrads_syzygetic_and_oracle():
    tets = st.syzygetic_tetrads()
    brute = {frozenset(q) for q in combinations(st.ODD, 4)
             if q[0].shift ^ q[1].shift ^ q[2].shift ^ q[3].shift == 0}
    assert {frozenset(t.members) for t in tets} == brute
    assert len(tets) == 315
    for t in tets:
        assert all(st.triad_type(*tri) == "syzygetic" for tri in combinations(t.members, 3))


def test_tetrad_plane_base_independent_and_bijective():
    planes = set()
    for t in st.syzygetic_tetrads():
        ps = {st.tetrad_to_plane(t, base) for base in range(4)}
        assert len(ps) == 1
        p = ps.pop()
        assert p.dim == 2 and p.isotropic
        assert st.plane_to_tetrad(p) == t
        planes.add(p)
    assert planes == set(subspaces(2, isotropic_only=True))


def test_plane_to_tetrad_rejects_bad_planes():
    noniso = next(p for p in subspaces(2) if not p.isotropic)
    with pytest.raises(st.StructureError):
        st.plane_to_tetrad(noniso)
    with pytest.raises(st.StructureError):
        st.plane_to_tetrad(subspaces(3, isotropic_only=True)[0])


def test_gopel_subsets():
    gs = st.gopel_subsets()
    assert len(gs) == 135
    for g in gs:
        pts = set(g.points)
        assert len(pts) == 7 and 0 not in pts
        assert all(a ^ b in pts for a, b in combinations(pts, 2))
    for a, b in combinations(gs, 2):
        assert len(set(a.points) & set(b.points)) <= 3  # at most a plane in common


def test_azygetic_triads():
    az = st.azygetic_triads()
    assert len(az) == 336
    ordered = sum(1 for u in range(1, 64) for v in range(1, 64) if pairing(u, v))
    assert ordered == 2016 == 336 * 6
    for a in az:
        k = a.codes()
        assert len(k) == 3
        assert all(pairing(x, y) == 1 for x, y in combinations(k, 2))


def test_heptads_against_vectorized_brute_force():
    # every 7-subset of the 28 odd thetas, filtered by the triple-sum-even rule
    shifts = np.array([t.shift for t in st.ODD])
    q0 = np.array([Theta(w).odd for w in range(64)], dtype=bool)
    combos = np.array(list(combinations(range(28), 7)), dtype=np.int8)
    ok = np.ones(len(combos), dtype=bool)
    for i, j, k in combinations(range(7), 3):
        s = shifts[combos[:, i]] ^ shifts[combos[:, j]] ^ shifts[combos[:, k]]
        ok &= ~q0[s]
    brute = {tuple(int(shifts[x]) for x in row) for row in combos[ok]}
    assert brute == {h.codes() for h in st.aronhold_heptads()}
    assert len(brute) == 288


def test_heptad_properties():
    fib = st.heptad_fibres()
    assert len(fib) == 36 and all(len(v) == 8 for v in fib.values())
    for h in st.aronhold_heptads():
        assert all(st.triad_type(*tri) == "azygetic" for tri in combinations(h.members, 3))
        t0 = st.heptad_even_theta(h)
        assert not t0.odd
        unique = [e for e in st.EVEN
                  if all(theta_sum3(e, a, b).odd for a, b in combinations(h.members, 2))]
        assert unique == [t0]


def test_heptad_even_theta_rejects_non_heptad():
    bogus = st.AronholdHeptad(tuple(st.ODD[:7]))
    assert not st.is_heptad(bogus.members)
    with pytest.raises(st.StructureError):
        st.heptad_even_theta(bogus)


def test_octad_labeling_bijective_everywhere():
    for h in st.aronhold_heptads():
        lab = st.octad_labeling(h)
        assert len(lab) == 28
        assert set(lab.values()) == set(st.ODD)
        assert all(lab[(i, 8)] == h.members[i - 1] for i in range(1, 8))


def test_duad_triangles_are_azygetic():
    # observed class for {theta_ij, theta_jk, theta_ik}, uniform over all heptads
    seen = set()
    for h in st.aronhold_heptads():
        lab = st.octad_labeling(h)
        for i, j, k in combinations(range(1, 9), 3):
            seen.add(st.triad_type(lab[(i, j)], lab[(j, k)], lab[(i, k)]))
    assert seen == {"azygetic"}


def test_octad_labeling_equivariant_under_reindexing():
    h = st.aronhold_heptads()[17]
    lab = st.octad_labeling(h)
    t0 = st.heptad_even_theta(h)
    for perm in list(permutations(range(7)))[::500]:
        members = [h.members[p] for p in perm]
        for i, j in combinations(range(1, 8), 2):
            relabelled = theta_sum3(t0, members[i - 1], members[j - 1])
            a, b = sorted((perm[i - 1] + 1, perm[j - 1] + 1))
            assert relabelled == lab[(a, b)]
