from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qatlas.f2core import (
    ALL_THETAS,
    DimensionError,
    Subspace,
    Theta,
    arf,
    basis,
    gaussian_binomial,
    pairing,
    subspaces,
    theta_eval,
    theta_from_values,
    theta_sum3,
    theta_translate,
)

vec = st.integers(0, 63)
theta = vec.map(Theta)


def test_pairing_examples():
    e1, e2, e4 = basis(1), basis(2), basis(4)
    assert pairing(e1, e4) == 1
    assert pairing(e1, e2) == 0
    assert all(pairing(v, v) == 0 for v in range(64))


def test_pairing_matches_coordinate_formula():
    def bits(v):
        return [(v >> i) & 1 for i in range(6)]

    for u, v in product(range(64), repeat=2):
        a, b = bits(u), bits(v)
        want = (a[0] * b[3] + a[1] * b[4] + a[2] * b[5] + a[3] * b[0] + a[4] * b[1] + a[5] * b[2]) % 2
        assert pairing(u, v) == want == pairing(v, u)


@given(vec, vec, vec)
def test_pairing_bilinear(u, v, w):
    assert pairing(u ^ v, w) == pairing(u, w) ^ pairing(v, w)


def test_polarization_exhaustive():
    for t in ALL_THETAS:
        for u in range(64):
            tu = t(u)
            for v in range(64):
                assert t(u ^ v) ^ tu ^ t(v) == pairing(u, v)


def test_parity_census():
    odd = [t for t in ALL_THETAS if arf(t)]
    assert len(odd) == 28
    assert len(ALL_THETAS) - len(odd) == 36
    assert arf(Theta(0)) == 0


def test_theta_eval_two_formulas_agree():
    for t in ALL_THETAS:
        for v in range(64):
            assert theta_eval(t, v) == arf(theta_translate(t, v)) ^ arf(t) == t(v)


def test_odd_theta_vanishes_on_27_nonzero_vectors():
    for t in ALL_THETAS:
        if t.odd:
            assert sum(1 for v in range(1, 64) if t(v) == 0) == 27


def test_translation_is_free_transitive_involution():
    t0 = Theta(0)
    assert theta_translate(t0, 0) == t0
    assert {theta_translate(t0, v) for v in range(64)} == set(ALL_THETAS)
    for t in ALL_THETAS:
        for v in range(64):
            assert theta_translate(theta_translate(t, v), v) == t


@given(theta, vec)
def test_arf_translation_law(t, v):
    assert arf(theta_translate(t, v)) == arf(t) ^ theta_eval(t, v)


@given(theta, theta, theta)
def test_sum3_is_pointwise_sum(a, b, c):
    s = theta_sum3(a, b, c)
    assert all(s(v) == a(v) ^ b(v) ^ c(v) for v in range(64))


def test_sum3_idempotent_triple():
    assert all(theta_sum3(t, t, t) == t for t in ALL_THETAS)


def test_theta_from_values_roundtrip():
    for t in ALL_THETAS:
        assert theta_from_values(t(1 << i) for i in range(6)) == t


@pytest.mark.parametrize("k", range(7))
def test_subspace_counts_match_gaussian_binomial(k):
    subs = subspaces(k)
    assert len(subs) == gaussian_binomial(6, k)
    assert len({s.points for s in subs}) == len(subs)
    assert all(s.dim == k and len(s.points) == 2**k for s in subs)


def test_gaussian_binomial_values():
    assert [gaussian_binomial(6, k) for k in (1, 2, 3)] == [63, 651, 1395]


def test_isotropic_counts():
    assert len(subspaces(1, isotropic_only=True)) == 63
    assert len(subspaces(2, isotropic_only=True)) == 315
    assert len(subspaces(3, isotropic_only=True)) == 135
    assert subspaces(4, isotropic_only=True) == []


def test_subspaces_zero_dimension_and_order():
    assert [s.points for s in subspaces(0)] == [(0,)]
    ones = subspaces(1)
    assert [s.points for s in ones] == sorted(s.points for s in ones)


@pytest.mark.parametrize("k", [-1, 7])
def test_subspaces_dimension_error(k):
    with pytest.raises(DimensionError):
        subspaces(k)


@given(st.lists(vec, max_size=6))
def test_spanned_subspace_is_closed(vs):
    s = Subspace.spanned_by(vs)
    pts = set(s.points)
    assert all(a ^ b in pts for a in pts for b in pts)
    assert len(pts) == 2**s.dim
