from fractions import Fraction

import pytest

from kmbranch import (Path, e_op, enumerate_ls_paths, f_op, h_profile, is_dominant_path,
                      plain_basis, reflect, reflect_path, straight_path, winding_construct)
from kmbranch.errors import IndexOutOfRange, NotDominantIntegral
from kmbranch.paths import apply_power, canonicalize, concat


def test_straight(A1, L1):
    p = straight_path(L1)
    assert p.segments == (L1,)
    assert p.endpoint == L1
    z = straight_path(A1.zero())
    assert z.segments == () and z.endpoint == A1.zero()


def test_canonicalize(A1, L1):
    half = Fraction(1, 2) * L1
    assert canonicalize([A1.zero(), half, L1]).segments == (L1,)
    assert canonicalize([A1.zero(), L1, L1]).segments == (L1,)
    bent = canonicalize([A1.zero(), L1, L1 - A1.simple_root(1)])
    assert len(bent) == 2
    with pytest.raises(ValueError):
        canonicalize([L1])


def test_concat(A1, L0, L1):
    assert concat(straight_path(L0), straight_path(L1)).endpoint == L0 + L1
    p = straight_path(L1)
    assert concat(p, straight_path(A1.zero())) == p
    assert concat(p, p).segments == (2 * L1,)


def test_reflect_path(A1, L1):
    b = plain_basis(A1)
    p = straight_path(L1)
    assert reflect_path(b, 1, reflect_path(b, 1, p)) == p
    assert reflect_path(b, 1, p) == straight_path(L1 - A1.simple_root(1))
    q = f_op(b, 0, straight_path(L1 - A1.simple_root(1)))
    for i in range(2):
        assert reflect_path(b, i, q).endpoint == reflect(b, i, q.endpoint)
    with pytest.raises(IndexOutOfRange):
        reflect_path(b, 2, p)


def test_f_on_straight(A1, L1):
    b = plain_basis(A1)
    prof = h_profile(b, 1, straight_path(L1))
    assert (prof.Q, prof.p, prof.x) == (0, 0, 1)
    assert f_op(b, 1, straight_path(L1)) == straight_path(L1 - A1.simple_root(1))
    assert f_op(b, 0, straight_path(L1)) is None


def test_f_splits_at_half(A1, L1):
    # hand computation: h_0 runs 0 -> 2 linearly, so the crossing h = 1 is at t = 1/2
    b = plain_basis(A1)
    nu = L1 - A1.simple_root(1)
    got = f_op(b, 0, straight_path(nu))
    d1 = Fraction(1, 2) * nu - A1.simple_root(0)
    d2 = Fraction(1, 2) * nu
    assert got.segments == (d1, d2)
    assert got.endpoint == nu - A1.simple_root(0)
    assert e_op(b, 0, got) == straight_path(nu)


def test_e_on_dominant(A1, A2):
    for A in (A1, A2):
        b = plain_basis(A)
        for lam in (A.fundamental(0), A.rho):
            for i in range(A.n):
                assert e_op(b, i, straight_path(lam)) is None


def test_e_inverts_f(A1, L1):
    b = plain_basis(A1)
    assert e_op(b, 1, f_op(b, 1, straight_path(L1))) == straight_path(L1)


def test_enumerate_small(A1, L0, L1):
    ps = enumerate_ls_paths(A1, L1, 0)
    assert set(ps) == {straight_path(L1), straight_path(L1 - A1.simple_root(1))}
    assert enumerate_ls_paths(A1, L0, 0) == [straight_path(L0)]
    with pytest.raises(NotDominantIntegral):
        enumerate_ls_paths(A1, A1.weight((2, -1)), 1)


def test_enumerate_zero(A1):
    assert [p.segments for p in enumerate_ls_paths(A1, A1.zero(), 3)] == [()]


def test_enumerate_deterministic(A2):
    lam = A2.weight((1, 1, 0))
    assert enumerate_ls_paths(A2, lam, 2) == enumerate_ls_paths(A2, lam, 2)


def test_dominant_path(A1, L0, L1):
    w = winding_construct(A1, 2)
    assert is_dominant_path(w, straight_path(A1.zero()))
    assert is_dominant_path(w, straight_path(L0))
    assert not is_dominant_path(w, straight_path(L1 - A1.simple_root(1)))


def _truncation(A, lam, depth):
    return enumerate_ls_paths(A, lam, depth)


@pytest.mark.parametrize("labels", [(1, 0), (0, 1), (1, 1)])
def test_operator_laws(A1, labels):
    lam = A1.weight(labels)
    b = plain_basis(A1)
    paths = _truncation(A1, lam, 2)
    bigger = set(_truncation(A1, lam, 3))
    for p in paths:
        for i in range(A1.n):
            prof = h_profile(b, i, p)
            assert prof.Q <= 0
            f = f_op(b, i, p)
            e = e_op(b, i, p)
            if f is not None:
                assert f.endpoint == p.endpoint - A1.simple_root(i)
                assert e_op(b, i, f) == p
                assert f in bigger
            if e is not None:
                assert e.endpoint == p.endpoint + A1.simple_root(i)
                assert f_op(b, i, e) == p
                assert e in bigger
            # string lengths
            nf, ne = prof.f_string, prof.e_string
            assert apply_power(f_op, b, i, p, nf) is not None
            assert apply_power(f_op, b, i, p, nf + 1) is None
            assert apply_power(e_op, b, i, p, ne) is not None
            assert apply_power(e_op, b, i, p, ne + 1) is None
