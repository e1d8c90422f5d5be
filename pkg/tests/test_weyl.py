from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kmbranch import (Weight, dotted_basis, plain_basis, preset, reflect, signed_orbit_in_box,
                      to_dominant_signed, winding_construct)
from kmbranch.errors import IndexOutOfRange, NotInTitsCone, NotStrictlyDominant
from kmbranch.weyl import walk_parent_chain

from oracles import weyl_words


def test_plain_reflection(A1, L1):
    assert reflect(plain_basis(A1), 1, L1) == Weight((2, -1), 0)
    assert reflect(plain_basis(A1), 1, L1) == L1 - A1.simple_root(1)


def test_dotted_reflection(A1, L0, W2):
    b = dotted_basis(W2)
    assert b.value(L0, 0) == 2
    assert reflect(b, 0, L0) == L0 - 2 * W2.roots[0]


def test_delta_fixed(A1, A2):
    for A in (A1, A2):
        for i in range(A.n):
            assert reflect(plain_basis(A), i, A.delta) == A.delta


def test_index_check(A1):
    with pytest.raises(IndexOutOfRange):
        reflect(plain_basis(A1), 5, A1.rho)


@given(st.integers(0, 2), st.lists(st.integers(-4, 4), min_size=3, max_size=3), st.integers(-3, 3))
def test_reflection_is_involution(i, labels, d):
    A = preset("A2_1")
    for b in (plain_basis(A), dotted_basis(winding_construct(A, 2))):
        w = Weight(labels, d)
        assert reflect(b, i, reflect(b, i, w)) == w


def test_to_dominant():
    A = preset("A1_1")
    b = plain_basis(A)
    assert to_dominant_signed(b, Weight((1, 1))) == (Weight((1, 1)), 1, 0)
    dom, sign, length = to_dominant_signed(b, Weight((2, -1)))
    assert dom.labels == (0, 1) and sign == -1 and length == 1


def test_strict_wall_sign(A1, W2):
    b = dotted_basis(W2)
    # Lambda_1 - alpha_1 has dotted labels (3, -1), so adding rho' lands on the wall (4, 0)
    mu = A1.fundamental(1) - A1.simple_root(1) + W2.rho
    assert b.labels(mu) == (4, 0)
    dom, sign, _ = to_dominant_signed(b, mu, strict=True)
    assert sign == 0
    assert to_dominant_signed(b, mu)[1] == 1


def test_level_zero_not_in_tits_cone(A1):
    with pytest.raises(NotInTitsCone):
        to_dominant_signed(plain_basis(A1), Weight((1, -1)), max_steps=50)


def test_orbit_box_rho(A1):
    pts = signed_orbit_in_box(plain_basis(A1), A1.rho, (1, 1))
    got = {(p.weight, p.sign) for p in pts}
    assert got == {(A1.rho, 1), (A1.rho - A1.simple_root(0), -1), (A1.rho - A1.simple_root(1), -1)}


def test_orbit_zero_box(A1):
    pts = signed_orbit_in_box(plain_basis(A1), A1.rho, (0, 0))
    assert [p.weight for p in pts] == [A1.rho]


def test_orbit_needs_strict(A1):
    with pytest.raises(NotStrictlyDominant):
        signed_orbit_in_box(plain_basis(A1), A1.fundamental(0), (2, 2))


@pytest.mark.parametrize("name,labels,box", [("A1_1", (1, 1), (4, 4)), ("A1_1", (2, 1), (3, 3)),
                                             ("A2_1", (1, 1, 1), (2, 2, 2))])
def test_orbit_matches_word_brute_force(name, labels, box):
    A = preset(name)
    start = A.weight(labels)
    brute = weyl_words(A.cartan, tuple(start.labels) + (start.d,), 6)
    inside = {}
    for w, L in brute.items():
        k = A.root_coords(start - w)
        if all(x <= b for x, b in zip(k, box)):
            inside[w] = L
    pts = signed_orbit_in_box(plain_basis(A), start, box)
    assert max(p.length for p in pts) < 6
    assert {p.weight: p.length for p in pts} == inside
    assert all(p.sign == (-1) ** p.length for p in pts)


def test_parent_chain(A2):
    b = dotted_basis(winding_construct(A2, 2))
    start = b.algebra.weight((1, 1, 1))
    start = start + (winding_construct(A2, 2).rho - start)  # dotted rho
    pts = signed_orbit_in_box(b, start, (3, None, None))
    for p in pts:
        w, steps = walk_parent_chain(b, start, pts, p)
        assert w == p.weight and steps == p.length


@settings(max_examples=30, deadline=None)
@given(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.tuples(st.integers(0, 2), st.integers(0, 2)))
def test_pruning_stability(b1, extra):
    A = preset("A1_1")
    b2 = tuple(x + y for x, y in zip(b1, extra))
    basis = plain_basis(A)
    small = {p.weight: (p.sign, p.length) for p in signed_orbit_in_box(basis, A.rho, b1)}
    big = {p.weight: (p.sign, p.length) for p in signed_orbit_in_box(basis, A.rho, b2)}
    assert all(big.get(w) == v for w, v in small.items())


def test_orbit_sorted(A1):
    pts = signed_orbit_in_box(plain_basis(A1), A1.rho, (5, 5))
    keys = [(p.length, p.coords) for p in pts]
    assert keys == sorted(keys)
