from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gammasym.aut_h3 import (
    I3,
    AutParams,
    Family,
    InvolutionTag,
    aut,
    aut_matrix,
    classify_involution,
    compose,
    conjugates_to,
    find_conjugator,
    gamma7,
    gamma8,
    gamma8_generators,
    group_closure,
    is_h3_automorphism,
    order,
    order_k_instance,
    sigma3_generators,
    tau,
    tau1,
    tau2,
    tau3,
    tau4,
)
from gammasym.linalg import Matrix

from conftest import nonzero_rationals, rationals


def test_aut_matrix_examples():
    assert aut_matrix(AutParams(1, 0, 0, 1, 0, 0)) == I3
    assert aut(-1, 0, 0, -1, 3, 5) == tau4(3, 5)
    u = aut(1, 1, 0, 1, 0, 0)
    assert is_h3_automorphism(u) and u != I3


def test_tau_examples():
    assert tau1(0, 0) == Matrix.diag(-1, 1, -1)
    assert tau4(3, 7) @ tau4(3, 7) == I3
    assert tau3(0, 1, 0) == Matrix([[0, 1, 0], [1, 0, 0], [0, 0, -1]])


def test_classify_examples():
    assert classify_involution(Matrix.diag(-1, -1, 1)) == InvolutionTag(Family.TAU4, (0, 0))
    assert classify_involution(I3).family is Family.IDENTITY
    assert classify_involution(tau1(2, 4)) == InvolutionTag(Family.TAU1, (2, 4))


def test_classify_rejects_non_involutions():
    with pytest.raises(ValueError):
        classify_involution(aut(1, 1, 0, 1, 0, 0))
    with pytest.raises(ValueError):
        classify_involution(Matrix.diag(1, 1, -1))


def test_tau3_requires_nonzero_a2():
    with pytest.raises(ValueError):
        InvolutionTag(Family.TAU3, (1, 0, 0))


def test_compose_examples():
    assert compose(tau1(2, 4), tau2(-2, 6)) == tau4(-10, -4)
    m = tau3(1, 2, 3)
    assert compose(m, I3) == m
    assert compose(tau4(1, 1), tau4(1, 1)) == I3


def test_group_closure_examples():
    g = group_closure([tau1(0, 0), tau2(0, 0)])
    assert g.as_set() == {I3, tau1(0, 0), tau2(0, 0), tau4(0, 0)}
    assert g.is_abelian and g.exponent == 2
    assert len(group_closure([I3])) == 1


def test_sigma3_example():
    s1, s2 = sigma3_generators(1)
    assert s1 @ s1 == I3
    assert s2 @ s2 @ s2 == I3
    assert s1 @ s2 @ s1 == s2 @ s2
    g = group_closure([s1, s2])
    assert len(g) == 6 and not g.is_abelian


def test_gamma7_examples():
    assert gamma7(0, 0, 0).as_set() == {I3, Matrix.diag(-1, 1, -1), Matrix.diag(1, -1, -1), Matrix.diag(-1, -1, 1)}
    g = gamma7(1, 1, 1)
    assert g.is_abelian and sorted(g.orders) == [1, 2, 2, 2]


def test_gamma8_examples():
    g = gamma8(0, 1, 0, 0)
    assert len(g) == 4 and g.exponent == 2
    a, b = gamma8_generators(0, 1, 2, 4)
    assert a @ b == tau4(2, -6)


def test_conjugacy_examples():
    g7 = gamma7(0, 0, 0)
    assert conjugates_to(I3, g7, g7)
    assert not conjugates_to(I3, g7, gamma8(0, 1, 0, 0))
    sigma = find_conjugator(g7, gamma8(0, 1, 0, 0))
    assert sigma is not None and is_h3_automorphism(sigma)
    assert conjugates_to(sigma, g7, gamma8(0, 1, 0, 0))


def test_order_k_examples():
    m = order_k_instance(3, 1, -1)
    assert m == Matrix([[-1, 1, 0], [-1, 0, 0], [0, 0, 1]])
    assert order(m) == 3
    m4 = order_k_instance(4, 1, -2)
    assert m4 is not None and order(m4) == 4
    assert order_k_instance(5, 1, -1) is None
    # discriminant not a square
    assert order_k_instance(4, 1, -3) is None


# -- properties --------------------------------------------------------------


@st.composite
def involution_tags(draw):
    fam = draw(st.sampled_from([Family.TAU1, Family.TAU2, Family.TAU3, Family.TAU4]))
    if fam is Family.TAU3:
        return InvolutionTag(fam, (draw(rationals()), draw(nonzero_rationals()), draw(rationals())))
    return InvolutionTag(fam, (draw(rationals()), draw(rationals())))


@given(involution_tags())
def test_tau_is_an_involutive_automorphism(tag):
    m = tau(tag)
    assert m @ m == I3
    assert is_h3_automorphism(m)


@given(involution_tags())
def test_classify_round_trip(tag):
    back = classify_involution(tau(tag))
    assert back == tag


@given(st.tuples(*[rationals(4, 3)] * 6).filter(lambda a: a[0] * a[3] != a[1] * a[2]))
def test_bottom_right_is_delta(a):
    m = aut(*a)
    assert m[2, 2] == a[0] * a[3] - a[1] * a[2]
    assert is_h3_automorphism(m)
    assert AutParams.of(m) == AutParams(*a)


@given(rationals(), rationals(), rationals())
def test_gamma7_klein(a3, a5, a6):
    g = gamma7(a3, a5, a6)
    assert len(g) == 4 and g.is_abelian and g.exponent == 2


@given(rationals(), nonzero_rationals(), rationals(), rationals())
def test_gamma8_klein(a1, a2, a6, a6p):
    g = gamma8(a1, a2, a6, a6p)
    assert len(g) == 4 and g.is_abelian and g.exponent == 2
    assert group_closure(gamma8_generators(a1, a2, a6, a6p)).as_set() == g.as_set()


@given(st.sampled_from([3, 4, 6]), rationals(3, 2), nonzero_rationals(3, 2), rationals(), rationals())
def test_order_k_has_exact_order(k, t, a2, a5, a6):
    c = {3: Fraction(-1, 2), 4: Fraction(0), 6: Fraction(1, 2)}[k]
    a3 = (c * c - 1 - t * t) / a2
    m = order_k_instance(k, a2, a3, a5, a6)
    assert m is not None and is_h3_automorphism(m)
    p = I3
    for j in range(1, k):
        p = p @ m
        assert p != I3
    assert p @ m == I3
