from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gammasym.connections import (
    L5_PRINTED_ISOTROPY_X3,
    ConnectionMap,
    curvature,
    equivariance_check,
    first_canonical,
    h3_flat_enumeration,
    heisenberg_flat_family,
    heisenberg_z22_split,
    in_flat_family,
    is_adapted,
    is_homogeneous,
    l5_connection,
    l5_printed_matrices,
    l5_scenario,
    l5_split,
    second_canonical,
    torsion,
    torsion_free_adapted_space,
    zero_connection,
)
from gammasym.gradings import Grading, GradingName, heisenberg_grading
from gammasym.lie import abelian
from gammasym.linalg import Matrix
from gammasym.metrics import isotropy_rep, reductive_split

from conftest import matrices, rationals

Z22_H3 = heisenberg_grading(GradingName.Z22, 1)
S_H3 = heisenberg_z22_split(1)


def h3_map(entries: dict) -> ConnectionMap:
    """entries: (i, j) -> vector, meaning Lam(X_i) X_j (1-based) in X coordinates."""
    cols = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
    for (i, j), v in entries.items():
        for r, x in enumerate(v):
            cols[i - 1][r][j - 1] = Fraction(x)
    return ConnectionMap(S_H3, tuple(Matrix(c) for c in cols))


def test_h3_split_uses_x_coordinates():
    assert S_H3.m_basis == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_isotropy_on_l5():
    s = l5_split()
    lam = isotropy_rep(s, (0, 0, 1, 0, 0))
    # [X3, X1] = -X4, so the standard sign sends the X1 coordinate to -X4
    assert lam == Matrix([[0, 0, 0], [0, 0, 0], [-1, 0, 0]])
    assert lam == L5_PRINTED_ISOTROPY_X3.scale(-1)
    assert isotropy_rep(s, (0, 0, 0, 0, 1)).is_zero()


def test_equivariance_trivial_h():
    c = h3_map({(1, 2): (0, 0, 7)})
    assert equivariance_check(c) == []


def test_equivariance_l5_family():
    # holds on the a = 0 slice of the printed family; see the l5 tests below for a != 0
    for params in [(0, 1, 2, 3, 4, 5), (0, -1, 0, 2, Fraction(1, 2), 3)]:
        assert equivariance_check(l5_connection(params)) == []
    c = l5_connection((0, 1, 2, 3, 4, 5))
    bumped = list(c.maps)
    bumped[0] = bumped[0] + Matrix([[0, 0, 0], [0, 0, 0], [0, 0, 1]])
    assert equivariance_check(ConnectionMap(c.split, tuple(bumped))) != []


def test_torsion_examples():
    t = torsion(zero_connection(S_H3))
    assert t[(0, 1)] == (0, 0, -1)
    assert torsion(second_canonical(S_H3)).is_zero()
    assert torsion(heisenberg_flat_family(1, [[5]])).is_zero()


def test_curvature_examples():
    assert curvature(zero_connection(reductive_split(heisenberg_grading(GradingName.Z22, 2)))).is_zero()
    assert curvature(heisenberg_flat_family(1, [[5]])).is_zero()


def test_canonical_connections():
    c1 = first_canonical(S_H3)
    assert torsion(c1)[(0, 1)] == (0, 0, -1)
    assert curvature(c1).is_zero()
    assert not torsion(c1).is_zero()
    c2 = second_canonical(S_H3)
    assert c2.apply(0, 1) == (0, 0, Fraction(1, 2))
    s5 = heisenberg_z22_split(2)
    assert torsion(first_canonical(s5))[(2, 3)] == (0, 0, 0, 0, -1)
    ab = reductive_split(Grading.z2(abelian(3), [], [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert torsion(first_canonical(ab)).is_zero() and curvature(first_canonical(ab)).is_zero()


def test_adapted_and_homogeneous():
    assert is_adapted(zero_connection(S_H3), Z22_H3)
    assert is_homogeneous(zero_connection(S_H3), Z22_H3)
    assert is_adapted(heisenberg_flat_family(1, [[3]]), Z22_H3)
    # Lam(X2) X1 = X1: label (+,-) times (-,+) is (-,-), not (-,+)
    assert not is_adapted(h3_map({(2, 1): (1, 0, 0)}), Z22_H3)
    assert not is_homogeneous(heisenberg_flat_family(1, [[1]]), Z22_H3)


def test_symmetric_case_canonical_is_adapted_and_homogeneous():
    G = heisenberg_grading(GradingName.CENTER, 2)
    c = second_canonical(reductive_split(G))
    assert c.maps == first_canonical(c.split).maps
    assert is_adapted(c, G) and is_homogeneous(c, G)


def test_split_mismatch_rejected():
    with pytest.raises(ValueError):
        is_adapted(zero_connection(S_H3), heisenberg_grading(GradingName.CENTER, 1))


def test_flat_family_examples():
    c = heisenberg_flat_family(1, [[5]])
    assert c.apply(0, 1) == (0, 0, 5)
    assert c.apply(1, 0) == (0, 0, 4)
    assert sum(1 for m in c.maps for r in m.rows for x in r if x) == 2
    z = heisenberg_flat_family(2, [[0, 0], [0, 0]])
    assert z.apply(1, 0) == (0, 0, 0, 0, -1)
    assert z.apply(3, 2) == (0, 0, 0, 0, -1)
    assert torsion(z).is_zero() and curvature(z).is_zero()
    with pytest.raises(ValueError):
        heisenberg_flat_family(0, [])


def test_torsion_free_space_h3():
    fam = torsion_free_adapted_space(Z22_H3)
    assert len(fam.directions) == 3
    assert torsion(fam.particular).is_zero()
    # C free, C' = C - 1, a_i = b_i (Lam(X1)X3 = Lam(X3)X1, Lam(X2)X3 = Lam(X3)X2)
    a1 = h3_map({(1, 3): (0, 1, 0), (3, 1): (0, 1, 0)})
    a2 = h3_map({(2, 3): (1, 0, 0), (3, 2): (1, 0, 0)})
    for C in (0, 5, Fraction(-7, 3)):
        base = heisenberg_flat_family(1, [[C]])
        assert fam.contains(base)
        assert fam.contains(base + a1.scale(2) + a2.scale(-1))
        assert torsion(base + a1 + a2).is_zero()
    assert not fam.contains(h3_map({(1, 3): (0, 1, 0)}) + heisenberg_flat_family(1, [[0]]))


def test_torsion_free_space_abelian_full_pattern():
    G = Grading.z2(abelian(2), [], [(1, 0), (0, 1)])
    fam = torsion_free_adapted_space(G, adapted=False)
    assert all(x == 0 for m in fam.particular.maps for r in m.rows for x in r)
    # Lam(X)Y = Lam(Y)X: a symmetric bilinear map into Q^2
    assert len(fam.directions) == 2 * 3
    for d in fam.directions:
        assert torsion(d).is_zero()


def test_torsion_free_space_contains_family_p2():
    fam = torsion_free_adapted_space(heisenberg_grading(GradingName.Z22, 2))
    for grid in ([[1, 2], [3, 4]], [[0, 0], [0, 0]], [[Fraction(1, 2), -1], [5, Fraction(2, 3)]]):
        assert fam.contains(heisenberg_flat_family(2, grid, fam.particular.split))


def test_h3_flat_enumeration():
    e = h3_flat_enumeration()
    assert e.matches_family
    assert len(e.branches) >= 1


def test_a_perturbations_are_not_flat():
    base = heisenberg_flat_family(1, [[5]])
    a1 = h3_map({(1, 3): (0, 1, 0), (3, 1): (0, 1, 0)})
    a2 = h3_map({(2, 3): (1, 0, 0), (3, 2): (1, 0, 0)})
    for pert in (a1, a2, a1 + a2):
        c = base + pert
        assert torsion(c).is_zero()
        assert not curvature(c).is_zero()
        assert not in_flat_family(c, 1)
    assert in_flat_family(base, 1)


def test_l5_printed_matrices_layout():
    m1, m2, m4 = l5_printed_matrices(2, 0, 0, 0, 0, 0)
    assert m1 == Matrix([[2, 0, 0], [0, 0, 0], [0, 0, 1]])
    assert m4 == Matrix([[0, 0, 0], [0, 0, 0], [-1, 0, 0]])


def test_l5_curvature_never_vanishes():
    rep = l5_scenario()
    assert rep.isotropy_matches_print == -1
    assert all(r.curvature_nonzero for r in rep.readings.values())
    zero = rep.readings[(False, 1, (0,) * 6)]
    assert zero.torsion_free and zero.equivariant


def test_l5_zero_map_curvature_is_isotropy():
    s = l5_split()
    R = curvature(zero_connection(s))
    assert R[(0, 1)] == isotropy_rep(s, (0, 0, 1, 0, 0)).scale(-1)
    assert not R[(0, 1)].is_zero()


def test_l5_torsion_at_a_nonzero():
    # columns reading: T(X1, X4) = a X4, so the printed family is torsion-free only at a = 0
    c = l5_connection((2, 0, 0, 0, 0, 0))
    assert torsion(c)[(0, 2)] == (0, 0, 2)
    assert not torsion(l5_connection((2, 0, 0, 0, 0, 0), transpose=True)).is_zero()
    assert torsion(l5_connection((0, 1, 2, 3, 4, 5))).is_zero()


# -- properties --------------------------------------------------------------

_SPLITS = [S_H3, l5_split(), reductive_split(heisenberg_grading(GradingName.CENTER, 1))]


@st.composite
def connections(draw):
    s = draw(st.sampled_from(_SPLITS))
    d = s.dim_m
    return ConnectionMap(s, tuple(draw(matrices(d, d, height=4)) for _ in range(d)))


@given(connections())
def test_torsion_and_curvature_antisymmetric(c):
    assert torsion(c).is_antisymmetric()
    assert curvature(c).is_antisymmetric()


def _grids(p: int):
    return st.lists(st.lists(rationals(), min_size=p, max_size=p), min_size=p, max_size=p)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
@settings(max_examples=5)
@given(data=st.data())
def test_flat_family_is_flat_and_adapted(p, data):
    grid = data.draw(_grids(p))
    G = heisenberg_grading(GradingName.Z22, p)
    c = heisenberg_flat_family(p, grid, reductive_split(G))
    assert torsion(c).is_zero()
    assert curvature(c).is_zero()
    assert is_adapted(c, G)


_FAM_H3 = torsion_free_adapted_space(Z22_H3)
_FAM_L5 = torsion_free_adapted_space(l5_split().grading)


@given(st.sampled_from([_FAM_H3, _FAM_L5]), st.data())
def test_torsion_free_members(fam, data):
    coeffs = data.draw(st.lists(rationals(), min_size=len(fam.directions), max_size=len(fam.directions)))
    c = fam.member(coeffs)
    assert torsion(c).is_zero()
    assert equivariance_check(c) == []
