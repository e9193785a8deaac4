from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gammasym.aut_h3 import H3, is_h3_automorphism
from gammasym.gradings import GradingName, heisenberg_grading
from gammasym.lie import abelian, bracket
from gammasym.linalg import Matrix, Signature, Subspace, signature
from gammasym.metrics import (
    CASE_II_NORMAL_FORM,
    LorentzTag,
    MetricKind,
    ReductiveSplit,
    SplitError,
    SymBilinearForm,
    case_ii_expansion,
    classify_metric,
    common_radical,
    dual_change_check,
    gamma7_dual_coframe,
    gamma7_frame,
    h3_form,
    h3_z22_grading,
    invariant_form_space,
    isotropy_rep,
    lorentzian_case1_witness,
    lorentzian_normal_form_h3,
    positive_definite,
    pullback,
    reductive_split,
    riemannian_invariant_h3,
)

from conftest import nonzero_rationals, rationals


def span(n, *idx):
    return Subspace.coordinate([i - 1 for i in idx], n)


def test_reductive_split_examples():
    s = reductive_split(h3_z22_grading())
    assert s.h.is_zero() and s.m == Subspace.full(3)
    s = reductive_split(heisenberg_grading(GradingName.CENTER, 1))
    assert s.h == span(3, 3) and s.m == span(3, 1, 2)


def test_split_validation():
    with pytest.raises(SplitError):
        ReductiveSplit(H3, span(3, 1), span(3, 1, 2))
    # [h, m] must stay in m
    with pytest.raises(SplitError):
        ReductiveSplit(H3, span(3, 1), Subspace.span([(0, 1, 0), (1, 0, 1)], 3))
    s = ReductiveSplit(abelian(2), span(2, 1), span(2, 2))
    assert s.dim_m == 1


def test_isotropy_examples():
    s = reductive_split(heisenberg_grading(GradingName.CENTER, 1))
    assert isotropy_rep(s, (0, 0, 1)).is_zero()
    assert isotropy_rep(s, (0, 0, 0)).is_zero()
    with pytest.raises(SplitError):
        isotropy_rep(s, (1, 0, 0))


def test_form_space_no_metric_case():
    s = reductive_split(heisenberg_grading(GradingName.H3_Z2_A))
    fs = invariant_form_space(s)
    assert fs.dim == 1
    # m = span{X1, X3}; the only invariant form is w1^2
    assert fs.basis[0] == Matrix([[1, 0], [0, 0]])
    assert common_radical(fs) == span(3, 3)


def test_form_space_center_case():
    s = reductive_split(heisenberg_grading(GradingName.CENTER, 1))
    fs = invariant_form_space(s)
    assert fs.dim == 3
    assert common_radical(fs).is_zero()


def test_form_space_with_orthogonality():
    G = h3_z22_grading()
    fs = invariant_form_space(reductive_split(G), orthogonality=G)
    assert fs.dim == 3
    assert all(b.is_diagonal() for b in fs.basis)


@pytest.mark.parametrize("p", [2, 3])
def test_radical_contains_center_for_2a_2b(p):
    for name in (GradingName.ODD, GradingName.EVEN):
        fs = invariant_form_space(reductive_split(heisenberg_grading(name, p)))
        assert common_radical(fs).contains(tuple(int(i == 2 * p) for i in range(2 * p + 1)))


@pytest.mark.parametrize("p", [1, 2, 3])
def test_metrics_exist_for_1a_1b(p):
    gradings = [heisenberg_grading(GradingName.CENTER, p)]
    gradings += [heisenberg_grading(GradingName.SUB, p, k) for k in range(1, p)]
    for G in gradings:
        s = reductive_split(G)
        fs = invariant_form_space(s)
        assert common_radical(fs).is_zero()
        assert fs.contains(Matrix.identity(s.dim_m))
        assert positive_definite(Matrix.identity(s.dim_m))


def test_classify_examples():
    G = h3_z22_grading()
    assert classify_metric(h3_form(Matrix.diag(1, 1, 4)), G).kind is MetricKind.RIEMANNIAN
    assert classify_metric(h3_form(Matrix.diag(-1, 1, 1)), G).kind is MetricKind.LORENTZIAN_I
    v = classify_metric(h3_form(CASE_II_NORMAL_FORM), G)
    assert v.kind is MetricKind.LORENTZIAN_II
    assert v.restrictions[(-1, -1)] == Signature(0, 0, 1)
    pair = h3_form(CASE_II_NORMAL_FORM).restrict(G[(-1, -1)] + G[(1, -1)])
    assert signature(pair) == Signature(1, 1, 0)
    assert classify_metric(h3_form(Matrix.diag(1, 0, 1)), G).kind is MetricKind.DEGENERATE
    assert str(classify_metric(h3_form(Matrix.diag(-1, -1, 1)), G)) == "PseudoRiemannian(1,2)"


def test_degenerate_noncentral_component_is_not_case_ii():
    G = h3_z22_grading()
    # degenerate on X1, partner X2
    B = h3_form(Matrix([[0, 1, 0], [1, -1, 0], [0, 0, 1]]))
    v = classify_metric(B, G)
    assert v.kind is MetricKind.PSEUDO and "note" in v.detail


def test_pullback_examples():
    B = h3_form(Matrix.diag(4, 9, 36))
    assert pullback(Matrix.identity(3), B).matrix == B.matrix
    tau = Matrix.diag(Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))
    assert pullback(tau, B).matrix == Matrix.identity(3)


def test_riemannian_examples():
    assert riemannian_invariant_h3(h3_form(Matrix.identity(3))).lambda_sq == 1
    nf = riemannian_invariant_h3(h3_form(Matrix.diag(4, 9, 36)))
    assert nf.lambda_sq == 1
    assert nf.witness == Matrix.diag(Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))
    assert riemannian_invariant_h3(h3_form(Matrix.diag(1, 1, 9))).lambda_sq == 9
    assert riemannian_invariant_h3(h3_form(Matrix.diag(2, 1, 1))).witness is None


def test_lorentzian_examples():
    nf = lorentzian_normal_form_h3(h3_form(Matrix.diag(-1, 1, 1)))
    assert (nf.tag, nf.lambda_sq) == (LorentzTag.NEG_ON_PLANE, 1)
    nf = lorentzian_normal_form_h3(h3_form(Matrix.diag(1, 1, -4)))
    assert (nf.tag, nf.lambda_sq) == (LorentzTag.NEG_ON_CENTER, 4)
    nf = lorentzian_normal_form_h3(h3_form(CASE_II_NORMAL_FORM))
    assert (nf.tag, nf.lambda_sq) == (LorentzTag.CASE_II, None)
    assert case_ii_expansion() == CASE_II_NORMAL_FORM
    with pytest.raises(ValueError):
        lorentzian_normal_form_h3(h3_form(Matrix.identity(3)))


@pytest.mark.parametrize("diag", [(-4, 9, 1), (4, -9, 1), (4, 9, -1), (1, -1, 16)])
def test_lorentzian_witness(diag):
    B = h3_form(Matrix.diag(*diag))
    w = lorentzian_case1_witness(B)
    assert w is not None and is_h3_automorphism(w)
    assert pullback(w, B).matrix == lorentzian_normal_form_h3(B).normal_form


def test_frame_examples():
    assert gamma7_frame(0, 0, 0) == Matrix.identity(3)
    assert gamma7_dual_coframe(0, 0, 0) == Matrix.identity(3)
    # theta_2 = w_2 + w_1 at a3 = 2
    assert gamma7_dual_coframe(2, 0, 0).rows[1] == (1, 1, 0)
    assert is_h3_automorphism(gamma7_dual_coframe(2, 4, 6))
    assert dual_change_check()


# -- properties --------------------------------------------------------------

_GRADINGS = [
    heisenberg_grading(GradingName.H3_Z2_A),
    heisenberg_grading(GradingName.CENTER, 1),
    heisenberg_grading(GradingName.ODD, 2),
    heisenberg_grading(GradingName.SUB, 2, 1),
    h3_z22_grading(),
]


@pytest.mark.parametrize("G", _GRADINGS)
def test_form_space_resubstitution(G):
    s = reductive_split(G)
    fs = invariant_form_space(s)
    for b in fs.basis:
        B = SymBilinearForm(b, s)
        for z in s.h.vectors:
            a = isotropy_rep(s, z)
            assert (a.T @ b + b @ a).is_zero()
        assert B.matrix.is_symmetric()


@given(st.sampled_from(_GRADINGS[:3]), st.data())
def test_radical_forces_degeneracy(G, data):
    fs = invariant_form_space(reductive_split(G))
    coeffs = data.draw(st.lists(rationals(), min_size=fs.dim, max_size=fs.dim))
    b = fs.combination(coeffs)
    if not common_radical(fs).is_zero():
        assert signature(b).null > 0


@given(st.tuples(*[nonzero_rationals()] * 3), nonzero_rationals(), nonzero_rationals())
def test_verdict_invariant_under_component_preserving_maps(d, a, b):
    G = h3_z22_grading()
    B = h3_form(Matrix.diag(*d))
    tau = Matrix.diag(a, b, a * b)
    assert classify_metric(pullback(tau, B), G).kind is classify_metric(B, G).kind


@given(st.tuples(*[rationals(6, 3).filter(lambda x: x > 0)] * 3), nonzero_rationals(), nonzero_rationals())
def test_lambda_sq_invariant(d, a, b):
    B = h3_form(Matrix.diag(*d))
    moved = pullback(Matrix.diag(a, b, a * b), B)
    assert riemannian_invariant_h3(moved).lambda_sq == riemannian_invariant_h3(B).lambda_sq


@given(st.tuples(*[rationals()] * 3))
def test_frame_components(a):
    assert dual_change_check([a])
    frame = gamma7_frame(*a)
    G = h3_z22_grading(*a)
    assert bracket(H3, frame.column(0), frame.column(1)) == frame.column(2)
    assert G[(-1, -1)] == Subspace.span([frame.column(2)], 3)
