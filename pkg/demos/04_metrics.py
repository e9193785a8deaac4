"""
Invariant metrics
=================

Solve for all ad-invariant symmetric forms on m. A nonzero common radical
means every invariant form is degenerate.
"""

from gammasym import gradings as G
from gammasym import metrics as M
from gammasym.linalg import Matrix

# symmetric structure with h = span{X2}: no metric
split = M.reductive_split(G.heisenberg_grading(G.GradingName.H3_Z2_A))
forms = M.invariant_form_space(split)
print(forms.dim, M.common_radical(forms))

# h = span{X3}: the identity works
split = M.reductive_split(G.heisenberg_grading(G.GradingName.CENTER, 1))
print(M.common_radical(M.invariant_form_space(split)))

# Z2 x Z2 structure, h = 0: every nondegenerate diagonal form is allowed
grading = M.h3_z22_grading()
B = M.h3_form(Matrix.diag(4, 9, 72))
print(M.classify_metric(B, grading))
nf = M.riemannian_invariant_h3(B)
print(nf.lambda_sq, M.pullback(nf.witness, B).matrix)

L = M.h3_form(Matrix.diag(1, 1, -4))
print(M.classify_metric(L, grading), M.lorentzian_normal_form_h3(L))
print(M.classify_metric(M.h3_form(M.CASE_II_NORMAL_FORM), grading))
