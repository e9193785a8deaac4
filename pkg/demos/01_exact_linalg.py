"""
Exact linear algebra over the rationals
=======================================

Everything in gammasym is computed with Fractions, so ranks, kernels and
signatures come out exact.
"""

from fractions import Fraction

from gammasym.linalg import Matrix, Subspace, intersect, kernel, signature

A = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
print(A.rank())           # 2
print(kernel(A))          # one dimensional

# subspaces are kept in reduced echelon form, so equality is structural
U = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
V = Subspace.span([(1, 1, 0), (0, 0, 1)], 3)
print(intersect(U, V), (U + V).dim)

# Sylvester: congruent forms share a signature
S = Matrix.diag(Fraction(1, 2), -3, 0)
P = Matrix([[1, 1, 0], [0, 1, 2], [0, 0, 1]])
print(signature(S), signature(P.T @ S @ P))
