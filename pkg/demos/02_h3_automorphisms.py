"""
Involutions of the Heisenberg algebra h3
========================================

The four families of involutive automorphisms, the Klein four groups they
generate, and a conjugating automorphism between two of them.
"""

from gammasym import aut_h3 as A

t = A.tau(A.InvolutionTag(A.Family.TAU3, (1, 2, 0)))
print(t)
print(t @ t == A.I3, A.is_h3_automorphism(t))
print(A.classify_involution(t))

g7 = A.gamma7(0, 0, 0)
g8 = A.gamma8(1, -1, -1, 1)
print(len(g7), g7.is_abelian, g7.exponent)

sigma = A.find_conjugator(g7, g8)
print(sigma)
print(A.conjugates_to(sigma, g7, g8))

# two generators of a copy of S3 inside Aut(h3)
s1, s2 = A.sigma3_generators()
print(s1 @ s2 @ s1 == s2 @ s2)
