"""
Gradings from commuting involutions
===================================

Simultaneous eigenspaces of a Klein four group give a Z2 x Z2 grading of h3.
The catalogue covers the gradings of every Heisenberg algebra h_{2p+1}.
"""

from gammasym import aut_h3 as A
from gammasym import gradings as G

g = G.grading_from_involutions(A.H3, list(A.gamma7_generators(0, 0, 0)))
print(g.describe())
print(G.check_grading(g), G.is_irreducible(g))

for name in (G.GradingName.CENTER, G.GradingName.ODD, G.GradingName.Z22):
    print(name.value, G.heisenberg_grading(name, 2).describe())

a = G.heisenberg_grading(G.GradingName.H3_Z2_A)
b = G.heisenberg_grading(G.GradingName.H3_Z2_B)
print(G.find_equivalence_h3(a, b))
