"""
Invariant connections
=====================

Torsion and curvature of connection maps, the two canonical connections,
the flat adapted family on h_{2p+1}, and the filiform l5 example.
"""

from gammasym import connections as C
from gammasym import gradings as G
from gammasym import metrics as M

split = M.h3_z22_split()
print(C.torsion(C.first_canonical(split))[(0, 1)])    # -X3
print(C.torsion(C.second_canonical(split)).is_zero())

grading = G.heisenberg_grading(G.GradingName.Z22, 2)
flat = C.heisenberg_flat_family(2, [[1, 2], [3, 4]], M.reductive_split(grading))
print(C.torsion(flat).is_zero(), C.curvature(flat).is_zero(), C.is_adapted(flat, grading))

family = C.torsion_free_adapted_space(grading)
print(len(family.directions), family.contains(flat))

# for p = 1 the flat torsion-free adapted connections are exactly the family above
print(C.h3_flat_enumeration().matches_family)

# l5: curvature never vanishes; equivariance only holds on the a = 0 slice
report = C.l5_scenario([(0, 1, 2, 3, 4, 5), (2, 0, 0, 0, 0, 0)])
for (transpose, sign, sample), r in report.readings.items():
    reading = "rows" if transpose else "columns"
    print(reading, sign, [str(x) for x in sample], r.torsion_free, r.equivariant, r.witness)
