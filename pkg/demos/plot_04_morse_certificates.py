"""
Discrete Morse certificates
===========================

Matching every face with its union with vertex 1 is always a gradient field.
On the sharp line its critical cells are {1} plus #D faces of dimension p-1,
so Delta_b is a wedge of spheres.  For the extremal p = C(d+1, 2) one extra
pair leaves a single sphere.
"""

from veronese_betti import Parameters, augmented_matching, enumerate_faces, morse_bound
from veronese_betti.theorems import compute_D, extremal_extra_pairs, sharpness_extra_pairs, sharpness_witness

params = Parameters(m=2, d=3)
b = (8, 4, 3)
faces = enumerate_faces(b, params)
report = augmented_matching(b, 1, [], params, faces)
print("critical cells:", report.critical, "acyclic:", report.acyclic)
print("#D =", compute_D(4, b, params).cardinality)
print("Morse bound N_3 =", morse_bound(b, 3, params, faces))

plane = Parameters(m=2, d=2)
for b1 in range(6):
    b = (3, b1, 5 - b1)
    faces = enumerate_faces(b, plane)
    rep = augmented_matching(b, 1, extremal_extra_pairs(b, plane), plane, faces)
    print(b, "critical:", rep.critical)

# the witnesses showing the bound A_{p+1} is attained, for P^3
space = Parameters(m=3, d=2)
for p in range(1, 6):
    w = sharpness_witness(p, space)
    faces = enumerate_faces(w.b, space)
    rep = augmented_matching(w.b, 1, sharpness_extra_pairs(w, space, faces), space, faces)
    print(f"p={p} {w.regime.value:6s} b={w.b} predicted={w.predicted_betti} critical={rep.critical}")
