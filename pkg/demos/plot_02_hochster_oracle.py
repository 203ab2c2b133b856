"""
Betti numbers from Hochster's formula
=====================================

beta_{p,b} is the dimension of the reduced homology H~_{p-1} of the complex
Delta_b on the generator indices.  We build one complex, look at its faces,
and read off all Betti numbers in that multidegree.
"""

from veronese_betti import Parameters, betti_numbers, build_chain_complex, enumerate_faces
from veronese_betti.homology import boundary_squared_zero, reduced_betti_numbers

params = Parameters(m=2, d=2)
b = (2, 1, 1)
faces = enumerate_faces(b, params)
for k, layer in enumerate(faces):
    print(f"cardinality {k}: {layer}")

# two disjoint edges: one reduced H_0 class, hence beta_1 = 1
cc = build_chain_complex(faces)
print("d o d = 0:", boundary_squared_zero(cc))
print("reduced Betti numbers by dimension:", reduced_betti_numbers(cc))
print("beta_{p,b}:", betti_numbers(b, params))

# a larger example from the cubic Veronese surface
print("beta_{p,(8,4,3)}:", betti_numbers((8, 4, 3), Parameters(2, 3)))
