"""
Generators and vanishing bounds
===============================

The d-th Veronese ring of P^m is generated by every exponent vector of total
degree d.  We list them in decreasing lex order and tabulate the two bounds
on a coordinate of b beyond which every multigraded Betti number vanishes.
"""

from veronese_betti import Parameters, bounds_table, enumerate_points, knapsack_profile

params = Parameters(m=2, d=3)
for i, a in enumerate(enumerate_points(params), 1):
    print(i, a)

# A_j is a prefix sum of first coordinates; l~_j comes from an exact-weight
# knapsack over the same points
profile = knapsack_profile(params)
print("f_l for l = 0..A:", profile.f)

for d in (2, 3, 4):
    table = bounds_table(Parameters(2, d), j_max=3 * d + 3)
    print(f"\nd = {d}  (l~_j defined from j = {table.j_threshold})")
    for row in table.rows:
        print(f"  j={row.j:2d}  A_j={row.A:3d}  l~_j={'-' if row.l_tilde is None else row.l_tilde}")
