"""
The D window in higher dimension
================================

For m >= 3 the set D has to constrain every coordinate t = 1..m, not only
t = 1..m-1.  With the shorter window a subset can slip through whose
residual is negative in the last coordinate.  Here the oracle separates the
two readings.
"""

from math import comb

from veronese_betti import Parameters, betti_numbers
from veronese_betti.lattice import degrees_on_slice
from veronese_betti.theorems import compute_D, sharp_b0

for m, d in [(3, 2), (4, 2), (3, 3)]:
    params = Parameters(m, d)
    full = short = total = 0
    for p in range(m, min(comb(d + m - 1, m), 6)):
        for b in degrees_on_slice(params, p + 1):
            if b[0] != sharp_b0(p, params):
                continue
            truth = betti_numbers(b, params)[p]
            total += 1
            full += compute_D(p, b, params).cardinality != truth
            short += compute_D(p, b, params, literal=True).cardinality != truth
    print(f"m={m} d={d}: {total} degrees, mismatches full window {full}, short window {short}")
