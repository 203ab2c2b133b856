"""
The slice |b| = 15 for the cubic Veronese surface
=================================================

Classify every b with |b| = 15 for p = 4: black cells are killed by a
vanishing bound, red cells are computed exactly (by the wedge theorem and
confirmed by the oracle), and the picture is written as an SVG next to this
script.
"""

from collections import Counter
from pathlib import Path

from veronese_betti import Parameters, compute_A, compute_l_tilde
from veronese_betti.svg import render_slice
from veronese_betti.theorems import verify_slice

params = Parameters(m=2, d=3)
j, p = 5, 4
report = verify_slice(params, j, [p])
print("A_5 =", compute_A(params, j), " l~_5 =", compute_l_tilde(params, j))
print("cells by classification:", Counter(r.classification.value for r in report.rows))
print("every prediction confirmed:", report.ok)

line = {r.b[1]: r.value for r in report.rows if r.b[0] == 8}
print("beta_4 along b_0 = 8:", [line[b1] for b1 in range(8)])

svg = render_slice(report.rows, params.d, j, p, compute_A(params, j), compute_l_tilde(params, j))
out = Path(__file__).with_name("slice_d3_j5_p4.svg")
out.write_text(svg)
print("wrote", out)
