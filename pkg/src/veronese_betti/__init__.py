"""Multigraded Betti numbers of Veronese embeddings via Hochster's formula."""

from .bounds import (
    Vanishing,
    bounds_table,
    compute_A,
    compute_A_closed_form_m2,
    compute_l_tilde,
    knapsack_profile,
    vanishing_status,
)
from .faces import CapExceeded, anti_star, enumerate_faces, is_cone_over, is_face
from .homology import (
    BettiRecord,
    Method,
    betti_hochster,
    betti_numbers,
    build_chain_complex,
    reduced_betti,
)
from .lattice import Parameters, enumerate_points, prefix_coord_sum, semigroup_member
from .morse import (
    DiscreteVectorField,
    augmented_matching,
    check_acyclic,
    morse_bound,
    vertex_matching,
)
from .theorems import (
    compute_D,
    extremal_case_m2,
    nonvanishing_range_m2,
    predict_betti_numbers,
    predict_betti_wedge,
    sharpness_witness,
    verify_slice,
)

__version__ = "0.1.0"
