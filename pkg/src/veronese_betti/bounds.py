"""Upper and lower vanishing bounds on a coordinate of b.

``compute_A`` gives the upper bound A_j: once b_0 >= A_j the complex is a
cone over (d, 0, ..., 0).  The lower bound l~_j comes from an exact-weight
0/1 knapsack over the generators (weight = first coordinate, value = second
coordinate) and holds once j >= C(d+m-1, m-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Sequence

from .lattice import Parameters, as_degree, degree_level, prefix_coord_sum


class Vanishing(str, Enum):
    UPPER = "vanish_upper"
    LOWER = "vanish_lower"
    UNDETERMINED = "undetermined"


def compute_A(params: Parameters, j: int) -> int:
    if j < 1:
        raise ValueError("j must be positive")
    return prefix_coord_sum(params, 0, j)


def compute_A_closed_form_m2(d: int, j: int) -> int:
    """Closed form of A_j for the plane (m = 2)."""
    if j < 1:
        raise ValueError("j must be positive")
    for k in range(1, d + 1):
        if comb(k + 1, 2) <= j <= comb(k + 2, 2):
            return (d - k) * j + comb(k + 2, 3)
    if j >= comb(d + 2, 2):
        return comb(d + 2, 3)
    raise AssertionError(f"no block contains j = {j} for d = {d}")


def lower_threshold(params: Parameters) -> int:
    """Smallest j for which the lower bound applies."""
    return comb(params.d + params.m - 1, params.m - 1)


@dataclass(frozen=True)
class KnapsackProfile:
    A: int
    f: tuple[int, ...]  # f[l] = best coordinate sum at exact first-coordinate weight l


def knapsack_profile(params: Parameters, coord: int = 1) -> KnapsackProfile:
    """Max of sum a^i_coord over index sets whose first coordinates sum to l."""
    if not 1 <= coord <= params.m:
        raise ValueError("coord must be one of 1..m")
    total = prefix_coord_sum(params, 0, params.n)
    unreachable = -1
    best = [unreachable] * (total + 1)
    best[0] = 0
    for a in params.points:
        w, val = a[0], a[coord]
        # descending sweep keeps every item 0/1
        for l in range(total, w - 1, -1):
            if best[l - w] != unreachable and best[l - w] + val > best[l]:
                best[l] = best[l - w] + val
    assert unreachable not in best, "some weight in 0..A is unreachable"
    return KnapsackProfile(total, tuple(best))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def phi_values(params: Parameters, j: int, profile: KnapsackProfile | None = None) -> list[int]:
    """ceil((d*j - l) / m) - f_l for l = 0..A_j - 1."""
    profile = profile or knapsack_profile(params)
    dj = params.d * j
    return [_ceil_div(dj - l, params.m) - profile.f[l] for l in range(compute_A(params, j))]


def compute_l_tilde(params: Parameters, j: int, profile: KnapsackProfile | None = None) -> int:
    """Largest l in 0..A_j-1 with phi(l) >= 0, or -1 when there is none."""
    if j < lower_threshold(params):
        raise ValueError(
            f"lower bound needs j >= {lower_threshold(params)}, got j = {j}"
        )
    phi = phi_values(params, j, profile)
    if any(x < y for x, y in zip(phi, phi[1:])):
        raise ArithmeticError(f"phi is not nonincreasing for {params}, j = {j}: {phi}")
    nonneg = [l for l, x in enumerate(phi) if x >= 0]
    return nonneg[-1] if nonneg else -1


def vanishing_status(
    b: Sequence[int], params: Parameters, profile: KnapsackProfile | None = None
) -> Vanishing:
    """Whether some coordinate of b already forces every beta_{p,b} to vanish."""
    b = as_degree(b, params)
    j = degree_level(b, params)
    if j < 1:
        raise ValueError("the bounds need |b| > 0")
    upper = compute_A(params, j)
    if max(b) >= upper:
        return Vanishing.UPPER
    if j >= lower_threshold(params) and min(b) <= compute_l_tilde(params, j, profile):
        return Vanishing.LOWER
    return Vanishing.UNDETERMINED


@dataclass(frozen=True)
class BoundsRow:
    j: int
    A: int
    l_tilde: int | None  # None below the threshold


@dataclass(frozen=True)
class BoundsTable:
    d: int
    m: int
    j_threshold: int
    rows: tuple[BoundsRow, ...]


def bounds_table(params: Parameters, j_max: int) -> BoundsTable:
    if j_max < 1:
        raise ValueError("j_max must be positive")
    profile = knapsack_profile(params)
    threshold = lower_threshold(params)
    rows = tuple(
        BoundsRow(
            j,
            compute_A(params, j),
            compute_l_tilde(params, j, profile) if j >= threshold else None,
        )
        for j in range(1, j_max + 1)
    )
    return BoundsTable(params.d, params.m, threshold, rows)
