"""Exact Betti numbers on the sharp line b_0 = A_{p+1} - 1, and slice scans.

On that line the anti-star of vertex 1 is a family of (p-1)-faces indexed
by a set D of subsets of one lex block, so Delta_b is a wedge of #D
(p-1)-spheres.  This module computes D, the m = 2 extremal case
p = C(d+1, 2), the witnesses showing the upper bound is attained, and
classifies every cell of a slice |b| = d*j against the oracle.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .bounds import KnapsackProfile, Vanishing, knapsack_profile, vanishing_status
from .faces import CapExceeded, Face, FaceList, anti_star
from .homology import BettiRecord, Method, betti_numbers
from .lattice import MultiDegree, Parameters, as_degree, degrees_on_slice, prefix_coord_sum


class HypothesisError(ValueError):
    """The inputs fall outside the hypotheses of the theorem being applied."""


def block_index(p: int, m: int) -> int:
    """The unique r with C(r+m-2, m) < p+1 <= C(r+m-1, m)."""
    if p < 0:
        raise HypothesisError("p must be nonnegative")
    found = [r for r in range(1, p + 3) if comb(r + m - 2, m) < p + 1 <= comb(r + m - 1, m)]
    assert len(found) == 1, found
    return found[0]


def sharp_b0(p: int, params: Parameters) -> int:
    """A_{p+1} - 1, the largest first coordinate allowing nonzero beta_p."""
    return prefix_coord_sum(params, 0, p + 1) - 1


def _check_sharp_line(p: int, b: MultiDegree, params: Parameters):
    if sum(b) != params.d * (p + 1):
        raise HypothesisError(f"|b| must be {params.d * (p + 1)}, got {sum(b)}")
    if b[0] != sharp_b0(p, params):
        raise HypothesisError(f"b_0 must be {sharp_b0(p, params)}, got {b[0]}")


@dataclass(frozen=True)
class DWitness:
    p: int
    b: MultiDegree
    r: int
    block_range: tuple[int, int]  # inclusive, 1-based
    members: tuple[Face, ...]

    @property
    def cardinality(self) -> int:
        return len(self.members)


def compute_D(p: int, b: Sequence[int], params: Parameters, *, literal: bool = False) -> DWitness:
    """Subsets I of the r-th block, of size p+1-C(r+m-2, m), whose coordinate
    sums sit within one below the budget left by the full earlier blocks.

    The window is imposed on every coordinate t = 1..m.  With ``literal``
    it is imposed on t = 1..m-1 only; that agrees for m = 2 but overcounts
    for m >= 3, e.g. at m = 3, d = 2, b = (4, 2, 2, 0) where the last
    coordinate of b - sum_{i in I} a^i goes negative.
    """
    m = params.m
    b = as_degree(b, params)
    if not m <= p <= comb(params.d + m - 1, m) - 1:
        raise HypothesisError(
            f"p must lie in [{m}, {comb(params.d + m - 1, m) - 1}], got {p}"
        )
    _check_sharp_line(p, b, params)
    r = block_index(p, m)
    lo, hi = comb(r + m - 2, m), comb(r + m - 1, m)
    budget = [b[t] - prefix_coord_sum(params, t, lo) for t in range(m + 1)]
    members = []
    for I in combinations(range(lo + 1, hi + 1), p + 1 - lo):
        ok = True
        for t in range(1, m if literal else m + 1):
            s = sum(params.point(i)[t] for i in I)
            if not budget[t] - 1 <= s <= budget[t]:
                ok = False
                break
        if ok:
            members.append(I)
    return DWitness(p, b, r, (lo + 1, hi), tuple(members))


def predict_betti_wedge(p: int, b: Sequence[int], params: Parameters) -> BettiRecord:
    """beta_{p,b} = #D; all other beta_{q,b} vanish (wedge of (p-1)-spheres)."""
    w = compute_D(p, b, params)
    return BettiRecord(p, w.b, w.cardinality, Method.THEOREM)


def nonvanishing_range_m2(p: int, params: Parameters) -> tuple[int, int]:
    """Closed interval of b_1 on the sharp line where beta_{p,b} != 0 (m = 2)."""
    if params.m != 2:
        raise HypothesisError("only defined for m = 2")
    if not 2 <= p <= comb(params.d + 1, 2) - 1:
        raise HypothesisError(f"p must lie in [2, {comb(params.d + 1, 2) - 1}]")
    return (prefix_coord_sum(params, 2, p + 1), 1 + prefix_coord_sum(params, 1, p + 1))


def _extremal_p(params: Parameters) -> int:
    return comb(params.d + 1, 2)


def extremal_range_m2(params: Parameters) -> tuple[int, int]:
    p = _extremal_p(params)
    return (prefix_coord_sum(params, 1, p) + 1, prefix_coord_sum(params, 1, p + 1))


def extremal_case_m2(b: Sequence[int], params: Parameters) -> BettiRecord:
    """beta_{p,b} for p = C(d+1, 2) on the sharp line: 1 inside the range, else 0."""
    if params.m != 2:
        raise HypothesisError("only defined for m = 2")
    b = as_degree(b, params)
    p = _extremal_p(params)
    _check_sharp_line(p, b, params)
    lo, hi = extremal_range_m2(params)
    return BettiRecord(p, b, int(lo <= b[1] <= hi), Method.THEOREM)


def extremal_extra_pairs(b: Sequence[int], params: Parameters) -> list[tuple[Face, Face]]:
    """The one pair added to the matching along vertex 1 in the extremal case."""
    b = as_degree(b, params)
    extremal_case_m2(b, params)
    p, d = _extremal_p(params), params.d
    s_p = prefix_coord_sum(params, 1, p)
    head = tuple(range(2, p + 1))
    lo, hi = extremal_range_m2(params)
    if lo - 1 <= b[1] <= hi:
        tail = p + 1 + d - b[1] + s_p
    elif b[1] == hi + 1:
        tail = p + 2 + d - b[1] + s_p
    else:
        return []
    return [(head, head + (tail,))]


class Regime(str, Enum):
    LOW = "low"
    MIDDLE = "middle"
    HIGH = "high"


@dataclass(frozen=True)
class SharpnessWitness:
    p: int
    b: MultiDegree
    predicted_betti: int
    regime: Regime


def sharpness_witness(p: int, params: Parameters) -> SharpnessWitness:
    """A degree on the sharp line b_0 = A_{p+1} - 1 with beta_{p,b} != 0."""
    m, d = params.m, params.d
    top = comb(d + m - 1, m)
    if not 1 <= p <= top + m - 2:
        raise HypothesisError(f"p must lie in [1, {top + m - 2}], got {p}")
    b = [prefix_coord_sum(params, s, p + 1) for s in range(m + 1)]
    b[0] -= 1
    b[m] += 1
    b = tuple(b)
    if p <= m - 1:
        return SharpnessWitness(p, b, p, Regime.LOW)
    if p <= top - 1:
        return SharpnessWitness(p, b, compute_D(p, b, params).cardinality, Regime.MIDDLE)
    return SharpnessWitness(p, b, 1, Regime.HIGH)


def sharpness_extra_pairs(
    w: SharpnessWitness, params: Parameters, faces: FaceList
) -> list[tuple[Face, Face]]:
    """Pairs added to the matching along vertex 1 for the witness' regime."""
    m, p = params.m, w.p
    if w.regime is Regime.LOW:
        rest = tuple(range(3, p + 2)) + (m + 1,)
        return [(rest, (2,) + rest)]
    if w.regime is Regime.MIDDLE:
        return []
    c = comb(params.d + m - 1, m)
    F = set(anti_star(w.b, 1, params, faces).faces)
    pivot = c + 1
    pairs = []
    for tau in F:
        if pivot in tau:
            continue
        up = tuple(sorted(tau + (pivot,)))
        if up in F:
            pairs.append((tau, up))
    return sorted(pairs)


# -- combined prediction ------------------------------------------------------

def _to_front(b: MultiDegree, s: int) -> MultiDegree:
    return (b[s],) + b[:s] + b[s + 1:]


def predict_betti_numbers(
    b: Sequence[int], params: Parameters, profile: KnapsackProfile | None = None
) -> tuple[str, dict[int, int]] | None:
    """Every beta_{p,b} (p = 0..j) when a vanishing bound or theorem applies.

    Returns (classification, values) or None.  Coordinates are permuted
    freely: the point set is symmetric, so Delta_b is unchanged up to
    relabeling.
    """
    b = as_degree(b, params)
    j = sum(b) // params.d
    if sum(b) % params.d:
        raise ValueError(f"{b} is not in the Veronese semigroup")
    if j == 0:
        return None
    status = vanishing_status(b, params, profile)
    if status is not Vanishing.UNDETERMINED:
        return status.value, {q: 0 for q in range(j + 1)}
    p = j - 1
    m = params.m
    for s in range(m + 1):
        bs = _to_front(b, s)
        if bs[0] != sharp_b0(p, params):
            continue
        if m <= p <= comb(params.d + m - 1, m) - 1:
            value = compute_D(p, bs, params).cardinality
        elif m == 2 and p == _extremal_p(params):
            value = extremal_case_m2(bs, params).value
        else:
            continue
        out = {q: 0 for q in range(j + 1)}
        out[p] = value
        return "theorem", out
    return None


# -- slice scans -------------------------------------------------------------

class Classification(str, Enum):
    VANISH_UPPER = "vanish_upper"
    VANISH_LOWER = "vanish_lower"
    THEOREM = "theorem"
    ORACLE = "oracle"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ScanRow:
    b: MultiDegree
    j: int
    p: int
    value: int | None
    classification: Classification
    provenance: str  # bound | theorem | oracle | confirmed | MISMATCH | none


def _classify_degree(args) -> list[ScanRow]:
    b, params, j, p_list, check, caps, profile = args
    predicted = predict_betti_numbers(b, params, profile)
    oracle = None
    if check or predicted is None:
        try:
            oracle = betti_numbers(b, params, **caps)
        except CapExceeded:
            oracle = None
    rows = []
    for p in p_list:
        if predicted is not None:
            kind, values = predicted
            pred = values.get(p, 0)
            cls = Classification(kind)
            if oracle is None:
                prov = "theorem" if cls is Classification.THEOREM else "bound"
                rows.append(ScanRow(b, j, p, pred, cls, prov))
            else:
                truth = oracle.get(p, 0)
                prov = "confirmed" if truth == pred else "MISMATCH"
                rows.append(ScanRow(b, j, p, truth, cls, prov))
        elif oracle is not None:
            rows.append(ScanRow(b, j, p, oracle.get(p, 0), Classification.ORACLE, "oracle"))
        else:
            rows.append(ScanRow(b, j, p, None, Classification.UNKNOWN, "none"))
    return rows


def classify_slice(
    params: Parameters,
    j: int,
    p_list: Iterable[int],
    *,
    check: bool = False,
    workers: int = 1,
    **caps,
) -> list[ScanRow]:
    """One row per (b, p) with |b| = d*j, b in decreasing lex order.

    Predictions come from the bounds and theorems; the oracle fills in the
    rest, and with ``check`` also confirms every prediction.
    """
    p_list = list(p_list)
    profile = knapsack_profile(params)
    jobs = [(b, params, j, p_list, check, caps, profile) for b in degrees_on_slice(params, j)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_classify_degree, jobs))
    else:
        chunks = [_classify_degree(job) for job in jobs]
    return [row for chunk in chunks for row in chunk]


@dataclass
class SliceReport:
    params: Parameters
    j: int
    rows: list[ScanRow] = field(default_factory=list)

    @property
    def mismatches(self) -> list[ScanRow]:
        return [r for r in self.rows if r.provenance == "MISMATCH"]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def count(self, provenance: str) -> int:
        return sum(r.provenance == provenance for r in self.rows)


def verify_slice(params: Parameters, j: int, p_list: Iterable[int], **kwargs) -> SliceReport:
    """Classify a slice and confirm every prediction against the oracle."""
    return SliceReport(params, j, classify_slice(params, j, p_list, check=True, **kwargs))
