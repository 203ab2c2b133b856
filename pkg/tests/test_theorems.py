from itertools import combinations
from math import comb

import pytest

from veronese_betti.faces import anti_star, enumerate_faces
from veronese_betti.homology import Method, betti_numbers
from veronese_betti.lattice import Parameters, degrees_on_slice
from veronese_betti.theorems import (
    Classification,
    HypothesisError,
    Regime,
    block_index,
    classify_slice,
    compute_D,
    extremal_case_m2,
    nonvanishing_range_m2,
    predict_betti_numbers,
    predict_betti_wedge,
    sharp_b0,
    sharpness_witness,
    verify_slice,
)

P22, P23 = Parameters(2, 2), Parameters(2, 3)


def _pair_sums_d3(b1):
    # block {4,5,6} = (1,2,0),(1,1,1),(1,0,2); earlier blocks contribute 1 to coord 1
    block = {4: 2, 5: 1, 6: 0}
    lo = b1 - 1 - 1
    return sum(lo <= block[i] + block[k] <= lo + 1 for i, k in combinations(block, 2))


@pytest.mark.parametrize("b,expected", [((8, 4, 3), 2), ((8, 0, 7), 0), ((8, 5, 2), 1),
                                        ((8, 1, 6), 0), ((8, 2, 5), 1)])
def test_D_examples(b, expected):
    w = compute_D(4, b, P23)
    assert w.r == 3 and w.block_range == (4, 6)
    assert w.cardinality == expected == _pair_sums_d3(b[1])
    rec = predict_betti_wedge(4, b, P23)
    assert rec.value == expected and rec.method is Method.THEOREM


def test_D_hypotheses():
    with pytest.raises(HypothesisError):
        compute_D(4, (7, 5, 3), P23)  # wrong b_0
    with pytest.raises(HypothesisError):
        compute_D(4, (8, 4, 6), P23)  # wrong |b|
    with pytest.raises(HypothesisError):
        compute_D(1, (2, 1, 1), P22)  # p below m
    with pytest.raises(HypothesisError):
        compute_D(3, (3, 2, 3), P22)  # p = C(d+1,2) is not covered


def test_block_index():
    assert [block_index(p, 2) for p in (2, 3, 4, 5, 6, 9)] == [2, 3, 3, 3, 4, 4]
    for m in (2, 3, 4):
        for p in range(m, 40):
            r = block_index(p, m)
            assert comb(r + m - 2, m) < p + 1 <= comb(r + m - 1, m)


@pytest.mark.parametrize("m,d", [(2, 2), (2, 3), (2, 4), (3, 2), (4, 2)])
def test_wedge_theorem_against_oracle(m, d):
    params = Parameters(m, d)
    for p in range(m, comb(d + m - 1, m)):
        if p + 1 > 7:
            break
        for b in degrees_on_slice(params, p + 1):
            if b[0] != sharp_b0(p, params):
                continue
            w = compute_D(p, b, params)
            oracle = betti_numbers(b, params)
            assert oracle[p] == w.cardinality, b
            assert all(v == 0 for q, v in oracle.items() if q != p), b
            star = anti_star(b, 1, params)
            assert len(star.faces) == w.cardinality
            assert all(len(f) == p for f in star.faces)
            assert sorted(star.faces) == sorted(
                tuple(range(2, w.block_range[0])) + I for I in w.members)


def test_literal_window_overcounts_for_m3():
    params = Parameters(3, 2)
    b = (4, 2, 2, 0)
    assert compute_D(3, b, params, literal=True).cardinality == 1
    assert compute_D(3, b, params).cardinality == 0 == betti_numbers(b, params)[3]
    # for m = 2 both readings coincide
    for b1 in range(8):
        b = (8, b1, 7 - b1)
        assert compute_D(4, b, P23, literal=True) == compute_D(4, b, P23)


def test_nonvanishing_range():
    assert nonvanishing_range_m2(4, P23) == (2, 5)
    assert nonvanishing_range_m2(2, P22) == (1, 2)
    with pytest.raises(HypothesisError):
        nonvanishing_range_m2(1, P22)
    with pytest.raises(HypothesisError):
        nonvanishing_range_m2(2, Parameters(3, 2))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_nonvanishing_range_matches_D(d):
    params = Parameters(2, d)
    for p in range(2, comb(d + 1, 2)):
        lo, hi = nonvanishing_range_m2(p, params)
        for b in degrees_on_slice(params, p + 1):
            if b[0] == sharp_b0(p, params):
                assert (compute_D(p, b, params).cardinality > 0) == (lo <= b[1] <= hi)


def test_extremal_examples():
    assert extremal_case_m2((3, 2, 3), P22).value == 1
    assert extremal_case_m2((3, 1, 4), P22).value == 0
    assert extremal_case_m2((3, 4, 1), P22).value == 0
    for b1 in range(6):
        b = (3, b1, 5 - b1)
        assert extremal_case_m2(b, P22).value == betti_numbers(b, P22)[3]
    with pytest.raises(HypothesisError):
        extremal_case_m2((4, 2, 2), P22)


def test_sharpness_examples():
    w = sharpness_witness(1, P22)
    assert (w.b, w.predicted_betti, w.regime) == ((2, 1, 1), 1, Regime.LOW)
    w = sharpness_witness(4, P23)
    assert (w.b, w.predicted_betti, w.regime) == ((8, 4, 3), 2, Regime.MIDDLE)
    w = sharpness_witness(3, P22)
    assert w.regime is Regime.HIGH and w.predicted_betti == 1
    assert betti_numbers(w.b, P22)[3] == 1
    with pytest.raises(HypothesisError):
        sharpness_witness(4, P22)
    with pytest.raises(HypothesisError):
        sharpness_witness(0, P22)


@pytest.mark.parametrize("m,d", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_sharpness_invariants(m, d):
    params = Parameters(m, d)
    for p in range(1, comb(d + m - 1, m) + m - 1):
        w = sharpness_witness(p, params)
        assert w.predicted_betti >= 1
        assert sum(w.b) == d * (p + 1) and w.b[0] == sharp_b0(p, params)


def test_prediction_uses_symmetry():
    kind, values = predict_betti_numbers((4, 8, 3), P23)
    assert kind == "theorem" and values[4] == 2
    assert predict_betti_numbers((7, 4, 4), P23) is None


def test_figure_line():
    rows = classify_slice(P23, 5, [4], check=True)
    line = {r.b[1]: r for r in rows if r.b[0] == 8}
    assert [line[b1].value for b1 in range(8)] == [0, 0, 1, 2, 2, 1, 0, 0]
    # the two endpoints already sit on the lower bound line b_s = 0
    assert line[0].classification is line[7].classification is Classification.VANISH_LOWER
    assert all(line[b1].classification is Classification.THEOREM for b1 in range(1, 7))
    assert all(r.provenance == "confirmed" for r in line.values())


def test_slice_extremes():
    report = verify_slice(P23, 5, range(0, 6))
    assert report.ok
    for r in report.rows:
        if max(r.b) >= 9:
            assert r.classification is Classification.VANISH_UPPER and r.value == 0
        if min(r.b) <= 0 and max(r.b) < 9:
            assert r.classification is Classification.VANISH_LOWER and r.value == 0


def test_unknown_cells_when_capped():
    rows = classify_slice(P23, 5, [4], max_faces=5)
    kinds = {r.classification for r in rows}
    assert Classification.UNKNOWN in kinds
    assert all(r.value is None for r in rows if r.classification is Classification.UNKNOWN)


def test_parallel_scan_matches_serial():
    assert classify_slice(P22, 4, [3], workers=2) == classify_slice(P22, 4, [3])
