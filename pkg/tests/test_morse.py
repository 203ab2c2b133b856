import pytest

from veronese_betti.faces import anti_star, enumerate_faces, vertices
from veronese_betti.homology import betti_numbers, build_chain_complex, reduced_betti
from veronese_betti.lattice import Parameters, degrees_on_slice
from veronese_betti.morse import (
    DiscreteVectorField,
    PairingConflict,
    augmented_matching,
    check_acyclic,
    morse_bound,
    morse_report,
    vertex_matching,
)
from veronese_betti.theorems import (
    Regime,
    extremal_extra_pairs,
    sharpness_extra_pairs,
    sharpness_witness,
)

P22 = Parameters(2, 2)
P23 = Parameters(2, 3)
TRIANGLE = [[()], [(1,), (2,), (3,)], [(1, 2), (1, 3), (2, 3)]]


def test_vertex_matching_example():
    faces = enumerate_faces((2, 1, 1), P22)
    field = vertex_matching((2, 1, 1), 1, P22, faces)
    assert field.pairs == (((5,), (1, 5)),)
    rep = morse_report(field, faces)
    assert sorted(rep.critical) == [(1,), (2,), (2, 3), (3,)]
    assert rep.acyclic


def test_vertex_matching_trivial_and_cone():
    faces = enumerate_faces((3, 0, 0), P23)
    field = vertex_matching((3, 0, 0), 1, P23, faces)
    assert len(field) == 0
    assert morse_report(field, faces).critical == [(1,)]
    faces = enumerate_faces((11, 2, 2), P23)
    assert morse_report(vertex_matching((11, 2, 2), 1, P23, faces), faces).critical == [(1,)]


def test_closed_path_detected():
    field = DiscreteVectorField.from_pairs([((1,), (1, 2)), ((2,), (2, 3)), ((3,), (1, 3))])
    assert not check_acyclic(field, TRIANGLE)
    # breaking the loop restores acyclicity
    field = DiscreteVectorField.from_pairs([((1,), (1, 2)), ((2,), (2, 3))])
    assert check_acyclic(field, TRIANGLE)
    assert check_acyclic(DiscreteVectorField(()), TRIANGLE)


def test_malformed_fields():
    with pytest.raises(PairingConflict):
        DiscreteVectorField.from_pairs([((1,), (1, 2)), ((1,), (1, 3))])
    with pytest.raises(PairingConflict):
        DiscreteVectorField.from_pairs([((1,), (2, 3))])
    with pytest.raises(PairingConflict):
        DiscreteVectorField.from_pairs([((), (1,))])
    with pytest.raises(PairingConflict):
        check_acyclic(DiscreteVectorField.from_pairs([((4,), (4, 5))]), TRIANGLE)


def test_augmented_conflict():
    with pytest.raises(PairingConflict):
        augmented_matching((2, 1, 1), 1, [((5,), (2, 5))], P22)


def test_morse_bound_examples():
    faces = enumerate_faces((2, 1, 1), P22)
    nb = morse_bound((2, 1, 1), 0, P22, faces)
    assert nb.value <= 2 and nb.value >= betti_numbers((2, 1, 1), P22)[1]
    assert anti_star((2, 1, 1), 1, P22, faces).counts[0] == 2
    assert morse_bound((8, 4, 3), 3, P23).value == 2
    faces = enumerate_faces((11, 2, 2), P23)
    assert all(morse_bound((11, 2, 2), q, P23, faces).value == 0 for q in range(1, 5))


def test_morse_bound_tie_breaks_on_first_vertex():
    faces = enumerate_faces((3, 0, 0), P23)
    assert morse_bound((3, 0, 0), 0, P23, faces).vertex == 1


@pytest.mark.parametrize("m,d,j", [(2, 2, 4), (2, 3, 4), (3, 2, 3)])
def test_morse_inequalities(m, d, j):
    params = Parameters(m, d)
    for b in degrees_on_slice(params, j):
        faces = enumerate_faces(b, params)
        cc = build_chain_complex(faces)
        total = sum(len(layer) for layer in faces[1:])
        for v in vertices(faces):
            field = vertex_matching(b, v, params, faces)
            rep = morse_report(field, faces)
            assert rep.acyclic
            assert sum(rep.counts.values()) + 2 * len(field) == total
            for q in range(0, len(faces) - 1):
                assert rep.counts[q] >= reduced_betti(cc, q)
        for q in range(0, j):
            assert morse_bound(b, q, params, faces).value >= reduced_betti(cc, q)


@pytest.mark.parametrize("b1,sphere", [(2, True), (3, True), (1, False), (4, False), (0, False)])
def test_extremal_certificate(b1, sphere):
    b = (3, b1, 5 - b1)
    faces = enumerate_faces(b, P22)
    rep = augmented_matching(b, 1, extremal_extra_pairs(b, P22), P22, faces)
    assert rep.acyclic
    if sphere:
        assert len(rep.critical) == 2 and rep.counts[2] == 1
    else:
        assert rep.critical == [(1,)]


@pytest.mark.parametrize("m,d,p", [(2, 2, 1), (3, 2, 1), (3, 2, 2), (4, 2, 3)])
def test_low_regime_certificate(m, d, p):
    params = Parameters(m, d)
    w = sharpness_witness(p, params)
    assert w.regime is Regime.LOW
    faces = enumerate_faces(w.b, params)
    rep = augmented_matching(w.b, 1, sharpness_extra_pairs(w, params, faces), params, faces)
    assert rep.acyclic
    others = [f for f in rep.critical if f != (1,)]
    assert len(others) == p and all(len(f) == p for f in others)
