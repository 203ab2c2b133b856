import random

import pytest

from oracles import all_faces, points_by_sorting
from veronese_betti.faces import (
    CapExceeded,
    anti_star,
    enumerate_faces,
    face_vector,
    is_cone_over,
    is_face,
)
from veronese_betti.lattice import Parameters

P22 = Parameters(2, 2)
P23 = Parameters(2, 3)


def _faces(b, params):
    return {f for layer in enumerate_faces(b, params) for f in layer}


def test_is_face_examples():
    assert is_face((2, 1, 1), (1, 5), P22)
    assert not is_face((2, 1, 1), (1, 2), P22)
    assert is_face((2, 1, 1), (), P22)
    with pytest.raises(ValueError):
        is_face((2, 1, 1), (0,), P22)
    with pytest.raises(ValueError):
        is_face((2, 1, 1), (7,), P22)


def test_enumerate_examples():
    layers = enumerate_faces((2, 1, 1), P22)
    assert layers == [[()], [(1,), (2,), (3,), (5,)], [(1, 5), (2, 3)]]
    layers = enumerate_faces((2, 2, 0), P22)
    assert layers == [[()], [(1,), (2,), (4,)], [(1, 4)]]
    assert enumerate_faces((3, 0, 0), P23) == [[()], [(1,)]]
    assert face_vector(enumerate_faces((2, 1, 1), P22)) == [1, 4, 2]


def _random_degree(rng, m, d, jmax):
    j = rng.randint(1, jmax)
    cuts = sorted(rng.randint(0, d * j) for _ in range(m))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [d * j])]
    return tuple(parts)


@pytest.mark.parametrize("m,d,jmax", [(2, 2, 5), (2, 3, 5), (3, 2, 4)])
def test_enumeration_matches_exhaustive(m, d, jmax):
    rng = random.Random(1000 * m + d)
    params = Parameters(m, d)
    pts = points_by_sorting(m, d)
    for _ in range(25):
        b = _random_degree(rng, m, d, jmax)
        faces = _faces(b, params)
        assert faces == all_faces(b, pts)
        # downward closure and the size bound
        for f in faces:
            assert len(f) <= sum(b) // d
            for pos in range(len(f)):
                assert f[:pos] + f[pos + 1:] in faces


def test_rejects_non_semigroup():
    with pytest.raises(ValueError):
        enumerate_faces((1, 1, 0), P23)


def test_caps():
    with pytest.raises(CapExceeded):
        enumerate_faces((3 * 13, 0, 0), P23)
    with pytest.raises(CapExceeded):
        enumerate_faces((8, 4, 3), P23, max_faces=10)
    with pytest.raises(CapExceeded):
        enumerate_faces((2, 1, 1), P22, max_n=5)


def test_cone_examples():
    assert is_cone_over((11, 2, 2), 1, P23)
    assert not is_cone_over((2, 1, 1), 1, P22)
    assert is_cone_over((3, 0, 0), 1, P23)
    with pytest.raises(ValueError):
        is_cone_over((2, 1, 1), 4, P22)


def test_anti_star_examples():
    star = anti_star((2, 1, 1), 1, P22)
    assert sorted(star.faces) == [(2,), (2, 3), (3,)]
    assert star.counts[0] == 2 and star.counts[1] == 1
    star = anti_star((3, 0, 0), 1, P23)
    assert star.faces == [] and sum(star.counts.values()) == 0
    star = anti_star((8, 4, 3), 1, P23)
    assert len(star.faces) == 2 and all(len(f) == 4 for f in star.faces)


@pytest.mark.parametrize("m,d", [(2, 2), (2, 3), (3, 2)])
def test_anti_star_is_set_difference(m, d):
    rng = random.Random(7 * m + d)
    params = Parameters(m, d)
    pts = points_by_sorting(m, d)
    for _ in range(15):
        b = _random_degree(rng, m, d, 4)
        faces = all_faces(b, pts)
        for v in [f[0] for f in faces if len(f) == 1]:
            expected = {f for f in faces if v not in f and tuple(sorted(f + (v,))) not in faces}
            assert set(anti_star(b, v, params).faces) == expected
            cone = all(tuple(sorted(set(f) | {v})) in faces for f in faces)
            assert is_cone_over(b, v, params) == cone
