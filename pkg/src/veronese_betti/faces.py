"""The simplicial complex Delta_b attached to a multidegree b.

A set I of generator indices is a face when b - sum_{i in I} a^i stays
coordinatewise nonnegative.  Faces are sorted tuples of 1-based indices; the
empty tuple is the empty face and is always present.
"""

from __future__ import annotations

from collections import Counter
from typing import NamedTuple, Sequence

from .lattice import MultiDegree, Parameters, as_degree, semigroup_member

Face = tuple[int, ...]
FaceList = list[list[Face]]  # FaceList[k] holds the faces of cardinality k

DEFAULT_MAX_N = 64
DEFAULT_MAX_J = 12
DEFAULT_MAX_FACES = 2_000_000


class CapExceeded(RuntimeError):
    """The instance is too large for explicit face enumeration."""


def _check_face(sigma: Sequence[int], params: Parameters) -> Face:
    face = tuple(sorted(int(i) for i in sigma))
    if len(set(face)) != len(face):
        raise ValueError(f"face {tuple(sigma)} repeats an index")
    if face and (face[0] < 1 or face[-1] > params.n):
        raise ValueError(f"face {tuple(sigma)} has an index outside 1..{params.n}")
    return face


def _check_degree(b: Sequence[int], params: Parameters) -> MultiDegree:
    b = as_degree(b, params)
    if not semigroup_member(b, params):
        raise ValueError(f"{b} is not in the Veronese semigroup")
    return b


def residual(b: Sequence[int], sigma: Sequence[int], params: Parameters) -> list[int]:
    """b minus the sum of the generators indexed by ``sigma``."""
    res = list(b)
    for i in sigma:
        a = params.point(i)
        for t in range(len(res)):
            res[t] -= a[t]
    return res


def is_face(b: Sequence[int], sigma: Sequence[int], params: Parameters) -> bool:
    face = _check_face(sigma, params)
    b = as_degree(b, params)
    return min(residual(b, face, params), default=0) >= 0


def enumerate_faces(
    b: Sequence[int],
    params: Parameters,
    *,
    max_n: int = DEFAULT_MAX_N,
    max_j: int = DEFAULT_MAX_J,
    max_faces: int | None = DEFAULT_MAX_FACES,
) -> FaceList:
    """All faces of Delta_b grouped by cardinality, empty face included.

    Faces are grown breadth first, each one only by indices above its
    maximum; downward closure makes this complete.
    """
    b = _check_degree(b, params)
    j = sum(b) // params.d
    if params.n > max_n:
        raise CapExceeded(f"n = {params.n} exceeds the cap {max_n}")
    if j > max_j:
        raise CapExceeded(f"j = {j} exceeds the cap {max_j}")

    points = params.points
    layers: FaceList = [[()]]
    frontier = [((), tuple(b))]
    total = 1
    while frontier:
        nxt = []
        for face, res in frontier:
            start = face[-1] if face else 0
            for i in range(start, params.n):
                a = points[i]
                new = tuple(r - x for r, x in zip(res, a))
                if min(new) >= 0:
                    nxt.append((face + (i + 1,), new))
        if not nxt:
            break
        total += len(nxt)
        if max_faces is not None and total > max_faces:
            raise CapExceeded(f"more than {max_faces} faces")
        layers.append([f for f, _ in nxt])
        frontier = nxt
    return layers


def face_vector(faces: FaceList) -> list[int]:
    """Face counts indexed by cardinality (entry 0 is the empty face)."""
    return [len(layer) for layer in faces]


def vertices(faces: FaceList) -> list[int]:
    return [f[0] for f in faces[1]] if len(faces) > 1 else []


def _face_set(faces: FaceList) -> set[Face]:
    return {f for layer in faces for f in layer}


def _with_vertex(face: Face, v: int) -> Face:
    return tuple(sorted(face + (v,)))


def _require_vertex(b, v, params, faces):
    if faces is None:
        faces = enumerate_faces(b, params)
    if (v,) not in set(faces[1] if len(faces) > 1 else ()):
        raise ValueError(f"{v} is not a vertex of the complex")
    return faces


def is_cone_over(
    b: Sequence[int], v: int, params: Parameters, faces: FaceList | None = None
) -> bool:
    """True iff adding ``v`` to any face of Delta_b gives a face."""
    faces = _require_vertex(b, v, params, faces)
    b = as_degree(b, params)
    av = params.point(v)
    for layer in faces:
        for face in layer:
            if v in face:
                continue
            res = residual(b, face, params)
            if any(r < x for r, x in zip(res, av)):
                return False
    return True


class AntiStar(NamedTuple):
    faces: list[Face]
    counts: Counter  # dimension q -> N_{v,q}


def anti_star(
    b: Sequence[int], v: int, params: Parameters, faces: FaceList | None = None
) -> AntiStar:
    """Faces sigma with sigma + {v} not a face, plus their counts per dimension."""
    faces = _require_vertex(b, v, params, faces)
    members = _face_set(faces)
    out = [
        face
        for layer in faces
        for face in layer
        if v not in face and _with_vertex(face, v) not in members
    ]
    return AntiStar(out, Counter(len(f) - 1 for f in out))
