"""Discrete vector fields on Delta_b, V-path acyclicity and Morse counts.

Fields never pair the empty face, so for a matching along a vertex v the
critical cells are {v} together with the anti-star of v.  The extra critical
0-cell {v} is the apex that the reduced bookkeeping absorbs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .faces import Face, FaceList, _face_set, anti_star, enumerate_faces, vertices
from .lattice import Parameters


class PairingConflict(ValueError):
    """A face would be covered by two pairs, or a pair is malformed."""


@dataclass(frozen=True)
class DiscreteVectorField:
    pairs: tuple[tuple[Face, Face], ...]

    def __post_init__(self):
        seen: set[Face] = set()
        for alpha, beta in self.pairs:
            if not alpha:
                raise PairingConflict("the empty face is never paired")
            if len(beta) != len(alpha) + 1 or not set(alpha) < set(beta):
                raise PairingConflict(f"{alpha} is not a facet of {beta}")
            for face in (alpha, beta):
                if face in seen:
                    raise PairingConflict(f"face {face} appears in two pairs")
                seen.add(face)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Sequence[int], Sequence[int]]]):
        return cls(tuple((tuple(sorted(a)), tuple(sorted(b))) for a, b in pairs))

    @property
    def covered(self) -> set[Face]:
        return {f for pair in self.pairs for f in pair}

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class MorseReport:
    critical: list[Face]
    counts: Counter  # dimension q -> number of critical q-cells
    acyclic: bool


def vertex_matching(
    b: Sequence[int], v: int, params: Parameters, faces: FaceList | None = None
) -> DiscreteVectorField:
    """Pairs sigma < sigma + {v} for nonempty sigma missing v."""
    if faces is None:
        faces = enumerate_faces(b, params)
    members = _face_set(faces)
    if (v,) not in members:
        raise ValueError(f"{v} is not a vertex of the complex")
    pairs = []
    for layer in faces[1:]:
        for face in layer:
            if v in face:
                continue
            up = tuple(sorted(face + (v,)))
            if up in members:
                pairs.append((face, up))
    return DiscreteVectorField(tuple(pairs))


def check_acyclic(field: DiscreteVectorField, faces: FaceList | None = None) -> bool:
    """True iff the field has no nontrivial closed V-path.

    Arcs go alpha -> beta along each pair and beta -> alpha' for every other
    facet alpha' of beta; a closed V-path is exactly a directed cycle.
    """
    if faces is not None:
        members = _face_set(faces)
        for face in field.covered:
            if face not in members:
                raise PairingConflict(f"{face} is not a face of the complex")
    up = dict(field.pairs)

    def successors(node: Face) -> list[Face]:
        if node in up:
            return [up[node]]
        # node is the top of a pair; step down to the other facets
        lower = next_down.get(node)
        if lower is None:
            return []
        out = []
        for pos in range(len(node)):
            facet = node[:pos] + node[pos + 1:]
            if facet != lower and facet:
                out.append(facet)
        return out

    next_down = {beta: alpha for alpha, beta in field.pairs}
    white, grey, black = 0, 1, 2
    color: dict[Face, int] = {}
    for start in up:
        if color.get(start, white) != white:
            continue
        color[start] = grey
        stack = [(start, iter(successors(start)))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = black
                stack.pop()
                continue
            state = color.get(nxt, white)
            if state == grey:
                return False
            if state == white:
                color[nxt] = grey
                stack.append((nxt, iter(successors(nxt))))
    return True


def morse_report(field: DiscreteVectorField, faces: FaceList) -> MorseReport:
    """Critical cells (nonempty faces outside every pair) and their counts."""
    covered = field.covered
    critical = [f for layer in faces[1:] for f in layer if f not in covered]
    return MorseReport(
        critical, Counter(len(f) - 1 for f in critical), check_acyclic(field, faces)
    )


class MorseBound(NamedTuple):
    value: int
    vertex: int  # first vertex attaining the minimum


def morse_bound(
    b: Sequence[int], q: int, params: Parameters, faces: FaceList | None = None
) -> MorseBound:
    """N_q = min over vertices v of the number of q-faces in the anti-star of v."""
    if faces is None:
        faces = enumerate_faces(b, params)
    verts = vertices(faces)
    if not verts:
        raise ValueError("the complex has no vertices")
    best = None
    for v in verts:
        count = anti_star(b, v, params, faces).counts[q]
        if best is None or count < best.value:
            best = MorseBound(count, v)
    return best


def augmented_matching(
    b: Sequence[int],
    v: int,
    extra_pairs: Iterable[tuple[Sequence[int], Sequence[int]]],
    params: Parameters,
    faces: FaceList | None = None,
) -> MorseReport:
    """Vertex matching along ``v`` plus ``extra_pairs``; raises on overlap."""
    if faces is None:
        faces = enumerate_faces(b, params)
    base = vertex_matching(b, v, params, faces)
    extra = DiscreteVectorField.from_pairs(extra_pairs)
    clash = base.covered & extra.covered
    if clash:
        raise PairingConflict(f"faces already matched: {sorted(clash)}")
    return morse_report(DiscreteVectorField(base.pairs + extra.pairs), faces)
