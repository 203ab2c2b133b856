"""Lattice points of the dilated simplex and semigroup bookkeeping.

The generating set of the d-th Veronese ring of P^m is the set of all
exponent vectors a in N^{m+1} with |a| = d.  Every other module addresses
these points by their 1-based position in *decreasing* lexicographic order,
so ``points[0]`` is (d, 0, ..., 0) and ``points[-1]`` is (0, ..., 0, d).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator, Sequence

Exponent = tuple[int, ...]
MultiDegree = tuple[int, ...]

#: Desk-scale guard on the number of generators.
MAX_POINTS = 2**20


def _compositions(total: int, parts: int) -> Iterator[Exponent]:
    # first coordinate runs downward, which yields decreasing lex order
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


@dataclass(frozen=True)
class Parameters:
    """Projective dimension ``m`` and Veronese degree ``d``."""

    m: int
    d: int

    def __post_init__(self):
        for name in ("m", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")
            if value < 2:
                raise ValueError(f"{name} must be >= 2, got {value}")
        if comb(self.d + self.m, self.m) > MAX_POINTS:
            raise ValueError(
                f"C(d+m, m) = {comb(self.d + self.m, self.m)} exceeds {MAX_POINTS}"
            )

    @property
    def n(self) -> int:
        return comb(self.d + self.m, self.m)

    @cached_property
    def points(self) -> tuple[Exponent, ...]:
        pts = tuple(_compositions(self.d, self.m + 1))
        assert len(pts) == self.n
        return pts

    def point(self, i: int) -> Exponent:
        """The 1-based ``i``-th generator."""
        if not 1 <= i <= self.n:
            raise IndexError(f"point index {i} outside 1..{self.n}")
        return self.points[i - 1]

    @cached_property
    def _prefix(self) -> tuple[tuple[int, ...], ...]:
        # _prefix[t][j] = sum of coordinate t over the first j points
        table = []
        for t in range(self.m + 1):
            acc = [0]
            for a in self.points:
                acc.append(acc[-1] + a[t])
            table.append(tuple(acc))
        return tuple(table)


def enumerate_points(params: Parameters) -> list[Exponent]:
    """All C(d+m, m) exponents in decreasing lexicographic order."""
    return list(params.points)


def as_degree(b: Sequence[int], params: Parameters) -> MultiDegree:
    """Validate ``b`` as a multidegree of length m+1 and return it as a tuple."""
    b = tuple(int(x) for x in b)
    if len(b) != params.m + 1:
        raise ValueError(f"degree {b} must have {params.m + 1} coordinates")
    if any(x < 0 for x in b):
        raise ValueError(f"degree {b} has a negative coordinate")
    return b


def semigroup_member(b: Sequence[int], params: Parameters) -> bool:
    """True iff ``b`` lies in the semigroup generated by the points.

    Because the generators are *all* lattice points of the dilated simplex,
    membership reduces to nonnegativity plus |b| divisible by d.
    """
    if len(b) != params.m + 1:
        return False
    return all(x >= 0 for x in b) and sum(b) % params.d == 0


def degree_level(b: Sequence[int], params: Parameters) -> int:
    """j = |b| / d for a semigroup element ``b``."""
    if not semigroup_member(b, params):
        raise ValueError(f"{tuple(b)} is not in the Veronese semigroup")
    return sum(b) // params.d


def prefix_coord_sum(params: Parameters, coord: int, count: int) -> int:
    """Sum of coordinate ``coord`` over the first ``min(count, n)`` points."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if not 0 <= coord <= params.m:
        raise IndexError(f"coordinate {coord} outside 0..{params.m}")
    return params._prefix[coord][min(count, params.n)]


def degrees_on_slice(params: Parameters, j: int) -> Iterator[MultiDegree]:
    """Every b in N^{m+1} with |b| = d*j, in decreasing lex order."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return _compositions(params.d * j, params.m + 1)
