"""Vertex enumeration, ranking, and adjacency for the graphs G(n, r, s).

Vertices are the r-element subsets of {0, ..., n-1}, kept as strictly
increasing tuples. Two vertices are adjacent when their intersection has
exactly s elements. Dense vertex indexing uses the combinatorial number
system in colexicographic order, so ranks are stable as n grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import BadInput, OutOfRange, TooLarge

RSubset = tuple[int, ...]

# Full edge enumeration is refused beyond this many vertices.
MAX_ENUMERATION_VERTICES = 10**6


@dataclass(frozen=True)
class GraphSpec:
    """The triple (n, r, s) defining a distance graph G(n, r, s)."""

    n: int
    r: int
    s: int

    def __post_init__(self) -> None:
        if not 0 <= self.s < self.r <= self.n:
            raise BadInput(f"need 0 <= s < r <= n, got (n={self.n}, r={self.r}, s={self.s})")


def vertex_count(spec: GraphSpec) -> int:
    """Number of vertices, C(n, r)."""
    return math.comb(spec.n, spec.r)


def degree(spec: GraphSpec) -> int:
    """Common degree of every vertex, C(r, s) * C(n - r, r - s)."""
    return math.comb(spec.r, spec.s) * math.comb(spec.n - spec.r, spec.r - spec.s)


def edge_count(spec: GraphSpec) -> int:
    """Number of edges by the handshake identity."""
    return vertex_count(spec) * degree(spec) // 2


def _validate_vertex(spec: GraphSpec, v: RSubset) -> None:
    if len(v) != spec.r:
        raise BadInput(f"vertex {v} does not have {spec.r} elements")
    if any(v[i] >= v[i + 1] for i in range(len(v) - 1)):
        raise BadInput(f"vertex {v} is not strictly increasing")
    if v and (v[0] < 0 or v[-1] >= spec.n):
        raise BadInput(f"vertex {v} leaves the ground set of size {spec.n}")


def rank(spec: GraphSpec, v: RSubset) -> int:
    """Colexicographic rank of a vertex in [0, C(n, r))."""
    _validate_vertex(spec, v)
    return sum(math.comb(c, j + 1) for j, c in enumerate(v))


def unrank(spec: GraphSpec, k: int) -> RSubset:
    """Vertex with colexicographic rank k; inverse of rank."""
    if not 0 <= k < vertex_count(spec):
        raise OutOfRange(f"rank {k} outside [0, {vertex_count(spec)})")
    out = []
    for j in range(spec.r, 0, -1):
        c = j - 1
        while math.comb(c + 1, j) <= k:
            c += 1
        out.append(c)
        k -= math.comb(c, j)
    return tuple(reversed(out))


def vertices(spec: GraphSpec) -> list[RSubset]:
    """All vertices in colexicographic (rank) order."""
    if vertex_count(spec) > MAX_ENUMERATION_VERTICES:
        raise TooLarge(f"{vertex_count(spec)} vertices exceeds the enumeration cap")
    return sorted(combinations(range(spec.n), spec.r), key=lambda t: t[::-1])


def is_edge(spec: GraphSpec, u: RSubset, v: RSubset) -> bool:
    """True iff u and v are distinct and share exactly s elements."""
    return u != v and len(set(u) & set(v)) == spec.s


def neighbors(spec: GraphSpec, v: RSubset) -> list[RSubset]:
    """All neighbors of v, in colexicographic order.

    A neighbor keeps exactly s elements of v and draws the other r - s
    from outside v, so each one is produced exactly once.
    """
    _validate_vertex(spec, v)
    inside = set(v)
    outside = [x for x in range(spec.n) if x not in inside]
    out = []
    for keep in combinations(v, spec.s):
        for new in combinations(outside, spec.r - spec.s):
            out.append(tuple(sorted(keep + new)))
    out.sort(key=lambda t: t[::-1])
    return out


def edges(spec: GraphSpec) -> Iterator[tuple[int, int]]:
    """Stream every unordered edge once as a (rank, rank) pair.

    Pairs come in ascending lexicographic order of (low rank, high rank),
    which callers rely on for deterministic first-violation reports.
    """
    count = vertex_count(spec)
    if count > MAX_ENUMERATION_VERTICES:
        raise TooLarge(f"{count} vertices exceeds the enumeration cap")
    for ru in range(count):
        u = unrank(spec, ru)
        for rv in sorted(rank(spec, w) for w in neighbors(spec, u)):
            if rv > ru:
                yield ru, rv
