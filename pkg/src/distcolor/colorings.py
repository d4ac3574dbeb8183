"""Explicit proper colorings of G(n, r, s) and an independent verifier.

Four construction families:

- ``theorem1``: G(n, 3, 2) in n - 2 (or n - 1) colors, available when a
  prime p in {n - 2, n - 1} has 2 of odd multiplicative order. Built from
  a two-coloring of the "circle graph" over Z_p.
- ``sum``: G(n, r, r - 1) in n colors, label = sum of elements mod n.
- ``bose-chowla``: G(n, r, s) for prime n in n^(r-s) - 1 colors, label =
  sum of B_(r-s) set members picked by the vertex's elements.
- ``symmetric``: G(n, r, s) for prime n in n^(r-s) colors, label = the
  first r - s elementary symmetric polynomial values mod n, packed base n.

``verify_proper`` checks any coloring edge by edge using only the
adjacency predicate and the label array, so it is independent of every
construction above.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .distgraph import GraphSpec, RSubset, edges, is_edge, vertex_count, vertices
from .errors import BadInput, IncompleteColoring, InvalidPrime, NotPrime, OddCycle, UnsupportedN
from .gf import bose_chowla_set
from .numtheory import check_t1_condition, is_prime, mod_inverse

# verify_proper scans all vertex pairs up to this many vertices; beyond
# that it walks the edge stream (same deterministic order either way).
PAIRWISE_VERIFY_MAX = 2000


class Method(str, Enum):
    """Provenance tag for a coloring construction."""

    THEOREM1 = "theorem1"
    SUM_MOD_N = "sum"
    BOSE_CHOWLA = "bose-chowla"
    SYMMETRIC_POLY = "symmetric"


@dataclass(frozen=True)
class Coloring:
    """A total color assignment, indexed by colex vertex rank."""

    spec: GraphSpec
    labels: tuple[int, ...]
    method: Method
    palette_bound: int

    def __post_init__(self) -> None:
        if len(self.labels) != vertex_count(self.spec):
            raise IncompleteColoring(
                f"{len(self.labels)} labels for {vertex_count(self.spec)} vertices"
            )
        if any(not isinstance(c, int) or not 0 <= c < self.palette_bound for c in self.labels):
            raise BadInput(f"labels must be integers in [0, {self.palette_bound})")

    @property
    def colors_used(self) -> int:
        return len(set(self.labels))


@dataclass(frozen=True)
class Violation:
    """A monochromatic edge found by the verifier."""

    u: RSubset
    v: RSubset
    shared_color: int


@dataclass(frozen=True)
class Circle:
    """Cyclic orbit of a point of Z_p under t -> (t + i) / 2.

    ``points`` starts at the smallest member and follows the map, so two
    rotations of the same orbit compare equal. The parameter i is the
    unique fixed point of the map and never lies on the circle.
    """

    parameter: int
    points: tuple[int, ...]


@dataclass(frozen=True)
class CircleGraph:
    """All circles mod p, adjacent when their parameter/start pairs swap.

    ``circles`` is sorted by (parameter, smallest point); ``adjacency``
    holds sorted neighbor indices per circle.
    """

    p: int
    circles: tuple[Circle, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def _index(self) -> dict[Circle, int]:
        return {c: i for i, c in enumerate(self.circles)}

    def index_of(self, c: Circle) -> int:
        return self._index[c]


@dataclass(frozen=True)
class CircleBipartition:
    """A proper 2-coloring of a circle graph (classes 1 and 2)."""

    p: int
    graph: CircleGraph
    classes: tuple[int, ...]

    def class_of(self, c: Circle) -> int:
        return self.classes[self.graph.index_of(c)]


def _require_odd_prime_gt3(p: int) -> None:
    if p <= 3 or not is_prime(p):
        raise InvalidPrime(f"need a prime p > 3, got {p}")


def circle(p: int, i: int, j: int) -> Circle:
    """The circle through j with parameter i, generated iteratively."""
    _require_odd_prime_gt3(p)
    i %= p
    j %= p
    if i == j:
        raise BadInput("the parameter is a fixed point, pick j != i")
    inv2 = mod_inverse(2, p)
    pts = [j]
    t = (j + i) * inv2 % p
    while t != j:
        pts.append(t)
        t = (t + i) * inv2 % p
    lo = pts.index(min(pts))
    return Circle(i, tuple(pts[lo:] + pts[:lo]))


def circle_graph(p: int) -> CircleGraph:
    """Build every circle mod p and join C(i, j) with C(j, i).

    For each parameter i the circles partition Z_p minus {i}; scanning
    start points in ascending order therefore discovers each orbit at its
    smallest member, which fixes the canonical vertex order.
    """
    _require_odd_prime_gt3(p)
    circles: list[Circle] = []
    locate: dict[tuple[int, int], int] = {}
    for i in range(p):
        seen: set[int] = set()
        for j in range(p):
            if j == i or j in seen:
                continue
            c = circle(p, i, j)
            idx = len(circles)
            circles.append(c)
            for t in c.points:
                locate[(i, t)] = idx
            seen.update(c.points)
    edges = set()
    for i in range(p):
        for j in range(i + 1, p):
            a, b = locate[(i, j)], locate[(j, i)]
            edges.add((min(a, b), max(a, b)))
    assert len(edges) == p * (p - 1) // 2  # one edge per unordered parameter pair
    adj: list[list[int]] = [[] for _ in circles]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return CircleGraph(p, tuple(circles), tuple(tuple(sorted(x)) for x in adj))


def bipartition_circles(p: int) -> CircleBipartition:
    """Two-color the circle graph by breadth-first layering.

    Deterministic: each component is rooted at its smallest circle in
    canonical order, neighbors are visited ascending, and even layers get
    class 1. Raises OddCycle on a layering conflict, which signals that p
    violates the odd-order precondition.
    """
    g = circle_graph(p)
    classes = [0] * len(g.circles)
    for root in range(len(g.circles)):
        if classes[root]:
            continue
        classes[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if classes[w] == 0:
                    classes[w] = 3 - classes[v]
                    queue.append(w)
                elif classes[w] == classes[v]:
                    raise OddCycle(f"odd cycle in the circle graph mod {p}")
    return CircleBipartition(p, g, tuple(classes))


def f_select(bip: CircleBipartition, index: int, x: int, y: int) -> int:
    """The pair functions f_1, f_2: pick one element of {x, y} each.

    f_1 returns the parameter side when the circle through (x, y) is in
    class 1, the start side otherwise; f_2 picks the opposite element.
    Symmetry in (x, y) holds because swapping arguments swaps the circle
    for its neighbor, which sits in the other class.
    """
    if index not in (1, 2):
        raise BadInput(f"index must be 1 or 2, got {index}")
    if x % bip.p == y % bip.p:
        raise BadInput("need two distinct residues")
    first = bip.class_of(circle(bip.p, x, y)) == 1
    if index == 1:
        return x if first else y
    return y if first else x


def color_theorem1(n: int) -> Coloring:
    """Color G(n, 3, 2) with n - 2 (preferred) or n - 1 colors.

    Requires a prime p in {n - 2, n - 1}, p > 3, for which no power of 2
    is -1 mod p. Triples split by how they meet the top one or two ground
    elements:

    - no special element: label x1 + x2 + x3 mod p,
    - both specials (only when p = n - 2): label 3 * x1 mod p,
    - one special m: label x1 + x2 + f_i(x1, x2) mod p, with f_1 for the
      lower special and f_2 for the higher one.

    The n = p + 1 case is the p + 2 coloring restricted to triples that
    avoid the largest ground element, so no relabeling is needed.
    """
    for p in (n - 2, n - 1):
        if p > 3 and is_prime(p) and check_t1_condition(p).condition_holds:
            break
    else:
        raise UnsupportedN(f"no qualifying prime at n - 2 or n - 1 for n = {n}")
    bip = bipartition_circles(p)
    spec = GraphSpec(n, 3, 2)
    labels = []
    for v in vertices(spec):
        inside = [x for x in v if x < p]
        special = [x for x in v if x >= p]
        if not special:
            c = sum(inside) % p
        elif len(special) == 2:
            c = 3 * inside[0] % p
        else:
            x1, x2 = inside
            index = 1 if special[0] == p else 2
            c = (x1 + x2 + f_select(bip, index, x1, x2)) % p
        labels.append(c)
    return Coloring(spec, tuple(labels), Method.THEOREM1, p)


def color_sum(n: int, r: int) -> Coloring:
    """Color G(n, r, r - 1) with n colors: label = sum of elements mod n.

    Adjacent vertices differ in one element, so their labels differ by a
    nonzero residue.
    """
    spec = GraphSpec(n, r, r - 1)
    labels = tuple(sum(v) % n for v in vertices(spec))
    return Coloring(spec, labels, Method.SUM_MOD_N, n)


def _symmetric_values(v: RSubset, h: int, mod: int) -> list[int]:
    """First h elementary symmetric polynomial values of v, mod mod."""
    coeffs = [1] + [0] * h
    for x in v:
        for i in range(h, 0, -1):
            coeffs[i] = (coeffs[i] + coeffs[i - 1] * x) % mod
    return coeffs[1:]


def color_symmetric(n: int, r: int, s: int) -> Coloring:
    """Color G(n, r, s) for prime n with at most n^(r-s) colors.

    The label packs (sigma_1, ..., sigma_h) mod n in base n, sigma_1 most
    significant, where h = r - s. Two adjacent vertices sharing s
    elements and agreeing on all h values would, by Vieta's relations,
    have equal remainders, forcing the vertices to coincide.
    """
    if not is_prime(n):
        raise NotPrime(f"{n} is not prime")
    spec = GraphSpec(n, r, s)
    h = r - s
    labels = []
    for v in vertices(spec):
        label = 0
        for value in _symmetric_values(v, h, n):
            label = label * n + value
        labels.append(label)
    return Coloring(spec, tuple(labels), Method.SYMMETRIC_POLY, n**h)


def color_bose_chowla(n: int, r: int, s: int) -> Coloring:
    """Color G(n, r, s) for prime n with at most n^(r-s) - 1 colors.

    Each ground element e is assigned the e-th member a_e of a B_h set
    mod n^h - 1 (h = r - s) and a vertex gets the sum of its members'
    weights. Adjacent vertices differ in two h-element multisets of
    weights, whose sums are distinct by the B_h property. For h = 1 the
    identity weights a_e = e mod n suffice (a B_1 set), giving the plain
    sum coloring with palette n.

    Same-label vertices meet in strictly fewer than s elements: a shared
    core of exactly s would make the two complementary h-multisets
    distinct with equal weight sums.
    """
    if not is_prime(n):
        raise NotPrime(f"{n} is not prime")
    spec = GraphSpec(n, r, s)
    h = r - s
    if h == 1:
        weights: tuple[int, ...] = tuple(range(n))
        modulus = n
    else:
        bh = bose_chowla_set(n, h)
        weights = bh.elements
        modulus = bh.modulus
    labels = tuple(sum(weights[x] for x in v) % modulus for v in vertices(spec))
    return Coloring(spec, labels, Method.BOSE_CHOWLA, modulus)


def verify_proper(spec: GraphSpec, coloring: Coloring) -> Violation | None:
    """Return the first monochromatic edge, or None when proper.

    Scans vertex pairs in ascending (rank, rank) order; every reported
    pair is re-checked with the adjacency predicate, so the verdict rests
    only on is_edge and the label array.
    """
    if coloring.spec != spec:
        raise BadInput(f"coloring is for {coloring.spec}, not {spec}")
    count = vertex_count(spec)
    if len(coloring.labels) != count:
        raise IncompleteColoring(f"{len(coloring.labels)} labels for {count} vertices")
    verts = vertices(spec)
    labels = coloring.labels
    if count <= PAIRWISE_VERIFY_MAX:
        for a in range(count):
            la, va = labels[a], verts[a]
            for b in range(a + 1, count):
                if la == labels[b] and is_edge(spec, va, verts[b]):
                    return Violation(va, verts[b], la)
        return None
    for a, b in edges(spec):
        if labels[a] == labels[b] and is_edge(spec, verts[a], verts[b]):
            return Violation(verts[a], verts[b], labels[a])
    return None
