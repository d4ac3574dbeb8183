"""Exact chromatic and independence numbers for small graphs.

Both solvers run branch and bound over bitset adjacency rows, stay fully
deterministic, and respect node/time budgets: hitting a budget yields an
``Exhausted`` value carrying the best proven bounds instead of raising.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .distgraph import GraphSpec, edges, vertex_count
from .errors import BadInput, TooLarge


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Symmetric, irreflexive adjacency held as one bitmask row per vertex."""

    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.order:
            raise BadInput(f"{len(self.rows)} rows for order {self.order}")
        full = (1 << self.order) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise BadInput(f"row {i} has bits outside the vertex range")
            if row >> i & 1:
                raise BadInput(f"self-loop at vertex {i}")
        for i, row in enumerate(self.rows):
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                if not self.rows[j] >> i & 1:
                    raise BadInput(f"edge {i}-{j} is not symmetric")
                m &= m - 1

    @classmethod
    def from_edges(cls, order: int, edge_list) -> "AdjacencyMatrix":
        rows = [0] * order
        for a, b in edge_list:
            if a == b:
                raise BadInput(f"self-loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(order, tuple(rows))

    @classmethod
    def from_graph_spec(cls, spec: GraphSpec) -> "AdjacencyMatrix":
        count = vertex_count(spec)
        if count > 5000:
            raise TooLarge(f"{count} vertices is too large to materialize")
        return cls.from_edges(count, edges(spec))

    @classmethod
    def complete(cls, m: int) -> "AdjacencyMatrix":
        full = (1 << m) - 1
        return cls(m, tuple(full ^ (1 << v) for v in range(m)))

    @classmethod
    def empty(cls, m: int) -> "AdjacencyMatrix":
        return cls(m, (0,) * m)


@dataclass(frozen=True)
class SolveLimits:
    """Search budgets; every field must be positive."""

    max_vertices: int = 120
    max_nodes: int = 5_000_000
    time_budget: float = 60.0

    def __post_init__(self) -> None:
        if self.max_vertices <= 0 or self.max_nodes <= 0 or self.time_budget <= 0:
            raise BadInput("all solve limits must be positive")


@dataclass(frozen=True)
class Exhausted:
    """Budget ran out before a proof; carries the best bounds found."""

    lower: int
    upper: int | None = None


CHI_LIMITS = SolveLimits(max_vertices=120)
ALPHA_LIMITS = SolveLimits(max_vertices=500)


def _dsatur_assignment(g: AdjacencyMatrix) -> list[int]:
    """Greedy coloring in saturation-degree order; returns color per vertex."""
    n = g.order
    colors = [-1] * n
    nbr_masks = [0] * n
    degrees = [row.bit_count() for row in g.rows]
    for _ in range(n):
        pick, key = -1, (-1, -1)
        for v in range(n):
            if colors[v] < 0:
                k = (nbr_masks[v].bit_count(), degrees[v])
                if k > key:
                    pick, key = v, k
        c = 0
        while nbr_masks[pick] >> c & 1:
            c += 1
        colors[pick] = c
        m = g.rows[pick]
        while m:
            w = (m & -m).bit_length() - 1
            nbr_masks[w] |= 1 << c
            m &= m - 1
    return colors


def greedy_coloring(g: AdjacencyMatrix) -> int:
    """Number of colors the saturation-degree greedy uses; bounds chi above."""
    if g.order == 0:
        return 0
    return max(_dsatur_assignment(g)) + 1


def _greedy_clique(g: AdjacencyMatrix) -> list[int]:
    """Grow a clique from a max-degree seed; bounds chi below."""
    n = g.order
    if n == 0:
        return []
    seed = max(range(n), key=lambda v: (g.rows[v].bit_count(), -v))
    clique = [seed]
    cand = g.rows[seed]
    while cand:
        pick, best = -1, (-1, 0)
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            k = ((g.rows[v] & cand).bit_count(), -v)
            if k > best:
                pick, best = v, k
            m &= m - 1
        clique.append(pick)
        cand &= g.rows[pick]
    return clique


def exact_chromatic_number(
    g: AdjacencyMatrix, limits: SolveLimits | None = None
) -> int | Exhausted:
    """Exact chi(g) by DSATUR branch and bound.

    A greedily found clique is precolored (sound by color symmetry); the
    lower bound is the larger of the clique size and ceil(V / alpha),
    where alpha comes from a node-capped independence probe. Search
    exhaustion below the incumbent proves optimality. Deterministic
    whenever the budgets are not hit.
    """
    limits = limits or CHI_LIMITS
    if g.order > limits.max_vertices:
        raise TooLarge(f"{g.order} vertices exceeds the solver cap {limits.max_vertices}")
    n = g.order
    if n == 0:
        return 0
    deadline = time.monotonic() + limits.time_budget
    clique = _greedy_clique(g)
    lb = len(clique)
    greedy = _dsatur_assignment(g)
    best = max(greedy) + 1
    best_assign = greedy[:]
    if lb < best:
        probe = SolveLimits(
            max_vertices=limits.max_vertices,
            max_nodes=200_000,
            time_budget=limits.time_budget,
        )
        alpha = exact_independence_number(g, probe)
        if not isinstance(alpha, Exhausted):
            lb = max(lb, -(-n // alpha))
    if lb >= best:
        return best

    colors = [-1] * n
    nbr_masks = [0] * n
    degrees = [row.bit_count() for row in g.rows]
    for idx, v in enumerate(clique):
        colors[v] = idx
        m = g.rows[v]
        while m:
            w = (m & -m).bit_length() - 1
            nbr_masks[w] |= 1 << idx
            m &= m - 1
    nodes = 0
    hit = False

    def walk(used: int, remaining: int) -> None:
        nonlocal best, best_assign, nodes, hit
        if hit or best == lb:
            return
        if remaining == 0:
            best = used  # branching already kept used < best
            best_assign = colors[:]
            return
        nodes += 1
        if nodes > limits.max_nodes or (nodes & 0xFF == 0 and time.monotonic() > deadline):
            hit = True
            return
        pick, key = -1, (-1, -1)
        for v in range(n):
            if colors[v] < 0:
                k = (nbr_masks[v].bit_count(), degrees[v])
                if k > key:
                    pick, key = v, k
        for c in range(min(used + 1, best - 1)):
            if nbr_masks[pick] >> c & 1:
                continue
            colors[pick] = c
            bit = 1 << c
            touched = []
            m = g.rows[pick]
            while m:
                w = (m & -m).bit_length() - 1
                if colors[w] < 0 and not nbr_masks[w] & bit:
                    nbr_masks[w] |= bit
                    touched.append(w)
                m &= m - 1
            walk(max(used, c + 1), remaining - 1)
            for w in touched:
                nbr_masks[w] ^= bit
            colors[pick] = -1
            if hit or best == lb:
                return

    walk(len(clique), n - len(clique))
    assert _proper(g, best_assign, best)
    if hit:
        return Exhausted(lower=lb, upper=best)
    return best


def _proper(g: AdjacencyMatrix, assign: list[int], k: int) -> bool:
    if any(not 0 <= c < k for c in assign):
        return False
    for v in range(g.order):
        m = g.rows[v]
        while m:
            w = (m & -m).bit_length() - 1
            if assign[v] == assign[w]:
                return False
            m &= m - 1
    return True


def exact_independence_number(
    g: AdjacencyMatrix, limits: SolveLimits | None = None
) -> int | Exhausted:
    """Exact alpha(g) as a maximum clique search on the complement.

    Candidates are bounded by a greedy clique cover (a coloring of the
    complement subgraph), the standard bitset scheme. The certificate set
    is kept and re-checked before returning.
    """
    limits = limits or ALPHA_LIMITS
    if g.order > limits.max_vertices:
        raise TooLarge(f"{g.order} vertices exceeds the solver cap {limits.max_vertices}")
    n = g.order
    if n == 0:
        return 0
    full = (1 << n) - 1
    # clique search on the complement; relabel by descending complement
    # degree, which sharpens the greedy clique-cover bound
    comp0 = [~g.rows[v] & (full ^ (1 << v)) for v in range(n)]
    label = sorted(range(n), key=lambda v: (-comp0[v].bit_count(), v))
    pos = {v: i for i, v in enumerate(label)}
    comp = [0] * n
    for v in range(n):
        m = comp0[v]
        while m:
            w = (m & -m).bit_length() - 1
            comp[pos[v]] |= 1 << pos[w]
            m &= m - 1

    # greedy independent set in g (original labels), lowest degree first
    chosen_mask = 0
    blocked = 0
    for v in sorted(range(n), key=lambda v: (g.rows[v].bit_count(), v)):
        if not blocked >> v & 1:
            chosen_mask |= 1 << v
            blocked |= g.rows[v] | (1 << v)
    best = chosen_mask.bit_count()
    best_mask = sum(1 << pos[v] for v in range(n) if chosen_mask >> v & 1)

    deadline = time.monotonic() + limits.time_budget
    nodes = 0
    hit = False

    def expand(size: int, cand: int, picked: int) -> None:
        nonlocal best, best_mask, nodes, hit
        nodes += 1
        if nodes > limits.max_nodes or (nodes & 0xFF == 0 and time.monotonic() > deadline):
            hit = True
            return
        if cand == 0:
            if size > best:
                best = size
                best_mask = picked
            return
        if size + cand.bit_count() <= best:
            return
        # greedy clique-cover bound: vertices in one class are pairwise
        # adjacent in g, so each class adds at most one to the set
        order: list[int] = []
        bounds: list[int] = []
        classes = 0
        uncovered = cand
        while uncovered:
            classes += 1
            avail = uncovered
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(comp[v] | (1 << v))
                uncovered ^= 1 << v
                order.append(v)
                bounds.append(size + classes)
        for i in range(len(order) - 1, -1, -1):
            if bounds[i] <= best:
                return
            v = order[i]
            expand(size + 1, cand & comp[v], picked | (1 << v))
            if hit:
                return
            cand ^= 1 << v

    expand(0, full, 0)
    result_mask = sum(1 << label[i] for i in range(n) if best_mask >> i & 1)
    assert _independent(g, result_mask) and result_mask.bit_count() == best
    if hit:
        return Exhausted(lower=best, upper=None)
    return best


def _independent(g: AdjacencyMatrix, mask: int) -> bool:
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        if g.rows[v] & mask:
            return False
        m &= m - 1
    return True
