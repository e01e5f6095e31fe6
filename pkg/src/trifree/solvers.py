"""Exact combinatorial solvers: independence number and short-cycle counts.

Everything here is deterministic: ties are broken toward the lowest vertex
index, so witnesses are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, GraphError, _bits, _popcount


@dataclass(frozen=True)
class IndependenceResult:
    alpha: int
    witness: frozenset[int]
    node_count: int


def _greedy_reduce(rows: tuple[int, ...], free: int, chosen: int) -> tuple[int, int]:
    """Take degree-0/1 vertices of the residual graph greedily (optimal)."""
    changed = True
    while changed:
        changed = False
        m = free
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nb = rows[v] & free
            if _popcount(nb) <= 1:
                free &= ~((1 << v) | nb)
                chosen |= 1 << v
                changed = True
                break
    return free, chosen


def _clique_cover_bound(rows: tuple[int, ...], free: int) -> int:
    """Upper bound on the residual independence number.

    Greedy clique cover: pair each vertex with an unmatched neighbour where
    possible (a greedy colouring of the complement restricted to cliques of
    size <= 2, which is all there is in triangle-free residuals).
    """
    bound = 0
    m = free
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        bound += 1
        nb = rows[v] & m
        if nb:
            m &= ~(nb & -nb)
    return bound


class _MisSearch:
    __slots__ = ("rows", "best", "best_set", "nodes")

    def __init__(self, rows: tuple[int, ...]):
        self.rows = rows
        self.best = -1
        self.best_set = 0
        self.nodes = 0

    def run(self, free: int) -> None:
        self._search(free, 0)

    def _search(self, free: int, chosen: int) -> None:
        self.nodes += 1
        rows = self.rows
        free, chosen = _greedy_reduce(rows, free, chosen)
        size = _popcount(chosen)
        if not free:
            if size > self.best:
                self.best = size
                self.best_set = chosen
            return
        if size + _clique_cover_bound(rows, free) <= self.best:
            return
        # branch on a maximum-degree vertex, lowest index on ties
        branch = -1
        branch_deg = -1
        m = free
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = _popcount(rows[v] & free)
            if d > branch_deg:
                branch_deg = d
                branch = v
        vbit = 1 << branch
        self._search(free & ~(vbit | rows[branch]), chosen | vbit)  # include
        self._search(free & ~vbit, chosen)  # exclude


def independence_number(g: Graph) -> IndependenceResult:
    """Exact maximum independent set with one witness."""
    search = _MisSearch(g.rows)
    search.run((1 << g.n) - 1)
    return IndependenceResult(
        alpha=search.best,
        witness=frozenset(_bits(search.best_set)),
        node_count=search.nodes,
    )


def max_independent_avoiding(g: Graph, avoid: Iterable[int]) -> int:
    """Size of the largest independent set disjoint from `avoid`."""
    mask = g._mask(avoid)
    free = ((1 << g.n) - 1) & ~mask
    if not free:
        return 0
    search = _MisSearch(g.rows)
    search.run(free)
    return search.best


def maximum_independent_sets(g: Graph) -> list[int]:
    """All maximum independent sets, as bit masks, in increasing mask order."""
    alpha = independence_number(g).alpha
    rows = g.rows
    out: list[int] = []

    def rec(allowed: int, cur: int, size: int) -> None:
        if size == alpha:
            out.append(cur)
            return
        # prune: not enough vertices left
        if size + _popcount(allowed) < alpha:
            return
        m = allowed
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            rec(m & ~rows[v], cur | (1 << v), size + 1)

    rec((1 << g.n) - 1, 0, 0)
    return out


def brute_force_alpha(g: Graph) -> int:
    """Subset-enumeration oracle; use only on small orders."""
    if g.n > 20:
        raise GraphError("brute-force alpha is for order <= 20")
    best = 0
    for mask in range(1 << g.n):
        ok = True
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if g.rows[v] & mask:
                ok = False
                break
        if ok:
            best = max(best, _popcount(mask))
    return best


# -- cycle counting -----------------------------------------------------------

_CYCLE_RANGE = range(3, 9)


@dataclass(frozen=True)
class CycleCount:
    length: int
    total: int
    through: dict[int, int]


def cycles(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """All k-cycles, each exactly once, as vertex tuples.

    Rooted path extension: a cycle is yielded with its minimum vertex first,
    and only in the orientation whose second vertex is smaller than its last.
    """
    if k not in _CYCLE_RANGE:
        raise GraphError(f"cycle length {k} outside supported range 3..8")
    n = g.n
    rows = g.rows
    path = [0] * k

    def extend(root: int, last: int, used: int, depth: int) -> Iterator[tuple[int, ...]]:
        if depth == k:
            if (rows[last] >> root) & 1 and path[1] < path[k - 1]:
                yield tuple(path)
            return
        for w in _bits(rows[last] & ~used):
            if w <= root:
                continue
            path[depth] = w
            used |= 1 << w
            yield from extend(root, w, used, depth + 1)
            used &= ~(1 << w)

    for r in range(n):
        path[0] = r
        yield from extend(r, r, 1 << r, 1)


def count_cycles(g: Graph, k: int) -> CycleCount:
    """N(C_k; G) with per-vertex through counts."""
    through = {v: 0 for v in range(g.n)}
    total = 0
    for cyc in cycles(g, k):
        total += 1
        for v in cyc:
            through[v] += 1
    return CycleCount(length=k, total=total, through=through)


def count_cycles_through(g: Graph, k: int, vs: Iterable[int]) -> int:
    """N(C_k; G, S): cycles meeting S in at least one vertex, counted once."""
    mask = g._mask(vs)
    total = 0
    for cyc in cycles(g, k):
        if any((mask >> v) & 1 for v in cyc):
            total += 1
    return total


def count_c4(g: Graph) -> int:
    """N(C_4; G) by the diagonal-pair formula (each 4-cycle has two diagonals)."""
    total = 0
    rows = g.rows
    for u in range(g.n):
        for w in range(u + 1, g.n):
            c = _popcount(rows[u] & rows[w])
            total += c * (c - 1) // 2
    return total // 2


def e2_half_sum(g: Graph) -> int:
    """e^2(G): half the sum of squared degrees.

    The sum is always even (d^2 = d mod 2, so it has the parity of 2e),
    hence the halved value is an integer for every graph.
    """
    s = sum(d * d for d in g.degrees())
    assert s % 2 == 0
    return s // 2
