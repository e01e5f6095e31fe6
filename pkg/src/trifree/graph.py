"""Immutable bit-row graphs, graph6 I/O and the basic metric queries.

Vertices are 0..n-1.  Adjacency is stored as one Python int per vertex
(bit w of row v set iff vw is an edge), so graphs of any order up to the
construction cap share a single representation.  Graphs are immutable and
hashable; every operation returns a new graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

#: Largest order accepted by constructors (family scaling tests need big chains).
ORDER_CAP = 4096

#: Largest order for canonical forms / isomorphism (see canon module).
CANON_CAP = 64


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class ReductionVanishedError(GraphError):
    """Closed-neighbourhood removal would delete every vertex."""


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bit-row adjacency."""

    rows: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n < 1:
            raise GraphError("the empty graph is not a valid Graph")
        if n > ORDER_CAP:
            raise GraphError(f"order {n} exceeds the construction cap {ORDER_CAP}")
        full = (1 << n) - 1
        for v, row in enumerate(self.rows):
            if row >> n:
                raise GraphError(f"row {v} has bits beyond vertex {n - 1}")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in _bits(row & full):
                if not (self.rows[w] >> v) & 1:
                    raise GraphError(f"adjacency not symmetric at ({v},{w})")

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse."""
        if n < 1:
            raise GraphError(f"order must be >= 1, got {n}")
        if n > ORDER_CAP:
            raise GraphError(f"order {n} exceeds the construction cap {ORDER_CAP}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop edge ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(tuple(rows), label)

    def relabel(self, perm: Iterable[int], label: str | None = None) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        perm = list(perm)
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("relabeling is not a permutation of 0..n-1")
        rows = [0] * n
        for v in range(n):
            for w in _bits(self.rows[v]):
                rows[perm[v]] |= 1 << perm[w]
        return Graph(tuple(rows), label)

    def with_label(self, label: str | None) -> "Graph":
        return Graph(self.rows, label)

    # -- size and incidence -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def e(self) -> int:
        return sum(_popcount(r) for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for order {self.n}")

    def _mask(self, vs: Iterable[int]) -> int:
        mask = 0
        for v in vs:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    # -- local metrics -------------------------------------------------------

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return _popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [_popcount(r) for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def second_valency(self, v: int) -> int:
        """Sum of the degrees over the neighbours of v."""
        self._check_vertex(v)
        return sum(_popcount(self.rows[w]) for w in _bits(self.rows[v]))

    def neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return set(_bits(self.rows[v]))

    def closed_neighborhood(self, ws: Iterable[int]) -> set[int]:
        mask = self._mask(ws)
        out = mask
        for w in _bits(mask):
            out |= self.rows[w]
        return set(_bits(out))

    def vertices_at_distance(self, v: int, k: int) -> set[int]:
        """Vertices at distance exactly k from v (breadth-first layers)."""
        self._check_vertex(v)
        if k < 0:
            raise GraphError(f"distance {k} must be >= 0")
        seen = 1 << v
        layer = 1 << v
        for _ in range(k):
            nxt = 0
            for w in _bits(layer):
                nxt |= self.rows[w]
            layer = nxt & ~seen
            seen |= layer
            if not layer:
                break
        return set(_bits(layer))

    # -- global metrics -------------------------------------------------------

    def distance(self, u: int, v: int) -> int | float:
        """Shortest-path distance, math.inf if u and v are disconnected."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        seen = 1 << u
        layer = 1 << u
        d = 0
        while layer:
            d += 1
            nxt = 0
            for w in _bits(layer):
                nxt |= self.rows[w]
            layer = nxt & ~seen
            seen |= layer
            if (layer >> v) & 1:
                return d
        return math.inf

    def components(self) -> list[set[int]]:
        """Connected components as vertex sets, ordered by least vertex."""
        out = []
        remaining = (1 << self.n) - 1
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            comp = self._component_mask(start)
            out.append(set(_bits(comp)))
            remaining &= ~comp
        return out

    def _component_mask(self, v: int) -> int:
        seen = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= self.rows[w]
            frontier = nxt & ~seen
            seen |= nxt
        return seen

    def is_connected(self) -> bool:
        return self._component_mask(0) == (1 << self.n) - 1

    def is_triangle_free(self) -> bool:
        for u in range(self.n):
            ru = self.rows[u]
            for v in _bits(ru):
                if v > u and ru & self.rows[v]:
                    return False
        return True

    def girth(self) -> int | float:
        """Length of a shortest cycle, math.inf for forests."""
        best: int | float = math.inf
        for s in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[s] = 0
            queue = [s]
            while queue:
                nxt: list[int] = []
                for u in queue:
                    if 2 * dist[u] >= best - 1:
                        break
                    for w in _bits(self.rows[u]):
                        if dist[w] == -1:
                            dist[w] = dist[u] + 1
                            parent[w] = u
                            nxt.append(w)
                        elif w != parent[u] and dist[w] >= dist[u]:
                            # non-tree edge closes a cycle through s
                            best = min(best, dist[u] + dist[w] + 1)
                queue = nxt
        return best

    def is_short_cycle_avoiding(self, k: int) -> bool:
        """True iff the graph has no cycle of length <= k (girth >= k+1)."""
        return self.girth() >= k + 1

    # -- derived graphs -------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"loop edge ({u},{v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(tuple(rows))

    def delete_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Remove edges, keeping the vertex set; absent edges are an error."""
        rows = list(self.rows)
        for u, v in edges:
            self._check_vertex(u)
            self._check_vertex(v)
            if not (rows[u] >> v) & 1:
                raise GraphError(f"edge ({u},{v}) not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(tuple(rows))


@dataclass(frozen=True)
class Reduction:
    """A vertex-deleted graph plus the old-vertex -> new-vertex mapping."""

    graph: Graph
    old_to_new: dict[int, int]


def induced(g: Graph, vs: Iterable[int]) -> Reduction:
    """Induced subgraph on vs, compactly renumbered preserving vertex order."""
    mask = g._mask(vs)
    if mask == 0:
        raise ReductionVanishedError("induced subgraph on the empty set")
    keep = list(_bits(mask))
    old_to_new = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for i, v in enumerate(keep):
        for w in _bits(g.rows[v] & mask):
            rows[i] |= 1 << old_to_new[w]
    return Reduction(Graph(tuple(rows)), old_to_new)


def delete_vertices(g: Graph, vs: Iterable[int]) -> Reduction:
    """Delete vs; remaining vertices are renumbered preserving order."""
    mask = g._mask(vs)
    keep = ((1 << g.n) - 1) & ~mask
    if keep == 0:
        raise ReductionVanishedError("deleting every vertex leaves the empty graph")
    return induced(g, _bits(keep))


def reduce_closed(g: Graph, sset: Iterable[int]) -> Reduction:
    """G_S: remove the independent set S together with all its neighbours."""
    mask = g._mask(sset)
    closed = mask
    for v in _bits(mask):
        if g.rows[v] & mask:
            raise GraphError("reduce_closed requires an independent set")
        closed |= g.rows[v]
    keep = ((1 << g.n) - 1) & ~closed
    if keep == 0:
        raise ReductionVanishedError("closed neighbourhood covers the whole graph")
    return induced(g, _bits(keep))


# -- graph6 -------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(text: str, pos: int) -> tuple[int, int]:
    if pos >= len(text):
        raise GraphError("graph6: missing length prefix")
    c = ord(text[pos]) - 63
    if c < 0 or c > 63:
        raise GraphError(f"graph6: character {text[pos]!r} out of range")
    if c < 63:
        return c, pos + 1
    if len(text) < pos + 4:
        raise GraphError("graph6: truncated long length prefix")
    if text[pos + 1] == "~":
        raise GraphError("graph6: orders above 258047 not supported")
    n = 0
    for ch in text[pos + 1:pos + 4]:
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise GraphError(f"graph6: character {ch!r} out of range")
        n = (n << 6) | v
    return n, pos + 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional >>graph6<< header tolerated)."""
    text = text.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise GraphError("graph6: empty input")
    n, pos = _g6_size(text, 0)
    if n < 1:
        raise GraphError("graph6: order 0 graphs are rejected")
    if n > ORDER_CAP:
        raise GraphError(f"graph6: order {n} exceeds the construction cap {ORDER_CAP}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = text[pos:]
    if len(body) != nchars:
        raise GraphError(
            f"graph6: expected {nchars} body characters for order {n}, got {len(body)}")
    bits = 0
    for ch in body:
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise GraphError(f"graph6: character {ch!r} out of range")
        bits = (bits << 6) | v
    pad = 6 * nchars - nbits
    if bits & ((1 << pad) - 1):
        raise GraphError("graph6: nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    # bits run over columns of the upper triangle: (0,1),(0,2),(1,2),(0,3),...
    idx = nbits - 1
    for col in range(1, n):
        for row in range(col):
            if (bits >> idx) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx -= 1
    return Graph(tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 line (no header)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = 0
    nbits = 0
    for col in range(1, n):
        rc = g.rows[col]
        for row in range(col):
            bits = (bits << 1) | ((rc >> row) & 1)
            nbits += 1
    pad = (6 - nbits % 6) % 6
    bits <<= pad
    nbits += pad
    body = "".join(
        chr(((bits >> s) & 63) + 63) for s in range(nbits - 6, -6, -6))
    return head + body


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse graph6 lines, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)
