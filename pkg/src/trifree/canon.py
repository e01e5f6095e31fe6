"""Canonical labelings and isomorphism certificates.

The canonical labeling of a graph is the vertex order that maximizes the
upper-triangle column code: reading vertices in canonical order, vertex j
contributes a column of j adjacency bits to vertices 0..j-1, with the
earlier position as the more significant bit, and the concatenated columns
are compared lexicographically.  The maximum is found by a backtracking
search over placements, pruning branches whose partial code already falls
behind the best one found.  Interchangeable vertices (twins) are collapsed,
and among equally good choices the lowest vertex index wins, so the
returned labeling is deterministic.

This code order is hereditary: the first n-1 vertices of a canonical
labeling induce a canonically labeled subgraph.  The enumeration module
relies on that to accept an augmented graph exactly when the new vertex
occupies the canonical last position (see enumerate).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import CANON_CAP, Graph, GraphError


@dataclass(frozen=True)
class CanonicalForm:
    """Canonically relabeled graph, the labeling used and the class key."""

    graph: Graph
    labeling: tuple[int, ...]  # labeling[v] = canonical position of vertex v
    certificate: bytes


def _twin_classes(rows: tuple[int, ...], n: int) -> list[int]:
    """Partition vertices into classes of pairwise-interchangeable twins."""
    cls = list(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if cls[v] != v:
                continue
            clear = ~((1 << u) | (1 << v))
            if rows[u] & clear == rows[v] & clear:
                cls[v] = cls[u]
    return cls


def _identity_code(rows: tuple[int, ...], n: int) -> int:
    code = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            code = (code << 1) | ((rj >> i) & 1)
    return code


def max_code(g: Graph) -> tuple[int, tuple[int, ...]]:
    """The maximal column code and a labeling (old -> position) achieving it."""
    n = g.n
    if n > CANON_CAP:
        raise GraphError(f"canonical forms support order <= {CANON_CAP}, got {n}")
    rows = g.rows
    if n == 1:
        return 0, (0,)
    total_bits = n * (n - 1) // 2
    twin = _twin_classes(rows, n)

    best_code = _identity_code(rows, n)
    best_order: list[int] = list(range(n))
    order: list[int] = []
    cand = [0] * n  # accumulated column value per vertex at current depth

    def dfs(depth: int, used: int, prefix: int, bits: int) -> None:
        nonlocal best_code, best_order
        if depth == n:
            if prefix > best_code:
                best_code = prefix
                best_order = order[:]
            return
        # candidates sorted by descending column, lowest index first on ties
        cands = sorted(
            (v for v in range(n) if not (used >> v) & 1),
            key=lambda v: (-cand[v], v),
        )
        tried = 0
        for v in cands:
            tc = 1 << twin[v]
            if tried & tc:
                continue
            tried |= tc
            nbits = bits + depth
            nprefix = (prefix << depth) | cand[v]
            # compare against the best code on the same number of bits
            if nprefix < best_code >> (total_bits - nbits):
                continue
            rv = rows[v]
            for w in range(n):
                cand[w] = (cand[w] << 1) | ((rv >> w) & 1)
            order.append(v)
            dfs(depth + 1, used | (1 << v), nprefix, nbits)
            order.pop()
            for w in range(n):
                cand[w] >>= 1

    dfs(0, 0, 0, 0)
    labeling = [0] * n
    for pos, v in enumerate(best_order):
        labeling[v] = pos
    return best_code, tuple(labeling)


def _pack(n: int, code: int) -> bytes:
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return n.to_bytes(2, "big") + code.to_bytes(nbytes, "big")


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical relabeling; certificates agree exactly for isomorphic graphs."""
    code, labeling = max_code(g)
    return CanonicalForm(
        graph=g.relabel(labeling, label=g.label),
        labeling=labeling,
        certificate=_pack(g.n, code),
    )


def certificate(g: Graph) -> bytes:
    return _pack(g.n, max_code(g)[0])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.e != h.e:
        return False
    return certificate(g) == certificate(h)


def is_isomorphic_brute(g: Graph, h: Graph) -> bool:
    """Permutation-search oracle, for cross-checking on small orders."""
    n = g.n
    if n != h.n or g.e != h.e:
        return False
    if n > 8:
        raise GraphError("brute-force isomorphism is for order <= 8")
    for perm in permutations(range(n)):
        if all(h.rows[perm[v]] == sum(1 << perm[w] for w in range(n)
                                      if (g.rows[v] >> w) & 1)
               for v in range(n)):
            return True
    return False
