"""Isomorph-free exhaustive generation of triangle-free graphs.

Orderly generation: graphs are kept in their canonical (max-code) labeling
and each order-n level is built by extending every order n-1 graph with one
new last vertex over every admissible neighbour set, keeping a child exactly
when the augmented labeling is itself canonical.  Because the canonical code
is hereditary (see canon), every isomorphism class appears exactly once.

Connectivity is not hereditary, so it is applied as a post-filter at the
requested order; intermediate levels always carry all graphs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from . import _kernels, canon
from .graph import Graph, GraphError

#: Hard ceiling on enumeration order (one row fits 14 bits comfortably and
#: orders 13-14 are already long-running).
HARD_CAP = 14

#: Orders up to this are the supported guarantee; 13-14 work but take hours.
SUPPORTED_CAP = 12

#: Level at which partitioned runs split their parent sets.
SPLIT_ORDER = 8


def enumeration_cap() -> int:
    """The active cap: HARD_CAP, lowered (never raised) by TRIFREE_CAP."""
    env = os.environ.get("TRIFREE_CAP")
    if env is None:
        return HARD_CAP
    try:
        cap = int(env)
    except ValueError as exc:
        raise GraphError(f"TRIFREE_CAP={env!r} is not an integer") from exc
    return max(1, min(cap, HARD_CAP))


@dataclass(frozen=True)
class EnumerationSpec:
    order: int
    connected_only: bool = True
    min_girth: int = 4
    max_degree: int | None = None

    def __post_init__(self) -> None:
        if self.order < 1:
            raise GraphError(f"order must be >= 1, got {self.order}")
        if self.order > enumeration_cap():
            raise GraphError(
                f"order {self.order} above the enumeration cap {enumeration_cap()}")
        if self.min_girth not in (4, 5):
            raise GraphError(f"min_girth must be 4 or 5, got {self.min_girth}")
        if self.max_degree is not None and self.max_degree < 0:
            raise GraphError("max_degree must be >= 0")


def _k1_level() -> np.ndarray:
    return np.zeros((1, 1), dtype=_kernels.ROW_DTYPE)


def _extend(level: np.ndarray, n: int, spec: EnumerationSpec) -> np.ndarray:
    """All canonical children (order n+1) of the order-n level array."""
    girth5 = spec.min_girth == 5
    maxdeg = spec.max_degree if spec.max_degree is not None else 0
    cap = max(4096, 16 * level.shape[0])
    while True:
        out = np.empty((cap, n + 1), dtype=_kernels.ROW_DTYPE)
        cnt = _kernels._extend_level(level, n, girth5, maxdeg, out)
        if cnt >= 0:
            return out[:cnt].copy()
        cap *= 4


def _levels_up_to(order: int, spec: EnumerationSpec,
                  start: np.ndarray | None = None,
                  start_order: int = 1) -> np.ndarray:
    level = _k1_level() if start is None else start
    n = start_order
    while n < order:
        level = _extend(level, n, spec)
        n += 1
    return level


def _rows_to_graph(row: np.ndarray, n: int) -> Graph:
    return Graph(tuple(int(row[v]) for v in range(n)))


#: Parents extended per chunk when streaming the final order; bounds peak
#: memory to roughly 16 * CHUNK child rows regardless of level size.
CHUNK = 1 << 16


def _parent_level(spec: EnumerationSpec,
                  partition: tuple[int, int] | None) -> np.ndarray:
    """The fully materialized level at spec.order - 1 for this partition."""
    if partition is None:
        return _levels_up_to(spec.order - 1, spec)
    idx, count = partition
    if not (0 <= idx < count):
        raise GraphError(f"bad partition {partition}")
    if spec.order <= SPLIT_ORDER:
        # small orders are not split; partition 0 carries them all
        level = _levels_up_to(spec.order - 1, spec)
        return level if idx == 0 else level[:0]
    base = _levels_up_to(SPLIT_ORDER, spec)
    return _levels_up_to(spec.order - 1, spec, start=base[idx::count].copy(),
                         start_order=SPLIT_ORDER)


def iter_level_chunks(spec: EnumerationSpec,
                      partition: tuple[int, int] | None = None) -> Iterator[np.ndarray]:
    """The spec.order level as a stream of row-array chunks.

    Only levels up to spec.order - 1 are held in memory, so this scales to
    the long-running orders 13-14 where the final level does not fit.
    """
    _kernels.warm_up()
    if spec.order == 1:
        if partition is None or partition[0] == 0:
            yield _k1_level()
        return
    parents = _parent_level(spec, partition)
    for start in range(0, parents.shape[0], CHUNK):
        yield _extend(parents[start:start + CHUNK], spec.order - 1, spec)


def level_rows(spec: EnumerationSpec,
               partition: tuple[int, int] | None = None) -> np.ndarray:
    """The spec.order level as one array (no connectivity filter applied).

    Materializes everything; fine up to the supported orders, use
    iter_level_chunks beyond.
    """
    chunks = list(iter_level_chunks(spec, partition))
    if not chunks:
        return np.empty((0, spec.order), dtype=_kernels.ROW_DTYPE)
    return chunks[0] if len(chunks) == 1 else np.vstack(chunks)


def scan_stats(level: np.ndarray, n: int) -> np.ndarray:
    """(connected, e, alpha, c4) per row of a level array."""
    stats = np.empty((level.shape[0], 4), dtype=np.int64)
    if level.shape[0]:
        _kernels._scan_level(level, n, stats)
    return stats


def enumerate_graphs(spec: EnumerationSpec,
                     partition: tuple[int, int] | None = None) -> Iterator[Graph]:
    """Canonical representatives of all isomorphism classes matching spec."""
    n = spec.order
    for chunk in iter_level_chunks(spec, partition):
        if spec.connected_only and n > 1:
            stats = scan_stats(chunk, n)
            for i in range(chunk.shape[0]):
                if stats[i, 0]:
                    yield _rows_to_graph(chunk[i], n)
        else:
            for i in range(chunk.shape[0]):
                yield _rows_to_graph(chunk[i], n)


def count_classes(spec: EnumerationSpec) -> int:
    total = 0
    for chunk in iter_level_chunks(spec, None):
        if spec.connected_only and spec.order > 1:
            total += int(scan_stats(chunk, spec.order)[:, 0].sum())
        else:
            total += chunk.shape[0]
    return total


# -- naive oracle ---------------------------------------------------------------

NAIVE_CAP = 7


@lru_cache(maxsize=8)
def _naive_classes(n: int) -> tuple[tuple[bytes, Graph], ...]:
    """Canonical representatives of every triangle-free class on n vertices,
    found by filtering all 2^C(n,2) labeled graphs and bucketing by
    certificate.  Sorted by certificate."""
    pairs = list(combinations(range(n), 2))
    reps: dict[bytes, Graph] = {}
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        while m:
            b = (m & -m).bit_length() - 1
            m &= m - 1
            u, v = pairs[b]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if not _triangle_free_rows(rows, n):
            continue
        g = Graph(tuple(rows))
        form = canon.canonical_form(g)
        reps.setdefault(form.certificate, form.graph)
    return tuple(sorted(reps.items()))


def naive_enumerate(spec: EnumerationSpec) -> list[Graph]:
    """Ground-truth enumeration by filtering all labeled graphs (order <= 7).

    Returns one canonical representative per isomorphism class, sorted by
    certificate so the output is deterministic.  Spec predicates beyond
    triangle-freeness are isomorphism invariants and filter the class reps.
    """
    n = spec.order
    if n > NAIVE_CAP:
        raise GraphError(f"naive_enumerate supports order <= {NAIVE_CAP}")
    out = []
    for _, g in _naive_classes(n):
        if spec.min_girth == 5 and _has_c4_rows(list(g.rows), n):
            continue
        if spec.max_degree is not None and g.max_degree() > spec.max_degree:
            continue
        if spec.connected_only and not g.is_connected():
            continue
        out.append(g)
    return out


def _triangle_free_rows(rows: list[int], n: int) -> bool:
    for u in range(n):
        ru = rows[u]
        m = ru
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if v > u and ru & rows[v]:
                return False
    return True


def _has_c4_rows(rows: list[int], n: int) -> bool:
    for u in range(n):
        for v in range(u + 1, n):
            if (rows[u] & rows[v]).bit_count() >= 2:
                return True
    return False
