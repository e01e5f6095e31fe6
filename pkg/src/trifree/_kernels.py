"""Numba-compiled kernels for the exhaustive sweep.

These mirror, at machine speed, logic that exists in plain Python in the
canon and solvers modules: the max-code canonicity test (canon.max_code),
MIS size, 4-cycle counting and connectivity.  Agreement is enforced by
tests against the pure implementations and the naive oracle.

cache=False throughout: numba's on-disk cache is unreliable for the
self-recursive canonicity walker (reloads segfault), so every process pays
one JIT compilation; worker pools fork after warm-up and inherit it.
"""

from __future__ import annotations

import numpy as np
from numba import int64, njit

#: Dtype for stored adjacency rows; enumeration orders stay <= 16 bits.
ROW_DTYPE = np.uint16


@njit(cache=False)
def _twin_classes(rows, n, out):
    for v in range(n):
        out[v] = v
    for u in range(n):
        for v in range(u + 1, n):
            if out[v] != v:
                continue
            clear = ~((int64(1) << u) | (int64(1) << v))
            if (rows[u] & clear) == (rows[v] & clear):
                out[v] = out[u]


@njit(cache=False)
def _beats_reference(rows, n, twin, refcol, cand, used, depth):
    """True if some placement order beats the identity column code."""
    ref = refcol[depth]
    for v in range(n):
        if (used >> v) & 1:
            continue
        if cand[v] > ref:
            return True
    tried = 0
    for v in range(n):
        if (used >> v) & 1:
            continue
        if cand[v] != ref:
            continue
        tbit = int64(1) << twin[v]
        if tried & tbit:
            continue
        tried |= tbit
        if depth == n - 1:
            continue
        rv = rows[v]
        for w in range(n):
            cand[w] = (cand[w] << 1) | ((rv >> w) & 1)
        beats = _beats_reference(rows, n, twin, refcol, cand,
                                 used | (int64(1) << v), depth + 1)
        for w in range(n):
            cand[w] >>= 1
        if beats:
            return True
    return False


@njit(cache=False)
def _is_canonical(rows, n, twin, refcol, cand):
    if n <= 1:
        return True
    for w in range(n):
        cand[w] = 0
    return not _beats_reference(rows, n, twin, refcol, cand, int64(0), 0)


@njit(cache=False)
def _connected(rows, n):
    if n <= 1:
        return True
    seen = int64(1)
    frontier = int64(1)
    full = (int64(1) << n) - 1
    while frontier:
        nxt = int64(0)
        m = frontier
        while m:
            mm = m & -m
            v = 0
            while not ((mm >> v) & 1):
                v += 1
            m &= m - 1
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


@njit(cache=False)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=False)
def _alpha(rows, n):
    """MIS size: greedy degree-0/1 reduction + max-degree branching."""
    full = (int64(1) << n) - 1
    best = 0
    stack_free = np.empty(2 * n + 2, dtype=np.int64)
    stack_size = np.empty(2 * n + 2, dtype=np.int64)
    stack_free[0] = full
    stack_size[0] = 0
    sp = 1
    while sp > 0:
        sp -= 1
        free = stack_free[sp]
        size = stack_size[sp]
        while True:
            if free == 0:
                break
            maxd = -1
            maxv = -1
            reduced = False
            m = free
            while m:
                mm = m & -m
                v = 0
                while not ((mm >> v) & 1):
                    v += 1
                m &= m - 1
                nb = rows[v] & free
                d = _popcount(nb)
                if d <= 1:
                    free &= ~((int64(1) << v) | nb)
                    size += 1
                    reduced = True
                    break
                if d > maxd:
                    maxd = d
                    maxv = v
            if not reduced:
                break
        if free == 0:
            if size > best:
                best = size
            continue
        # greedy clique-cover (matching) bound
        bound = 0
        m = free
        while m:
            mm = m & -m
            v = 0
            while not ((mm >> v) & 1):
                v += 1
            m &= m - 1
            bound += 1
            nb = rows[v] & m
            if nb:
                m &= ~(nb & -nb)
        if size + bound <= best:
            continue
        vbit = int64(1) << maxv
        stack_free[sp] = free & ~vbit
        stack_size[sp] = size
        sp += 1
        stack_free[sp] = free & ~(vbit | rows[maxv])
        stack_size[sp] = size + 1
        sp += 1
    return best


@njit(cache=False)
def _c4_count(rows, n):
    total = 0
    for u in range(n):
        for w in range(u + 1, n):
            c = _popcount(rows[u] & rows[w])
            total += c * (c - 1) // 2
    return total // 2


@njit(cache=False)
def _edge_count(rows, n):
    total = 0
    for v in range(n):
        total += _popcount(rows[v])
    return total // 2


@njit(cache=False)
def _extend_level(parents, n, girth5, max_degree, out):
    """Extend every order-n parent by one vertex; write canonical children.

    parents: uint16 array (P, n) of canonically labeled graphs.
    out: uint16 array (C, n+1) capacity buffer.
    Returns the number of children written, or -1 if out is too small.
    """
    nparents = parents.shape[0]
    cap = out.shape[0]
    cnt = 0
    rows = np.empty(n, dtype=np.int64)
    conflict = np.empty(n, dtype=np.int64)
    child = np.empty(n + 1, dtype=np.int64)
    refcol = np.empty(n + 1, dtype=np.int64)
    twin = np.empty(n + 1, dtype=np.int64)
    cand = np.empty(n + 1, dtype=np.int64)
    # pending siblings across all DFS levels never exceed n(n+1)/2 frames
    stack_cap = n * (n + 1) // 2 + 2
    stack_allowed = np.empty(stack_cap, dtype=np.int64)
    stack_cur = np.empty(stack_cap, dtype=np.int64)
    for p in range(nparents):
        for v in range(n):
            rows[v] = parents[p, v]
        # vertices the new vertex must not co-select with v
        for v in range(n):
            c = rows[v]
            if girth5:
                m = rows[v]
                while m:
                    mm = m & -m
                    w = 0
                    while not ((mm >> w) & 1):
                        w += 1
                    m &= m - 1
                    c |= rows[w]
                c &= ~(int64(1) << v)
            conflict[v] = c
        # vertices already at the degree cap cannot take another edge
        degree_ok = (int64(1) << n) - 1
        if max_degree > 0:
            for v in range(n):
                if _popcount(rows[v]) >= max_degree:
                    degree_ok &= ~(int64(1) << v)
        for j in range(n):
            c = int64(0)
            for i in range(j):
                c = (c << 1) | ((rows[j] >> i) & 1)
            refcol[j] = c
        # DFS over independent (girth-admissible) subsets S
        sp = 1
        stack_allowed[0] = degree_ok
        stack_cur[0] = 0
        while sp > 0:
            sp -= 1
            allowed = stack_allowed[sp]
            s = stack_cur[sp]
            if max_degree <= 0 or _popcount(s) <= max_degree:
                for v in range(n):
                    b = (s >> v) & 1
                    child[v] = rows[v] | (b << n)
                child[n] = s
                c = int64(0)
                for i in range(n):
                    c = (c << 1) | ((s >> i) & 1)
                refcol[n] = c
                _twin_classes(child, n + 1, twin)
                if _is_canonical(child, n + 1, twin, refcol, cand):
                    if cnt >= cap:
                        return -1
                    for v in range(n + 1):
                        out[cnt, v] = child[v]
                    cnt += 1
            m = allowed
            while m:
                mm = m & -m
                v = 0
                while not ((mm >> v) & 1):
                    v += 1
                m &= m - 1
                stack_allowed[sp] = m & ~conflict[v]
                stack_cur[sp] = s | (int64(1) << v)
                sp += 1
    return cnt


@njit(cache=False)
def _scan_level(children, n, out_stats):
    """Per-child (connected, e, alpha, c4) for an array of children."""
    cnt = children.shape[0]
    rows = np.empty(n, dtype=np.int64)
    for i in range(cnt):
        for v in range(n):
            rows[v] = children[i, v]
        out_stats[i, 0] = 1 if _connected(rows, n) else 0
        out_stats[i, 1] = _edge_count(rows, n)
        out_stats[i, 2] = _alpha(rows, n)
        out_stats[i, 3] = _c4_count(rows, n)


def warm_up() -> None:
    """Force JIT compilation once (before forking worker processes)."""
    parents = np.zeros((1, 1), dtype=ROW_DTYPE)
    out = np.empty((8, 2), dtype=ROW_DTYPE)
    cnt = _extend_level(parents, 1, False, 0, out)
    stats = np.empty((cnt, 4), dtype=np.int64)
    _scan_level(out[:cnt], 2, stats)
    _extend_level(parents, 1, True, 3, out)
