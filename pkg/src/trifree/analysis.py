"""The paper-level invariants and structural predicates.

nu(G) = 3e - 17n + 35*alpha + N(C4) and t(G) = e - 6n + 13*alpha are
computed for arbitrary simple graphs; the triangle-free flag on the record
tells theorem-level consumers when the nu >= 0 guarantee applies.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError, Reduction, _bits, reduce_closed
from .solvers import (
    count_c4,
    count_cycles,
    count_cycles_through,
    independence_number,
    max_independent_avoiding,
    maximum_independent_sets,
)

CSV_HEADER = "name,n,e,alpha,c3,c4,c5,nu,t,mindeg,maxdeg,girth,edge_critical"


@dataclass(frozen=True)
class InvariantRecord:
    name: str
    n: int
    e: int
    alpha: int
    c3: int
    c4: int
    c5: int
    nu: int
    t: int
    min_degree: int
    max_degree: int
    girth: int | float
    edge_critical: bool
    triangle_free: bool

    def to_csv_row(self) -> str:
        girth = "inf" if math.isinf(self.girth) else str(self.girth)
        return ",".join([
            self.name, str(self.n), str(self.e), str(self.alpha),
            str(self.c3), str(self.c4), str(self.c5), str(self.nu),
            str(self.t), str(self.min_degree), str(self.max_degree),
            girth, "true" if self.edge_critical else "false",
        ])

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "e": self.e,
            "alpha": self.alpha,
            "c3": self.c3,
            "c4": self.c4,
            "c5": self.c5,
            "nu": self.nu,
            "t": self.t,
            "mindeg": self.min_degree,
            "maxdeg": self.max_degree,
            "girth": None if math.isinf(self.girth) else self.girth,
            "edge_critical": self.edge_critical,
        }


def nu_value(n: int, e: int, alpha: int, c4: int) -> int:
    return 3 * e - 17 * n + 35 * alpha + c4


def t_value(n: int, e: int, alpha: int) -> int:
    return e - 6 * n + 13 * alpha


def invariants(g: Graph, name: str | None = None) -> InvariantRecord:
    """Full invariant bundle for one graph."""
    alpha = independence_number(g).alpha
    c3 = count_cycles(g, 3).total
    c4 = count_cycles(g, 4).total
    c5 = count_cycles(g, 5).total
    return InvariantRecord(
        name=name if name is not None else (g.label or ""),
        n=g.n,
        e=g.e,
        alpha=alpha,
        c3=c3,
        c4=c4,
        c5=c5,
        nu=nu_value(g.n, g.e, alpha, c4),
        t=t_value(g.n, g.e, alpha),
        min_degree=g.min_degree(),
        max_degree=g.max_degree(),
        girth=g.girth(),
        edge_critical=is_edge_critical(g),
        triangle_free=c3 == 0,
    )


def record_to_json_line(rec: InvariantRecord) -> str:
    # field order follows the CSV column order
    return json.dumps(rec.to_json_dict())


# -- edge criticality ----------------------------------------------------------

def redundant_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose removal leaves the independence number unchanged."""
    alpha = independence_number(g).alpha
    out = []
    for u, v in g.edges():
        if independence_number(g.delete_edges([(u, v)])).alpha == alpha:
            out.append((u, v))
    return out


def critical_edges(g: Graph) -> list[tuple[int, int]]:
    redundant = set(redundant_edges(g))
    return [e for e in g.edges() if e not in redundant]


def is_edge_critical(g: Graph) -> bool:
    """True iff removing any edge increases alpha (no redundant edges)."""
    alpha = independence_number(g).alpha
    for u, v in g.edges():
        if independence_number(g.delete_edges([(u, v)])).alpha == alpha:
            return False
    return True


# -- destabilisers --------------------------------------------------------------

@dataclass(frozen=True)
class MinimalDestabiliser:
    vertices: frozenset[int]
    connected: bool  # whether the set induces a connected subgraph of G


@dataclass(frozen=True)
class DestabiliserReport:
    alpha: int
    max_size: int
    minimal_sets: tuple[MinimalDestabiliser, ...]
    r_stable_up_to: int


def destabilises(g: Graph, vs: Iterable[int]) -> bool:
    """True iff every maximum independent set of G meets vs."""
    mask = g._mask(vs)
    if mask == (1 << g.n) - 1:
        raise GraphError("destabilises is undefined for S = V(G)")
    if mask == 0:
        return False
    alpha = independence_number(g).alpha
    return max_independent_avoiding(g, _bits(mask)) < alpha


def _induces_connected(g: Graph, mask: int) -> bool:
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v] & mask
        frontier = nxt & ~seen
        seen |= nxt
    return seen == mask


def minimal_destabilisers(g: Graph, max_size: int) -> DestabiliserReport:
    """All inclusion-minimal destabilising sets of size <= max_size."""
    if max_size > g.n - 1:
        raise GraphError("max_size must be at most n - 1")
    mis = maximum_independent_sets(g)
    alpha = independence_number(g).alpha
    found: list[int] = []
    out: list[MinimalDestabiliser] = []
    smallest = None
    for size in range(1, max_size + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if any(prev & mask == prev for prev in found):
                continue  # contains a smaller minimal destabiliser
            if all(mask & m for m in mis):
                found.append(mask)
                out.append(MinimalDestabiliser(
                    vertices=frozenset(combo),
                    connected=_induces_connected(g, mask),
                ))
                if smallest is None:
                    smallest = size
    r_stable = max_size if smallest is None else smallest - 1
    return DestabiliserReport(
        alpha=alpha,
        max_size=max_size,
        minimal_sets=tuple(out),
        r_stable_up_to=r_stable,
    )


def is_r_stable(g: Graph, r: int) -> bool:
    """True iff no destabilising set of size <= r exists."""
    if r > g.n - 1:
        raise GraphError("r must be at most n - 1")
    mis = maximum_independent_sets(g)
    for size in range(1, r + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(mask & m for m in mis):
                return False
    return True


# -- reduction bounds ------------------------------------------------------------

@dataclass(frozen=True)
class RemovalCountBound:
    lhs: int  # nu(G_v)
    rhs: int  # nu(G) - 3 d^2(v) + 17 d(v) - 18 - N(C4; G, N(v))
    holds: bool


def removal_count_bound(g: Graph, v: int) -> RemovalCountBound:
    """Evaluate both sides of the closed-neighbourhood removal bound at v."""
    if not g.is_triangle_free():
        raise GraphError("removal_count_bound requires a triangle-free graph")
    red = reduce_closed(g, [v])  # raises ReductionVanishedError if N[v] = V
    gv = red.graph
    alpha_gv = independence_number(gv).alpha
    lhs = nu_value(gv.n, gv.e, alpha_gv, count_c4(gv))
    alpha = independence_number(g).alpha
    nu = nu_value(g.n, g.e, alpha, count_c4(g))
    rhs = (nu - 3 * g.second_valency(v) + 17 * g.degree(v) - 18
           - count_cycles_through(g, 4, g.neighbors(v)))
    return RemovalCountBound(lhs=lhs, rhs=rhs, holds=lhs <= rhs)


def translate_set(red: Reduction, vs: Iterable[int]) -> set[int]:
    """Map surviving vertices of vs through a reduction's renumbering."""
    return {red.old_to_new[v] for v in vs if v in red.old_to_new}


def check_second_nbhd_destabilises(g: Graph, v: int) -> bool:
    """Whether N_2(v), translated into G_v labels, destabilises G_v.

    Preconditions of the underlying statement are enforced: connected,
    edge-critical, triangle-free ambient graph and d(v) >= 2.
    """
    if not g.is_connected():
        raise GraphError("check_second_nbhd_destabilises requires a connected graph")
    if not g.is_triangle_free():
        raise GraphError("check_second_nbhd_destabilises requires a triangle-free graph")
    if g.degree(v) < 2:
        raise GraphError("check_second_nbhd_destabilises requires d(v) >= 2")
    if not is_edge_critical(g):
        raise GraphError("check_second_nbhd_destabilises requires an edge-critical graph")
    red = reduce_closed(g, [v])
    n2 = translate_set(red, g.vertices_at_distance(v, 2))
    if len(n2) == red.graph.n:
        # removing all of G_v leaves the empty graph: alpha drops to 0
        return True
    return destabilises(red.graph, n2)
