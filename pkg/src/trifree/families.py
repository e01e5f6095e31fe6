"""Constructors for the named graph families and membership classification.

Each constructor fixes a canonical vertex numbering (documented inline) so
graph6 output is stable across runs, asserts triangle-freeness, and is
deterministic.  The recursive families always extend at the lowest-index
admissible vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import canon
from .analysis import InvariantRecord, invariants
from .graph import Graph, GraphError


@dataclass(frozen=True)
class FamilyMember:
    family: str  # Chain | Bicycle | ShackledChain | W5 | GP72 | CycleN | S1 | S2
    parameter: int | None
    graph: Graph


def _checked(g: Graph) -> Graph:
    if not g.is_triangle_free():
        raise GraphError(f"constructor produced a triangle: {g.label}")
    return g


def cycle(n: int) -> Graph:
    """C_n with vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], label=f"C{n}")


def _lowest_bivalent(g: Graph) -> int:
    for v in range(g.n):
        if g.degree(v) == 2:
            return v
    raise GraphError("no bivalent vertex to extend at")


def chain(k: int) -> Graph:
    """Ch_k: C5 for k = 2, then repeated bivalent-vertex extension.

    Numbering: Ch_2 = C5 on 0..4; each step appends v, w1, w2 = n, n+1, n+2
    extending at the lowest-index bivalent vertex x, with edges v-w1, v-w2,
    w1-x and w2-y for both neighbours y of x.
    """
    if k < 2:
        raise GraphError(f"chain needs k >= 2, got {k}")
    g = cycle(5)
    for _ in range(k - 2):
        x = _lowest_bivalent(g)
        n = g.n
        v, w1, w2 = n, n + 1, n + 2
        edges = g.edges() + [(v, w1), (v, w2), (w1, x)]
        edges += [(w2, y) for y in sorted(g.neighbors(x))]
        g = Graph.from_edges(n + 3, edges)
    return _checked(g.with_label(f"Ch{k}"))


def bicycle(k: int) -> Graph:
    """BC_k: a 2k-cycle joined to a k-cycle by 2k spokes.

    Numbering: outer cycle vertices c_1..c_2k are 0..2k-1, inner cycle
    d_1..d_k are 2k..3k-1; spokes d_i c_{2i-2} and d_i c_{2i+1} with the
    c-subscripts mod 2k.
    """
    if k < 4:
        raise GraphError(f"bicycle needs k >= 4, got {k}")
    edges = [(i, (i + 1) % (2 * k)) for i in range(2 * k)]
    edges += [(2 * k + i, 2 * k + (i + 1) % k) for i in range(k)]
    for i in range(1, k + 1):
        d = 2 * k + i - 1
        edges.append((d, (2 * i - 2 - 1) % (2 * k)))
        edges.append((d, (2 * i + 1 - 1) % (2 * k)))
    return _checked(Graph.from_edges(3 * k, edges, label=f"BC{k}"))


def shackled_chain(k: int) -> Graph:
    """SCh_k: built over Ch_3 by repeated shackling.

    SCh_1 joins new vertices v, w1, w2 to the two bivalent pairs of Ch_3
    (w1 to one vertex of each pair, w2 to the other) and has a single
    bivalent vertex; each later step extends at the lowest-index bivalent
    vertex a with neighbours b1, b2 via edges v-w1, v-w2, w1-a, w2-b1,
    w2-b2, leaving the adjacent bivalent pair v, w1.  The result does not
    depend on the choice of bivalent vertex, up to isomorphism.
    """
    if k < 1:
        raise GraphError(f"shackled_chain needs k >= 1, got {k}")
    base = chain(3)
    bivalent = sorted(v for v in base.vertices() if base.degree(v) == 2)
    # the four bivalent vertices come in two adjacent pairs
    p = bivalent[0]
    first_pair = (p, min(w for w in base.neighbors(p) if w in bivalent))
    second_pair = tuple(sorted(set(bivalent) - set(first_pair)))
    a1, a2 = sorted(first_pair)
    b1, b2 = second_pair
    n = base.n
    v, w1, w2 = n, n + 1, n + 2
    edges = base.edges() + [(v, w1), (v, w2), (w1, a1), (w1, b1), (w2, a2), (w2, b2)]
    g = Graph.from_edges(n + 3, edges)
    for _ in range(k - 1):
        a = _lowest_bivalent(g)
        nb1, nb2 = sorted(g.neighbors(a))
        n = g.n
        v, w1, w2 = n, n + 1, n + 2
        edges = g.edges() + [(v, w1), (v, w2), (w1, a), (w2, nb1), (w2, nb2)]
        g = Graph.from_edges(n + 3, edges)
    return _checked(g.with_label(f"SCh{k}"))


def w5() -> Graph:
    """One of the two 3-regular order-14 graphs with nu = 0.

    Numbering: a0, a1 = 0, 1; b0..b3 = 2..5; the 8-cycle c0..c7 = 6..13.
    Edges: a0a1; b_i a_{i mod 2}; b_i c_{2i}; b_i c_{(2i+3) mod 8}.
    """
    edges = [(0, 1)]
    for i in range(4):
        edges.append((2 + i, i % 2))
        edges.append((2 + i, 6 + (2 * i) % 8))
        edges.append((2 + i, 6 + (2 * i + 3) % 8))
    edges += [(6 + i, 6 + (i + 1) % 8) for i in range(8)]
    return _checked(Graph.from_edges(14, edges, label="W5"))


def gp72() -> Graph:
    """The generalized Petersen graph GP(7,2).

    Numbering: outer 7-cycle a0..a6 = 0..6, inner 7-cycle b0..b6 = 7..13,
    spokes b_i a_{2i mod 7}.
    """
    edges = [(i, (i + 1) % 7) for i in range(7)]
    edges += [(7 + i, 7 + (i + 1) % 7) for i in range(7)]
    edges += [(7 + i, (2 * i) % 7) for i in range(7)]
    return _checked(Graph.from_edges(14, edges, label="GP(7,2)"))


def s1() -> Graph:
    """C12 plus the chord c0c6."""
    return _checked(cycle(12).add_edge(0, 6).with_label("S1"))


def s2() -> Graph:
    """C12 plus the chords c0c6 and c3c9."""
    return _checked(cycle(12).add_edge(0, 6).add_edge(3, 9).with_label("S2"))


# -- classification ------------------------------------------------------------

def members_of_order(n: int) -> list[FamilyMember]:
    """All members of the nu = 0 family with the given order."""
    out: list[FamilyMember] = []
    if n >= 5 and n % 3 == 2:
        k = (n + 1) // 3
        out.append(FamilyMember("Chain", k, chain(k)))
    if n >= 15 and n % 3 == 0:
        k = n // 3
        out.append(FamilyMember("Bicycle", k, bicycle(k)))
    if n == 14:
        out.append(FamilyMember("W5", None, w5()))
        out.append(FamilyMember("GP72", None, gp72()))
    return out


def classify_in_G(g: Graph) -> FamilyMember | None:
    """Identify a connected graph as a member of the nu = 0 family, or None."""
    if not g.is_connected():
        raise GraphError("classify_in_G requires a connected graph")
    cert = canon.certificate(g)
    for member in members_of_order(g.n):
        if canon.certificate(member.graph) == cert:
            return member
    return None


def _check_closed_forms(rec: InvariantRecord, expected: tuple[int, int, int, int, int]) -> None:
    got = (rec.n, rec.e, rec.alpha, rec.c4, rec.nu)
    if got != expected:
        raise GraphError(
            f"{rec.name}: invariants {got} do not match the closed forms {expected}")


def family_table(k_max: int) -> list[InvariantRecord]:
    """Invariant records for all families up to parameter k_max.

    Every record is cross-checked against the closed forms; a mismatch
    raises instead of returning bad data.
    """
    if k_max < 2:
        raise GraphError(f"family_table needs k_max >= 2, got {k_max}")
    out: list[InvariantRecord] = []
    for k in range(2, k_max + 1):
        rec = invariants(chain(k))
        _check_closed_forms(rec, (3 * k - 1, 5 * k - 5, k, k - 2, 0))
        out.append(rec)
    for k in range(4, k_max + 1):
        rec = invariants(bicycle(k))
        if k == 4:
            _check_closed_forms(rec, (12, 20, 4, 5, 1))
        else:
            _check_closed_forms(rec, (3 * k, 5 * k, k, k, 0))
        out.append(rec)
    for k in range(1, k_max + 1):
        rec = invariants(shackled_chain(k))
        _check_closed_forms(rec, (3 * k + 8, 5 * k + 11, k + 3, k, 2))
        out.append(rec)
    for g in (w5(), gp72()):
        rec = invariants(g)
        _check_closed_forms(rec, (14, 21, 5, 0, 0))
        out.append(rec)
    return out


def golden_members(k_max: int = 10) -> list[tuple[str, Graph]]:
    """(name, graph) pairs for the bundled graph6 fixture file."""
    out = [(f"Ch{k}", chain(k)) for k in range(2, k_max + 1)]
    out += [(f"BC{k}", bicycle(k)) for k in range(4, k_max + 1)]
    out += [(f"SCh{k}", shackled_chain(k)) for k in range(1, k_max + 1)]
    out.append(("W5", w5()))
    out.append(("GP(7,2)", gp72()))
    return out


def load_golden_fixtures() -> dict[str, str]:
    """name -> graph6 mapping from the bundled fixture file."""
    text = resources.files("trifree").joinpath("data/families.g6").read_text()
    out = {}
    for line in text.splitlines():
        if line.strip():
            name, g6 = line.split("\t")
            out[name] = g6
    return out
