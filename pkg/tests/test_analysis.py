import json
import math
import random
from itertools import combinations

import pytest

from trifree import families
from trifree.analysis import (
    CSV_HEADER,
    DestabiliserReport,
    critical_edges,
    destabilises,
    invariants,
    is_edge_critical,
    is_r_stable,
    minimal_destabilisers,
    redundant_edges,
    removal_count_bound,
    check_second_nbhd_destabilises,
)
from trifree.graph import Graph, GraphError


def c5():
    return families.cycle(5)


class TestInvariants:
    @pytest.mark.parametrize("graph,nu,t", [
        (families.cycle(5), 0, 1),
        (families.cycle(4), 15, 6),
        (families.cycle(6), 21, 9),
        (Graph.from_edges(1, []), 18, 7),
        (Graph.from_edges(2, [(0, 1)]), 4, 2),
    ])
    def test_examples(self, graph, nu, t):
        rec = invariants(graph)
        assert rec.nu == nu
        assert rec.t == t

    def test_record_fields_c5(self):
        rec = invariants(c5(), name="C5")
        assert (rec.n, rec.e, rec.alpha) == (5, 5, 2)
        assert (rec.c3, rec.c4, rec.c5) == (0, 0, 1)
        assert rec.girth == 5
        assert rec.min_degree == rec.max_degree == 2
        assert rec.edge_critical
        assert rec.triangle_free

    def test_nu_additive_over_components(self):
        rng = random.Random(17)
        parts = [families.cycle(5), families.chain(3), families.cycle(7),
                 Graph.from_edges(2, [(0, 1)])]
        for _ in range(10):
            a, b = rng.choice(parts), rng.choice(parts)
            edges = a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()]
            g = Graph.from_edges(a.n + b.n, edges)
            assert invariants(g).nu == invariants(a).nu + invariants(b).nu

    def test_csv_and_json(self):
        rec = invariants(c5(), name="C5")
        row = rec.to_csv_row()
        assert row == "C5,5,5,2,0,0,1,0,1,2,2,5,true"
        assert CSV_HEADER.count(",") == row.count(",")
        d = rec.to_json_dict()
        assert list(json.loads(json.dumps(d))) == list(d)
        assert d["girth"] == 5 and d["nu"] == 0

    def test_girth_inf_serialization(self):
        p2 = Graph.from_edges(2, [(0, 1)])
        rec = invariants(p2, name="K2")
        assert math.isinf(rec.girth)
        assert rec.to_csv_row().split(",")[11] == "inf"
        assert rec.to_json_dict()["girth"] is None


class TestEdgeCriticality:
    def test_chains_edge_critical(self):
        for k in range(2, 7):
            assert is_edge_critical(families.chain(k))

    def test_c4_not_edge_critical(self):
        g = families.cycle(4)
        assert not is_edge_critical(g)
        assert set(redundant_edges(g)) == set(g.edges())
        assert critical_edges(g) == []

    def test_c5_edge_critical(self):
        assert is_edge_critical(c5())

    def test_partition_property(self):
        for g in (families.cycle(6), families.s1(), families.chain(3)):
            red = set(redundant_edges(g))
            crit = set(critical_edges(g))
            assert red | crit == set(g.edges())
            assert not (red & crit)


class TestDestabilisers:
    def test_closed_neighbourhood_destabilises_c5(self):
        assert destabilises(c5(), [0, 1, 4])  # N[0]

    def test_single_vertex_does_not(self):
        assert not destabilises(c5(), [0])

    def test_empty_set_does_not(self):
        assert not destabilises(c5(), [])

    def test_full_set_is_an_error(self):
        with pytest.raises(GraphError):
            destabilises(c5(), range(5))

    def test_minimal_destabilisers_chains_size3(self):
        for k, expected_count in [(2, 5), (3, 4), (4, 4), (5, 4)]:
            g = families.chain(k)
            rep = minimal_destabilisers(g, 3)
            assert isinstance(rep, DestabiliserReport)
            assert rep.r_stable_up_to == 2
            stars = {frozenset(g.closed_neighborhood([v]))
                     for v in g.vertices() if g.degree(v) == 2}
            got = {s.vertices for s in rep.minimal_sets}
            assert got == stars
            assert len(got) == expected_count
            assert all(s.connected for s in rep.minimal_sets)

    def test_chain3_disconnected_size4(self):
        g = families.chain(3)
        rep = minimal_destabilisers(g, 4)
        disconnected = [s for s in rep.minimal_sets if not s.connected]
        v2 = frozenset(v for v in g.vertices() if g.degree(v) == 2)
        assert [s.vertices for s in disconnected] == [v2]

    def test_chain5_no_disconnected_minimal_size4(self):
        g = families.chain(5)
        rep = minimal_destabilisers(g, 4)
        assert all(s.connected for s in rep.minimal_sets if len(s.vertices) == 4)

    def test_minimality(self):
        g = families.chain(3)
        rep = minimal_destabilisers(g, 4)
        found = [s.vertices for s in rep.minimal_sets]
        for s in found:
            for v in s:
                assert not destabilises(g, s - {v})

    def test_max_size_validation(self):
        with pytest.raises(GraphError):
            minimal_destabilisers(c5(), 5)


class TestRStability:
    def test_chains_2_stable(self):
        for k in range(2, 6):
            assert is_r_stable(families.chain(k), 2)

    def test_c5_not_3_stable(self):
        assert not is_r_stable(c5(), 3)

    def test_k2_1_stable(self):
        assert is_r_stable(Graph.from_edges(2, [(0, 1)]), 1)

    def test_gp72_and_w5_3_stable(self):
        # nu <= 4 with mindeg >= 3: the smallest instances of the 3-stability
        # statement live at order 14
        assert is_r_stable(families.gp72(), 3)
        assert is_r_stable(families.w5(), 3)


class TestRemovalCountBound:
    def test_chain4_bivalent(self):
        g = families.chain(4)
        for v in g.vertices():
            if g.degree(v) == 2 and g.second_valency(v) == 5:
                assert removal_count_bound(g, v).holds

    def test_c6_all_vertices(self):
        g = families.cycle(6)
        for v in g.vertices():
            res = removal_count_bound(g, v)
            assert res.holds and res.lhs <= res.rhs

    def test_gp72_all_vertices(self):
        g = families.gp72()
        for v in g.vertices():
            res = removal_count_bound(g, v)
            assert res.holds

    def test_requires_triangle_free(self):
        tri = Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
        with pytest.raises(GraphError):
            removal_count_bound(tri, 0)


class TestSecondNeighbourhood:
    def test_chain3_bivalent(self):
        g = families.chain(3)
        for v in g.vertices():
            if g.degree(v) == 2:
                assert check_second_nbhd_destabilises(g, v)

    def test_c5(self):
        for v in range(5):
            assert check_second_nbhd_destabilises(c5(), v)

    def test_gp72(self):
        g = families.gp72()
        assert is_edge_critical(g)
        for v in g.vertices():
            assert check_second_nbhd_destabilises(g, v)

    def test_precondition_violations_distinct(self):
        two = Graph.from_edges(10, families.cycle(5).edges()
                               + [(u + 5, v + 5) for u, v in families.cycle(5).edges()])
        with pytest.raises(GraphError, match="connected"):
            check_second_nbhd_destabilises(two, 0)
        tri = Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
        with pytest.raises(GraphError, match="triangle-free"):
            check_second_nbhd_destabilises(tri, 0)
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        with pytest.raises(GraphError, match=r"d\(v\)"):
            check_second_nbhd_destabilises(star, 1)
        c4 = families.cycle(4)
        with pytest.raises(GraphError, match="edge-critical"):
            check_second_nbhd_destabilises(c4, 0)
