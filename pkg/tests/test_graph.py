import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trifree.graph import (
    Graph,
    GraphError,
    ReductionVanishedError,
    delete_vertices,
    induced,
    parse_graph6,
    read_graph6,
    reduce_closed,
    to_graph6,
)


def c5():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def random_graph(draw_edges, n):
    return Graph.from_edges(n, draw_edges)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    return Graph.from_edges(n, edges)


class TestConstruction:
    def test_cycle_from_edges(self):
        g = c5()
        assert g.n == 5 and g.e == 5

    def test_k1(self):
        g = Graph.from_edges(1, [])
        assert g.n == 1 and g.e == 0

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(3, [(0, 1), (0, 1), (1, 2)])
        assert g.e == 2

    def test_loop_rejected(self):
        with pytest.raises(GraphError, match=r"loop edge \(1,1\)"):
            Graph.from_edges(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match=r"\(0,3\)"):
            Graph.from_edges(3, [(0, 3)])

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphError):
            Graph.from_edges(0, [])
        with pytest.raises(GraphError):
            Graph(())

    def test_order_cap(self):
        with pytest.raises(GraphError, match="cap"):
            Graph.from_edges(5000, [])

    def test_large_order_allowed(self):
        g = Graph.from_edges(4096, [(0, 4095)])
        assert g.degree(4095) == 1

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(GraphError, match="symmetric"):
            Graph((0b010, 0b000, 0b000))

    def test_relabel_roundtrip(self):
        g = c5()
        perm = [3, 1, 4, 0, 2]
        h = g.relabel(perm)
        assert sorted(h.degrees()) == sorted(g.degrees())
        assert h.has_edge(perm[0], perm[1])


class TestMetrics:
    def test_degrees_c5(self):
        g = c5()
        assert all(g.degree(v) == 2 for v in g.vertices())
        assert all(g.second_valency(v) == 4 for v in g.vertices())

    def test_k1_degree(self):
        g = Graph.from_edges(1, [])
        assert g.degree(0) == 0 and g.second_valency(0) == 0

    def test_degree_range_check(self):
        with pytest.raises(GraphError, match="out of range"):
            c5().degree(5)

    def test_neighborhoods(self):
        g = c5()
        assert g.neighbors(0) == {1, 4}
        assert g.vertices_at_distance(0, 2) == {2, 3}
        assert g.closed_neighborhood([0]) == {0, 1, 4}

    def test_closed_neighborhood_k1(self):
        g = Graph.from_edges(1, [])
        assert g.closed_neighborhood([0]) == {0}

    def test_distance(self):
        g = c5()
        assert g.distance(0, 2) == 2
        assert g.distance(0, 0) == 0

    def test_disconnected_distance(self):
        g = Graph.from_edges(2, [])
        assert g.distance(0, 1) == math.inf
        assert len(g.components()) == 2
        assert not g.is_connected()

    def test_triangle_free_and_girth(self):
        assert c5().is_triangle_free()
        assert c5().girth() == 5
        tri = Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
        assert not tri.is_triangle_free()
        assert tri.girth() == 3

    def test_girth_forest(self):
        p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert p4.girth() == math.inf
        assert p4.is_short_cycle_avoiding(10)

    def test_short_cycle_avoiding_matches_girth(self):
        g = c5()
        assert g.is_short_cycle_avoiding(4)
        assert not g.is_short_cycle_avoiding(5)

    def test_girth_c4(self):
        c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert c4.girth() == 4

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_degree_sum_is_twice_edges(self, g):
        assert sum(g.degrees()) == 2 * g.e

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_second_valency_sum_is_squared_degree_sum(self, g):
        # both sides computed by independent routes
        lhs = sum(g.second_valency(v) for v in g.vertices())
        rhs = sum(d * d for d in g.degrees())
        assert lhs == rhs


class TestDerivedGraphs:
    def test_vertex_deletion_gives_p4(self):
        red = delete_vertices(c5(), [0])
        assert red.graph.n == 4 and red.graph.e == 3
        assert red.graph.girth() == math.inf
        assert red.old_to_new == {1: 0, 2: 1, 3: 2, 4: 3}

    def test_edge_deletion_keeps_vertices(self):
        g = c5().delete_edges([(0, 1)])
        assert g.n == 5 and g.e == 4

    def test_deleting_absent_edge_errors(self):
        with pytest.raises(GraphError, match="not present"):
            c5().delete_edges([(0, 2)])

    def test_deleting_all_vertices_errors(self):
        with pytest.raises(ReductionVanishedError):
            delete_vertices(c5(), range(5))

    def test_induced_on_empty_set_errors(self):
        with pytest.raises(ReductionVanishedError):
            induced(c5(), [])

    def test_add_edge(self):
        g = c5().add_edge(0, 2)
        assert g.e == 6
        with pytest.raises(GraphError):
            c5().add_edge(1, 1)

    def test_reduce_closed_c5_gives_k2(self):
        red = reduce_closed(c5(), [0])
        assert red.graph.n == 2 and red.graph.e == 1

    def test_reduce_closed_requires_independent(self):
        with pytest.raises(GraphError, match="independent"):
            reduce_closed(c5(), [0, 1])

    def test_reduce_closed_vanished(self):
        p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
        with pytest.raises(ReductionVanishedError):
            reduce_closed(p3, [1])

    def test_reduce_closed_order_and_size(self):
        # order drops by d(v)+1 and, triangle-free, size by d^2(v)
        g = Graph.from_edges(
            8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6), (4, 7)])
        assert g.is_triangle_free()
        for v in g.vertices():
            try:
                red = reduce_closed(g, [v])
            except ReductionVanishedError:
                continue
            assert red.graph.n == g.n - g.degree(v) - 1
            assert red.graph.e == g.e - g.second_valency(v)

    def test_reduce_closed_composition_order_immaterial(self):
        g = Graph.from_edges(
            9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)])
        a = reduce_closed(reduce_closed(g, [0]).graph, [reduce_closed(g, [0]).old_to_new[4]])
        b = reduce_closed(g, [0, 4])
        assert a.graph.rows == b.graph.rows


class TestGraph6:
    def test_d_tilde_brace_is_k5(self):
        g = parse_graph6("D~{")
        assert g.n == 5 and g.e == 10
        assert to_graph6(g) == "D~{"

    def test_roundtrip_identity(self):
        g = c5()
        h = parse_graph6(to_graph6(g))
        assert h.rows == g.rows

    def test_header_tolerated(self):
        g = parse_graph6(">>graph6<<D~{")
        assert g.e == 10

    def test_empty_input_rejected(self):
        with pytest.raises(GraphError):
            parse_graph6("")

    def test_bad_length_suffix(self):
        with pytest.raises(GraphError):
            parse_graph6("D~")  # truncated body

    def test_nonzero_padding_rejected(self):
        # C3 (n=3) uses 3 bits + 3 padding bits; force a padding bit on
        with pytest.raises(GraphError, match="padding"):
            parse_graph6("B" + chr(63 + 1))

    def test_char_out_of_range(self):
        with pytest.raises(GraphError):
            parse_graph6("D" + chr(200) + "~{"[1:])

    def test_order_zero_rejected(self):
        with pytest.raises(GraphError):
            parse_graph6("?")

    def test_large_order_roundtrip(self):
        g = Graph.from_edges(100, [(i, i + 1) for i in range(99)])
        h = parse_graph6(to_graph6(g))
        assert h.rows == g.rows

    def test_read_graph6_lines(self):
        gs = list(read_graph6(["D~{", "", "Dhc"]))
        assert [g.n for g in gs] == [5, 5]

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_roundtrip_random(self, g):
        assert parse_graph6(to_graph6(g)).rows == g.rows
