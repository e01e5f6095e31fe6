import random
from itertools import combinations

import pytest

from trifree import families
from trifree.canon import (
    canonical_form,
    certificate,
    is_isomorphic,
    is_isomorphic_brute,
    max_code,
)
from trifree.graph import Graph, GraphError


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        yield Graph.from_edges(n, edges)


def test_certificate_matches_brute_force_up_to_5():
    # certificate equality must coincide with brute-force isomorphism
    for n in range(1, 5):
        gs = list(all_graphs(n))
        for i, g in enumerate(gs):
            for h in gs[i:]:
                assert (certificate(g) == certificate(h)) == is_isomorphic_brute(g, h)


def test_certificate_matches_brute_force_samples_n6_to_8():
    rng = random.Random(7)
    for n in (6, 7, 8):
        pairs = list(combinations(range(n), 2))
        gs = []
        for _ in range(40):
            edges = [p for p in pairs if rng.random() < 0.4]
            gs.append(Graph.from_edges(n, edges))
        for _ in range(300):
            g, h = rng.choice(gs), rng.choice(gs)
            assert (certificate(g) == certificate(h)) == is_isomorphic_brute(g, h)


def test_certificate_constant_on_orbit():
    rng = random.Random(2024)
    for g in (families.cycle(5), families.chain(3), families.w5(),
              families.gp72(), families.s2()):
        ref = certificate(g)
        for _ in range(20):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert certificate(g.relabel(perm)) == ref


def test_labeling_reproduces_canonical_graph():
    for g in (families.cycle(6), families.chain(4), families.s1()):
        form = canonical_form(g)
        assert g.relabel(form.labeling).rows == form.graph.rows
        # the canonical graph is a fixed point
        again = canonical_form(form.graph)
        assert again.graph.rows == form.graph.rows
        assert again.certificate == form.certificate


def test_c5_vs_p5_differ():
    p5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert certificate(families.cycle(5)) != certificate(p5)
    assert not is_isomorphic(families.cycle(5), p5)


def test_chain_choice_independent():
    # extending Ch_2 at any of its five bivalent vertices gives the same class
    base = families.cycle(5)
    certs = set()
    for x in range(5):
        n = base.n
        edges = base.edges() + [(n, n + 1), (n, n + 2), (n + 1, x)]
        edges += [(n + 2, y) for y in sorted(base.neighbors(x))]
        certs.add(certificate(Graph.from_edges(n + 3, edges)))
    assert len(certs) == 1
    assert certs.pop() == certificate(families.chain(3))


def test_canonical_prefix_is_canonical():
    # heredity of the max-code order, which the enumerator relies on
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 7)
        pairs = list(combinations(range(n), 2))
        edges = [p for p in pairs if rng.random() < 0.45]
        g = canonical_form(Graph.from_edges(n, edges)).graph
        if n == 1:
            continue
        prefix = Graph(tuple(r & ((1 << (n - 1)) - 1) for r in g.rows[:-1]))
        code, labeling = max_code(prefix)
        assert labeling == tuple(range(n - 1)), "prefix not canonically labeled"


def test_order_cap():
    g = Graph.from_edges(65, [(0, 1)])
    with pytest.raises(GraphError, match="64"):
        certificate(g)


def test_is_isomorphic_quick_rejects():
    assert not is_isomorphic(families.cycle(5), families.cycle(6))
