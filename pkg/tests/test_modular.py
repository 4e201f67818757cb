import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tripack.dh import triangle_packing_dh, validate_dh_tree, build_dh_tree
from tripack.errors import InvalidCertificate
from tripack.gen import GenConfig, gen_modular
from tripack.graph import Graph, verify_packing
from tripack.modular import (
    JOIN,
    PRIME,
    UNION,
    KModularCertificate,
    MLeaf,
    MNode,
    is_k_modular,
    is_prime_graph,
    modular_decomposition,
    nodes,
    tree_vertices,
    triangle_packing_modular,
    validate_modular_tree,
)
from tripack.oracle import max_pattern_packing_exact

from conftest import random_graph

C5 = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
P4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])


def width(t):
    return max((len(x.children) for x in nodes(t) if isinstance(x, MNode) and x.kind == PRIME), default=0)


def canon(t):
    """Isomorphism-invariant form of a tree (prime nodes by quotient graph class)."""
    if isinstance(t, MLeaf):
        return ("leaf",)
    kids = [canon(c) for c in t.children]
    if t.kind != PRIME:
        return (t.kind, tuple(sorted(kids)))
    h = nx.Graph()
    h.add_nodes_from(range(len(kids)))
    h.add_edges_from(t.quotient)
    for i, k in enumerate(kids):
        h.nodes[i]["label"] = repr(k)
    return (PRIME, nx.weisfeiler_lehman_graph_hash(h, node_attr="label"), tuple(sorted(kids)))


class TestDecomposition:
    def test_k3(self):
        t = modular_decomposition(Graph.complete(3))
        assert t.kind == JOIN and all(isinstance(c, MLeaf) for c in t.children) and len(t.children) == 3

    def test_isolated(self):
        t = modular_decomposition(Graph.empty(3))
        assert t.kind == UNION and len(t.children) == 3

    def test_c5_is_prime(self):
        t = modular_decomposition(C5)
        assert t.kind == PRIME and len(t.children) == 5
        assert nx.is_isomorphic(nx.Graph(list(t.quotient)), nx.cycle_graph(5))

    def test_single_vertex(self):
        assert modular_decomposition(Graph.empty(1)) == MLeaf(1)

    @settings(max_examples=300)
    @given(st.integers(1, 11), st.integers(0, 2**32))
    def test_random_trees_are_valid(self, n, seed):
        g = random_graph(random.Random(seed), n)
        t = modular_decomposition(g)
        assert validate_modular_tree(g, t)
        assert sorted(tree_vertices(t)) == list(g.vertices)

    @settings(max_examples=100)
    @given(st.integers(2, 10), st.integers(0, 2**32))
    def test_relabel_invariance(self, n, seed):
        rng = random.Random(seed)
        g = random_graph(rng, n)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        h = Graph.from_edges(n, [(perm[u - 1], perm[v - 1]) for u, v in g.edges()])
        assert canon(modular_decomposition(g)) == canon(modular_decomposition(h))

    def test_validator_rejects_wrong_kind(self):
        t = modular_decomposition(Graph.complete(3))
        assert not validate_modular_tree(Graph.complete(3), MNode(UNION, t.children))

    def test_prime_graph(self):
        assert is_prime_graph(P4) and is_prime_graph(C5)
        assert not is_prime_graph(Graph.complete(4))


class TestWidth:
    def test_cograph(self):
        assert is_k_modular(modular_decomposition(Graph.complete(6)), 0)

    def test_c5(self):
        t = modular_decomposition(C5)
        assert not is_k_modular(t, 4) and is_k_modular(t, 5)

    def test_p4(self):
        assert is_k_modular(modular_decomposition(P4), 4)


class TestPacking:
    def test_k6(self):
        g = Graph.complete(6)
        assert triangle_packing_modular(g, KModularCertificate(modular_decomposition(g), 0)).size == 2

    def test_c5(self):
        assert triangle_packing_modular(C5, KModularCertificate(modular_decomposition(C5), 5)).size == 0

    def test_certificate_checks(self):
        with pytest.raises(InvalidCertificate):
            triangle_packing_modular(C5, KModularCertificate(modular_decomposition(C5), 4))
        g = Graph.complete(3)
        with pytest.raises(InvalidCertificate):
            triangle_packing_modular(g, KModularCertificate(MNode(UNION, (MLeaf(1), MLeaf(2), MLeaf(3))), 0))

    @settings(max_examples=300, deadline=None)
    @given(st.integers(1, 12), st.sampled_from([0, 4, 5]), st.integers(0, 2**32))
    def test_generated_match_oracle(self, n, k, seed):
        g, t = gen_modular(GenConfig(seed=seed, n=n), k)
        assert validate_modular_tree(g, t) and is_k_modular(t, k)
        res = triangle_packing_modular(g, KModularCertificate(t, k))
        assert verify_packing(g, res.packing)
        assert res.size == max_pattern_packing_exact(g).size

    @settings(max_examples=300, deadline=None)
    @given(st.integers(1, 9), st.integers(0, 2**32))
    def test_random_graphs_match_oracle(self, n, seed):
        g = random_graph(random.Random(seed), n)
        t = modular_decomposition(g)
        res = triangle_packing_modular(g, KModularCertificate(t, width(t)))
        assert res.size == max_pattern_packing_exact(g).size

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 10), st.integers(0, 2**32))
    def test_cographs_agree_with_dh(self, n, seed):
        g, t = gen_modular(GenConfig(seed=seed, n=n), 0)

        def shape(x):
            if isinstance(x, MLeaf):
                return x.vertex
            acc = shape(x.children[0])
            for c in x.children[1:]:
                acc = (acc, shape(c))
            return acc

        dh_tree = build_dh_tree(g, shape(t))
        assert validate_dh_tree(g, dh_tree)
        assert triangle_packing_dh(g, dh_tree).size == triangle_packing_modular(g, KModularCertificate(t, 0)).size

    def test_wide_prime_node(self):
        # a prime quotient on 6 vertices with cliques substituted in
        rng = random.Random(4)
        while True:
            q = Graph.from_edges(6, [e for e in combinations(range(1, 7), 2) if rng.random() < 0.5])
            if is_prime_graph(q):
                break
        sizes = [1, 2, 3, 1, 2, 3]
        blocks, nxt = [], 1
        for s in sizes:
            blocks.append(list(range(nxt, nxt + s)))
            nxt += s
        edges = [e for b in blocks for e in combinations(b, 2)]
        edges += [(u, v) for i, j in q.edges() for u in blocks[i - 1] for v in blocks[j - 1]]
        g = Graph.from_edges(12, edges)
        t = modular_decomposition(g)
        assert width(t) == 6
        res = triangle_packing_modular(g, KModularCertificate(t, 6))
        assert res.size == max_pattern_packing_exact(g).size
