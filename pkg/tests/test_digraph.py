import itertools
import math

import pytest

from cayvol import digraph
from cayvol.digraph import (
    Digraph, GraphError, automorphisms, cayley_graph, coloured_cayley_graph, cycle_length_gcd, is_strongly_connected,
    strongly_connected_components, to_dot,
)
from cayvol.group import build, cyclic, symmetric


def _cycle(n, offset=0):
    return [(offset + i, offset + (i + 1) % n) for i in range(n)]


def test_cayley_graph_examples():
    D = cayley_graph(cyclic(4), [1])
    assert D.sorted_edges() == [(0, 1), (1, 2), (2, 3), (3, 0)]
    S3 = symmetric(3)
    three_cycle = next(g for g in range(6) if S3.element_order(g) == 3)
    D = cayley_graph(S3, [three_cycle])
    comps = strongly_connected_components(D)
    assert sorted(len(c) for c in comps) == [3, 3]
    full = cayley_graph(S3, range(6))
    assert len(full.edges) == 36


def test_coloured_cayley_graph():
    G = cyclic(2)
    W = coloured_cayley_graph(G, [0, 1], [1, 2])
    assert W.weight == {(0, 0): 1, (1, 1): 1, (0, 1): 2, (1, 0): 2}
    assert W.faithful
    W = coloured_cayley_graph(G, [0, 1], [3, 3])
    assert W.faithful is False
    with pytest.raises(GraphError):
        coloured_cayley_graph(G, [0, 1], [1, 0])


def test_strong_connectivity():
    assert is_strongly_connected(Digraph(5, _cycle(5)))
    assert not is_strongly_connected(Digraph(6, _cycle(3) + _cycle(3, 3)))
    assert not is_strongly_connected(Digraph(2, [(0, 1)]))


def test_scc_order_is_reverse_topological():
    D = Digraph(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 2)])
    comps = strongly_connected_components(D)
    assert [sorted(c) for c in comps] == [[2, 3], [0, 1]]


def test_scc_deep_chain_iterative():
    n = 5000
    D = Digraph(n, [(i, i + 1) for i in range(n - 1)])
    assert len(strongly_connected_components(D)) == n


def test_cycle_length_gcd():
    assert cycle_length_gcd(Digraph(4, _cycle(4))) == 4
    S3 = symmetric(3)
    assert cycle_length_gcd(cayley_graph(S3, S3.coprime_generating_set())) == 1
    assert cycle_length_gcd(Digraph(3, [(0, 1), (1, 2), (2, 2)])) == 1
    assert cycle_length_gcd(Digraph(3, [(0, 1), (1, 2)])) is None


@pytest.mark.parametrize("spec", ["cyclic:6", "symmetric:3", "dihedral:4", "quaternion:8"])
def test_cycle_gcd_of_single_generator_is_its_order(spec):
    G = build(spec)
    for s in range(G.n):
        assert cycle_length_gcd(cayley_graph(G, [s])) == G.element_order(s)


@pytest.mark.parametrize("spec", ["cyclic:4", "product:cyclic:2,cyclic:2", "symmetric:3", "dihedral:4"])
def test_strong_connectivity_equals_generation(spec):
    G = build(spec)
    for r in range(1, G.n + 1):
        for S in itertools.combinations(range(G.n), r):
            assert is_strongly_connected(cayley_graph(G, S)) == G.generates(S)


def test_automorphism_examples():
    assert len(automorphisms(Digraph(5, _cycle(5)))) == 5
    assert automorphisms(Digraph(1, [(0, 0)])) == [(0,)]
    # undirected-looking 4-cycle (both directions): dihedral symmetry
    D = Digraph(4, _cycle(4) + [(j, i) for i, j in _cycle(4)])
    assert len(automorphisms(D)) == 8


def test_automorphisms_of_coloured_cayley_graphs_are_left_translations():
    for spec in ["cyclic:5", "symmetric:3", "dihedral:4", "quaternion:8"]:
        G = build(spec)
        S = G.coprime_generating_set()
        f = {s: k + 1 for k, s in enumerate(S)}
        auts = automorphisms(coloured_cayley_graph(G, S, [f.get(g, 0) for g in range(G.n)]))
        assert set(auts) == {tuple(G.mul(h, g) for g in range(G.n)) for h in range(G.n)}


def test_automorphism_set_is_a_group():
    D = cayley_graph(build("dihedral:4"), [1, 4])
    auts = automorphisms(D)
    aset = set(auts)
    assert tuple(range(8)) in aset
    for a, b in itertools.product(auts, repeat=2):
        assert tuple(a[b[i]] for i in range(8)) in aset
    for a in auts:
        assert all((a[i], a[j]) in D.edges for i, j in D.edges)


def test_automorphism_limits():
    assert len(automorphisms(Digraph(4, []), limit=3)) == 3
    with pytest.raises(GraphError):
        automorphisms(Digraph(30, []))


def test_vertex_colours_restrict():
    D = Digraph(4, _cycle(4))
    assert automorphisms(D, vertex_colours=[0, 1, 1, 1]) == [(0, 1, 2, 3)]


def test_to_dot():
    D = Digraph(2, [(0, 1)])
    text = to_dot(D)
    assert '"v0" -> "v1"' in text
    W = coloured_cayley_graph(cyclic(2), [1], [0, 2])
    assert 'label="2"' in to_dot(W)
    assert to_dot(W) == to_dot(coloured_cayley_graph(cyclic(2), [1], [0, 2]))


def test_to_json_edge_list():
    import json
    data = json.loads(digraph.to_json(cayley_graph(cyclic(3), [1])))
    assert len(data["edges"]) == 3
