import random

import networkx as nx
from hypothesis import given, settings, strategies as st
from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_edge_match

from polyembed import RotationSystem, canon_embedded, canon_graph, enumerate_polyhedral, mirror, named_graph
from polyembed.graph import CubicGraph
from polyembed.iso import canonical_labeling, group_isomorphic

from conftest import graphs_on, graphs_up_to, to_nx


def relabel_system(r, perm):
    """Same embedded graph with vertex ``v`` renamed ``perm[v]``."""
    n = r.n
    rots = [None] * n
    for v in range(n):
        rots[perm[v]] = tuple(perm[u] for u in r.rotation(v))
    g = CubicGraph(tuple(rots))
    rng = random.Random(sum(perm))
    # scramble the stored reference order so the flip bits change too
    adj = []
    for v in range(n):
        a = list(g.adj[v])
        rng.shuffle(a)
        adj.append(tuple(a))
    h = CubicGraph(tuple(adj))
    return RotationSystem.from_rotations(h, rots)


def dart_digraph(r):
    d = nx.DiGraph()
    for v in range(r.n):
        for u in r.graph.adj[v]:
            d.add_edge((v, u), (v, r.nx(v, u)), kind="rot")
            d.add_edge((v, u), (u, v), kind="inv")
    return d


def oracle_iso(a, b, allow_mirror):
    em = categorical_edge_match("kind", None)
    if DiGraphMatcher(dart_digraph(a), dart_digraph(b), edge_match=em).is_isomorphic():
        return True
    return allow_mirror and DiGraphMatcher(dart_digraph(a), dart_digraph(mirror(b)), edge_match=em).is_isomorphic()


GRAPHS = graphs_up_to(10)


@settings(max_examples=150, deadline=None)
@given(st.randoms(use_true_random=False))
def test_embedded_code_relabel_invariant(rng):
    g = rng.choice(GRAPHS)
    r = RotationSystem(g, [rng.randrange(2) for _ in range(g.n)])
    perm = list(range(g.n))
    rng.shuffle(perm)
    s = relabel_system(r, perm)
    assert canon_embedded(s, False) == canon_embedded(r, False)
    assert canon_embedded(s, True) == canon_embedded(r, True)
    assert canon_embedded(mirror(r), True) == canon_embedded(r, True)


def test_embedded_code_against_dart_graph_oracle():
    rng = random.Random(2)
    for g in graphs_up_to(8):
        masks = range(1 << g.n) if g.n <= 6 else rng.sample(range(1 << g.n), 20)
        systems = [RotationSystem.from_mask(g, m) for m in masks]
        for allow_mirror in (False, True):
            groups = group_isomorphic(systems, allow_mirror)
            reps = [systems[grp[0]] for grp in groups]
            for grp in groups:
                for i in rng.sample(grp, min(3, len(grp))):
                    assert oracle_iso(systems[grp[0]], systems[i], allow_mirror)
            for i in range(len(reps)):
                for j in range(i + 1, len(reps)):
                    assert not oracle_iso(reps[i], reps[j], allow_mirror)


def test_heawood_embeddings():
    embs, _ = enumerate_polyhedral(named_graph("heawood"))
    assert len(group_isomorphic(embs, True)) == 1
    # the torus embedding of the Heawood graph is chiral
    assert len({canon_embedded(r, False) for r in embs + [mirror(r) for r in embs]}) == 2


def test_codes_are_bytes_with_size_header():
    r = RotationSystem(named_graph("k4"))
    c = canon_embedded(r)
    assert isinstance(c, bytes) and int.from_bytes(c[:4], "big") == 4
    assert canon_embedded(r, True) != canon_embedded(r, False)


# abstract graphs ---------------------------------------------------------------

@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False))
def test_graph_code_relabel_invariant(rng):
    g = rng.choice(graphs_up_to(12) + [named_graph("heawood"), named_graph("petersen")])
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert canon_graph(h) == canon_graph(g)
    p, _ = canonical_labeling(h)
    q, _ = canonical_labeling(g)
    assert set(h.relabel(p).edges()) == set(g.relabel(q).edges())


def test_graph_codes_separate_classes():
    for n in (8, 10):
        gs = graphs_on(n)
        assert len({canon_graph(g) for g in gs}) == len(gs)
        for i in range(len(gs)):
            for j in range(i + 1, len(gs)):
                assert not nx.is_isomorphic(to_nx(gs[i]), to_nx(gs[j]))


def test_vertex_transitive_graphs():
    rng = random.Random(4)
    for name in ("petersen", "heawood", "coxeter"):
        g = named_graph(name)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canon_graph(g.relabel(perm)) == canon_graph(g)
