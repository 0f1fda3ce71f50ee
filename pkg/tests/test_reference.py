import networkx as nx
import pytest

from polyembed import (RotationSystem, brute_force_polyhedral, connectivity_class, gen_cubic, genus,
                       genus_profile, min_genus, named_graph)
from polyembed.graph import Connectivity
from polyembed.reference import bridge_join, insert_diamond, insert_edge, ring_of_diamonds

from conftest import graphs_on, graphs_up_to, to_nx


def test_brute_force_examples():
    k4 = brute_force_polyhedral(named_graph("k4"))
    assert len(k4) == 1 and genus(k4[0]) == 0
    assert brute_force_polyhedral(named_graph("k33")) == []
    h = brute_force_polyhedral(named_graph("heawood"))
    assert len(h) == 8 and {genus(r) for r in h} == {1}
    assert all(r.flips[0] == 0 for r in h)


def python_profile(g):
    out = {}
    for mask in range(1 << (g.n - 1)):
        gg = genus(RotationSystem(g, [0] + [(mask >> (v - 1)) & 1 for v in range(1, g.n)]))
        out[gg] = out.get(gg, 0) + 1
    return out


def test_profile_against_python_tracer():
    for g in graphs_up_to(10):
        prof = genus_profile(g)
        assert prof.per_genus == python_profile(g)
        assert prof.total == 1 << (g.n - 1)
        brute = brute_force_polyhedral(g)
        counts = {}
        for r in brute:
            counts[genus(r)] = counts.get(genus(r), 0) + 1
        assert prof.polyhedral == counts


def test_min_genus_examples():
    assert min_genus(named_graph("k4")) == 0
    assert min_genus(named_graph("petersen")) == 1
    assert min_genus(named_graph("heawood")) == 1
    assert min_genus(named_graph("k33")) == 1
    prof = genus_profile(named_graph("heawood"))
    assert prof.min_genus == 1 and prof.per_genus == {1: 8, 2: 504, 3: 5440, 4: 2240}
    assert prof.tsv().splitlines()[:2] == ["genus\tcount\tpolyhedral_count", "1\t8\t8"]


def test_min_genus_matches_planarity():
    for g in graphs_up_to(12):
        assert (min_genus(g) == 0) == nx.check_planarity(to_nx(g))[0]


@pytest.mark.parametrize("n, count", [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)])
def test_gen_counts(n, count):
    gs = list(gen_cubic(n))
    assert len(gs) == count
    for g in gs:
        h = to_nx(g)
        assert nx.is_connected(h) and all(d == 3 for _, d in h.degree())


def test_gen_isomorph_free():
    for n in (8, 10):
        gs = graphs_on(n)
        for i in range(len(gs)):
            for j in range(i + 1, len(gs)):
                assert not nx.is_isomorphic(to_nx(gs[i]), to_nx(gs[j]))


def test_gen_deterministic():
    assert list(gen_cubic(10)) == list(gen_cubic(10))
    with pytest.raises(ValueError):
        list(gen_cubic(7))


def test_operations():
    k4 = named_graph("k4")
    # opposite edges of K4 give K33, adjacent ones the prism
    assert nx.is_isomorphic(to_nx(insert_edge(k4, (0, 1), (2, 3))), nx.complete_bipartite_graph(3, 3))
    assert nx.is_isomorphic(to_nx(insert_edge(k4, (0, 1), (1, 2))), nx.circular_ladder_graph(3))
    b = bridge_join(k4, (0, 1), k4, (0, 1))
    assert b.n == 10 and connectivity_class(b) is Connectivity.ONE
    d = insert_diamond(k4, (0, 1))
    assert d.n == 8 and nx.is_isomorphic(to_nx(d), to_nx(ring_of_diamonds(2)))
