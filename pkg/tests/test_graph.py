import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from polyembed.graph import (Connectivity, CubicGraph, GraphFormatError, NotCubicError, connectivity_class,
                             decode_graph6, girth, is_induced, parse_graph6, read_graph6_lines,
                             small_cycles, write_graph6)

from conftest import graphs_up_to, to_nx


def nx_graph6(g):
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


# graph6 -------------------------------------------------------------------

def test_k4_graph6():
    g = parse_graph6("C~")
    assert g.n == 4
    assert sorted(g.edges()) == list(itertools.combinations(range(4), 2))
    assert write_graph6(g) == "C~"


def test_prism_matches_reference_encoder(named):
    prism = named["prism"]
    text = nx_graph6(prism)
    assert write_graph6(prism) == text
    g = parse_graph6(text)
    tris = small_cycles(g).triangles
    assert len(tris) == 2


def test_header_is_tolerated():
    assert parse_graph6(">>graph6<<C~").n == 4
    assert list(read_graph6_lines([">>graph6<<C~\n", "\n", "C~\n"])) == [(1, ">>graph6<<C~"), (3, "C~")]


def test_empty_graph_is_not_cubic():
    with pytest.raises(NotCubicError):
        parse_graph6("C?")


@pytest.mark.parametrize("text", ["", "C", "C~~", "C\x7f", "~??"])
def test_malformed_graph6(text):
    with pytest.raises(GraphFormatError):
        parse_graph6(text)


def test_odd_order_rejected():
    # triangle graph: 3 vertices, 2-regular
    with pytest.raises(NotCubicError):
        parse_graph6(nx.to_graph6_bytes(nx.cycle_graph(3), header=False).decode().strip())


def test_round_trip_on_generated_graphs(small_graphs):
    for g in small_graphs:
        text = write_graph6(g)
        assert text == nx_graph6(g)
        assert parse_graph6(text) == g
        assert nx.utils.graphs_equal(nx.from_graph6_bytes(text.encode()), to_nx(g))


def test_long_size_prefix():
    g = nx.random_regular_graph(3, 70, seed=1)
    text = nx.to_graph6_bytes(g, header=False).decode().strip()
    ours = parse_graph6(text)
    assert ours.n == 70
    assert write_graph6(ours) == text


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 20).map(lambda k: 2 * k), st.integers(0, 10**6))
def test_random_regular_round_trip(n, seed):
    h = nx.random_regular_graph(3, n, seed=seed)
    text = nx.to_graph6_bytes(h, header=False).decode().strip()
    n2, edges = decode_graph6(text)
    assert n2 == n and sorted(edges) == sorted(tuple(sorted(e)) for e in h.edges())
    assert write_graph6(parse_graph6(text)) == text


def test_cubic_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        CubicGraph(((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 1)))
    with pytest.raises(ValueError):
        CubicGraph(((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 0)))


# connectivity -------------------------------------------------------------

def brute_connectivity(g):
    h = to_nx(g)
    if not nx.is_connected(h):
        return 0
    for k in (1, 2):
        for cut in itertools.combinations(range(g.n), k):
            rest = h.copy()
            rest.remove_nodes_from(cut)
            if not nx.is_connected(rest):
                return k
    return 3


def test_connectivity_examples(named):
    assert connectivity_class(named["k4"]) is Connectivity.THREE
    assert connectivity_class(named["k33"]) is Connectivity.THREE
    # two K4s, one edge cut out of each, crossed over: a 2-edge cut
    edges = [e for e in itertools.combinations(range(4), 2) if e != (0, 1)]
    edges += [(a + 4, b + 4) for a, b in edges]
    edges += [(0, 4), (1, 5)]
    g = CubicGraph.from_edges(8, edges)
    assert connectivity_class(g) is Connectivity.TWO
    assert brute_connectivity(g) == 2


def test_connectivity_against_brute_force(small_graphs):
    seen = set()
    for g in small_graphs + list(graphs_up_to(14))[-120:]:
        c = connectivity_class(g)
        assert int(c) == brute_connectivity(g), write_graph6(g)
        seen.add(c)
    assert {Connectivity.ONE, Connectivity.TWO, Connectivity.THREE} <= seen


def test_disconnected():
    g = CubicGraph.from_edges(8, [(a + s, b + s) for s in (0, 4) for a, b in itertools.combinations(range(4), 2)])
    assert connectivity_class(g) is Connectivity.DISCONNECTED


# small cycles --------------------------------------------------------------

def naive_cycles(g, length):
    found = set()
    for c in nx.simple_cycles(to_nx(g), length_bound=length):
        if len(c) == length:
            found.add(frozenset(zip(c, c[1:] + c[:1])) | frozenset(zip(c[1:] + c[:1], c)))
    return found


def as_edge_set(c):
    c = list(c)
    return frozenset(zip(c, c[1:] + c[:1])) | frozenset(zip(c[1:] + c[:1], c))


def test_small_cycles_named(named):
    k4 = small_cycles(named["k4"])
    assert (len(k4.triangles), len(k4.quads), len(k4.pentagons), len(k4.hexagons)) == (4, 3, 0, 0)
    pet = small_cycles(named["petersen"])
    # girth 5, so every 6-cycle is induced: an exhaustive search finds 10
    assert (len(pet.triangles), len(pet.quads), len(pet.pentagons), len(pet.hexagons)) == (0, 0, 12, 10)
    hea = small_cycles(named["heawood"])
    assert (len(hea.triangles), len(hea.quads), len(hea.pentagons), len(hea.hexagons)) == (0, 0, 0, 28)


def test_small_cycles_against_naive_search(small_graphs):
    for g in small_graphs:
        sc = small_cycles(g)
        h = to_nx(g)
        for length, got, induced in ((3, sc.triangles, False), (4, sc.quads, False),
                                     (5, sc.pentagons, True), (6, [x.cycle for x in sc.hexagons], True)):
            want = naive_cycles(g, length)
            if induced:
                want = {c for c in want if nx.subgraph(h, {v for e in c for v in e}).number_of_edges() == length}
            assert len(got) == len(set(map(as_edge_set, got))), "duplicates"
            assert set(map(as_edge_set, got)) == want
            for c in got:
                assert len(c) == length
                if induced:
                    assert is_induced(g, c)


def test_hexagon_thirds(named):
    g = named["heawood"]
    for hexagon in small_cycles(g).hexagons:
        cyc = hexagon.cycle
        for i, v in enumerate(cyc):
            rest = set(g.adj[v]) - {cyc[i - 1], cyc[(i + 1) % 6]}
            assert rest == {hexagon.thirds[i]}


def test_canonical_cycle_representative(named):
    for c in small_cycles(named["petersen"]).pentagons:
        assert c[0] == min(c)
        assert c[1] < c[-1]


def test_girth(named):
    assert [girth(named[x]) for x in ("k4", "prism", "k33", "petersen", "heawood", "coxeter")] == [3, 3, 4, 5, 6, 7]


def test_forced_faces_skip_k4_quads(named):
    assert len(small_cycles(named["k4"]).forced_faces(named["k4"])) == 4
    prism = named["prism"]
    assert len(small_cycles(prism).forced_faces(prism)) == 5
