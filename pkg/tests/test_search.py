import random

import networkx as nx
import pytest

from polyembed import (SearchConfig, brute_force_polyhedral, compute_classes,
                       connectivity_class, dual_is_simple, enumerate_polyhedral, genus, hexagon_propagate,
                       is_polyhedral, max_genus_bound, mirror, named_graph, parse_graph6, small_cycles,
                       summarize)
from polyembed.embedding import small_cycle_violations
from polyembed.graph import Connectivity
from polyembed.search import EmbeddingSummary, Infeasible, ParityState, hexagon_word_allowed

from conftest import graphs_up_to, to_nx


def word(bits):
    return sum(b << i for i, b in enumerate(bits))


# hexagon rule --------------------------------------------------------------------

def test_allowed_words():
    allowed = [w for w in range(64) if hexagon_word_allowed(w)]
    assert len(allowed) == 16
    assert hexagon_word_allowed(0) and hexagon_word_allowed(63)
    assert hexagon_word_allowed(word([1, 1, 0, 1, 0, 0]))
    assert not hexagon_word_allowed(word([1, 1, 1, 0, 0, 0]))
    assert not hexagon_word_allowed(word([0, 1, 1, 1, 0, 0]))
    assert not hexagon_word_allowed(word([1, 1, 1, 1, 0, 0]))


def test_five_fixed_sides():
    # L L L R R ? with the three Ls consecutive: dead either way
    assert not any(hexagon_word_allowed(word([1, 1, 1, 0, 0, x])) for x in (0, 1))
    # L L R L R ?: only R completes it
    assert [x for x in (0, 1) if hexagon_word_allowed(word([1, 1, 0, 1, 0, x]))] == [0]


def test_heawood_initial_propagation():
    g = named_graph("heawood")
    sc = small_cycles(g)
    st = compute_classes(g, sc)
    st.assign(0, 0)
    assert hexagon_propagate(g, sc, st)


def _extends(emb_flips, st):
    return all(emb_flips[v] == st.flips[v] for v in st.fixed_vertices())


@pytest.mark.parametrize("text", [None, "K{O__cI@OP?b", "K`o_`GQ`AC`K"])
def test_propagation_is_sound(text):
    # a conflict or a forced value never cuts off a real embedding
    rng = random.Random(5)
    g = named_graph("heawood") if text is None else parse_graph6(text)
    embs = brute_force_polyhedral(g)
    all_flips = [r.flips for r in embs] + [mirror(r).flips for r in embs]
    sc = small_cycles(g)
    for _ in range(200):
        st = compute_classes(g, sc)
        if isinstance(st, Infeasible):
            pytest.skip("graph has a parity conflict")
        for c in rng.sample(range(len(st.members)), rng.randrange(1, len(st.members) + 1)):
            if not st.fixed[c]:
                st.assign(c, rng.randrange(2))
        before = set(st.fixed_vertices())
        pre = [f for f in all_flips if _extends(f, st)]
        ok = hexagon_propagate(g, sc, st)
        if not ok:
            assert pre == []
        else:
            assert set(st.fixed_vertices()) >= before
            assert [f for f in all_flips if _extends(f, st)] == pre


# classes -------------------------------------------------------------------------

def test_heawood_singletons():
    st = compute_classes(named_graph("heawood"))
    assert isinstance(st, ParityState)
    assert sorted(map(len, st.classes)) == [1] * 14


def test_petersen_single_class():
    res = compute_classes(named_graph("petersen"))
    assert isinstance(res, Infeasible) and not res
    assert [sorted(c) for c in res.classes] == [list(range(10))]


def test_pentagon_quad_conflict():
    # two quads and eight pentagons force an odd parity cycle
    g = parse_graph6("IQou@_K?w")
    sc = small_cycles(g)
    assert connectivity_class(g) is Connectivity.THREE
    assert len(sc.quads) == 2 and len(sc.pentagons) == 8 and not sc.triangles
    res = compute_classes(g, sc)
    assert isinstance(res, Infeasible) and len(res.cycle) in (4, 5)
    assert brute_force_polyhedral(g) == []


def test_parities_hold_in_every_embedding():
    for g in graphs_up_to(12):
        st = compute_classes(g)
        if isinstance(st, Infeasible):
            continue
        embs, _ = enumerate_polyhedral(g)
        for r in embs:
            for mem in st.members:
                rel = {r.flips[v] ^ st.par[v] for v in mem}
                assert len(rel) == 1


# enumeration -------------------------------------------------------------------

def test_named_results():
    assert enumerate_polyhedral(named_graph("k4"))[1].per_genus == {0: 1}
    assert enumerate_polyhedral(named_graph("prism"))[1].per_genus == {0: 1}
    s = enumerate_polyhedral(named_graph("petersen"))[1]
    assert s.total == 0 and s.reason == "parity-conflict"
    embs, s = enumerate_polyhedral(named_graph("heawood"))
    assert s.per_genus == {1: 8} and len(embs) == 8


def test_not_3_connected_reason():
    from itertools import combinations

    from polyembed import CubicGraph

    edges = [e for e in combinations(range(4), 2) if e != (0, 1)]
    edges += [(a + 4, b + 4) for a, b in edges] + [(0, 4), (1, 5)]
    _, s = enumerate_polyhedral(CubicGraph.from_edges(8, edges))
    assert s.reason == "not-3-connected" and s.total == 0


def test_config_variants():
    g = named_graph("heawood")
    embs, s = enumerate_polyhedral(g, SearchConfig(emit_mirrors=True))
    assert len(embs) == 16 and s.total == 8
    assert len({r.mask for r in embs}) == 16
    for a, b in zip(embs[::2], embs[1::2]):
        assert b == mirror(a)
    embs, s = enumerate_polyhedral(g, SearchConfig(count_only=True))
    assert embs == [] and s.total == 8
    embs, s = enumerate_polyhedral(g, SearchConfig(max_genus=0))
    assert embs == [] and s.total == 0
    with pytest.raises(ValueError):
        SearchConfig(max_genus=-1)


def test_emitted_embeddings_are_valid_and_distinct():
    for g in graphs_up_to(12):
        embs, s = enumerate_polyhedral(g)
        keys = set()
        for r in embs:
            assert is_polyhedral(r) and dual_is_simple(r)
            assert small_cycle_violations(r) == []
            assert genus(r) <= max_genus_bound(g.n)
            k = min(r.mask, mirror(r).mask)
            assert k not in keys
            keys.add(k)
        assert summarize(embs).per_genus == s.per_genus


def test_determinism():
    g = named_graph("heawood")
    a, _ = enumerate_polyhedral(g)
    b, _ = enumerate_polyhedral(g)
    assert [r.flips for r in a] == [r.flips for r in b]


def test_planar_graphs_have_one_embedding():
    # 3-connected planar graphs: exactly one polyhedral embedding, in the sphere
    planar = 0
    for g in graphs_up_to(14):
        if connectivity_class(g) is not Connectivity.THREE:
            continue
        is_planar, _ = nx.check_planarity(to_nx(g))
        _, s = enumerate_polyhedral(g, SearchConfig(count_only=True))
        if is_planar:
            planar += 1
            assert s.per_genus == {0: 1}
        else:
            assert 0 not in s.per_genus
    assert planar > 0


# summaries -----------------------------------------------------------------------

def test_summary_flags():
    embs, _ = enumerate_polyhedral(named_graph("heawood"))
    s = summarize(embs)
    assert s.per_genus == {1: 8} and s.multi_embedding and not s.multi_genus
    assert s.min_search_genus == 1 and s.genus_string() == "g1=8"
    e = summarize([])
    assert e.total == 0 and not e.has_any and not e.multi_embedding and e.min_search_genus is None
    merged = EmbeddingSummary({1: 1}) + EmbeddingSummary({2: 2})
    assert merged.per_genus == {1: 1, 2: 2} and merged.multi_genus and merged.total == 3
