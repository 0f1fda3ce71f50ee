import functools

import networkx as nx
import pytest

from polyembed import gen_cubic, named_graph


@functools.lru_cache(maxsize=None)
def graphs_on(n):
    return tuple(gen_cubic(n))


def graphs_up_to(n_max):
    out = []
    for n in range(4, n_max + 1, 2):
        out.extend(graphs_on(n))
    return out


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture(scope="session")
def small_graphs():
    """All connected cubic graphs with at most 12 vertices (112 of them)."""
    return graphs_up_to(12)


@pytest.fixture(scope="session")
def named():
    return {name: named_graph(name) for name in ("k4", "prism", "k33", "petersen", "heawood", "coxeter")}


# acceptance verdicts, printed once at the end of the run
ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{ACCEPTANCE[name]}  {name}")
