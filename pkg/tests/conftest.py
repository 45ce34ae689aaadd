import networkx as nx
import pytest

from alliance_reconf import build_graph


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def complete(n):
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def star(leaves):
    return build_graph(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def cycle(n):
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def from_nx(h):
    """Relabel a networkx graph onto 1..n in sorted node order."""
    idx = {v: i for i, v in enumerate(sorted(h.nodes), 1)}
    return build_graph(len(idx), [(idx[u], idx[v]) for u, v in h.edges])


def atlas(max_n, min_n=1):
    """Every graph on min_n..max_n vertices, one per isomorphism class."""
    return [from_nx(h) for h in nx.graph_atlas_g() if min_n <= h.number_of_nodes() <= max_n]


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def p4():
    return path(4)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
