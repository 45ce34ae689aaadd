from alliance_reconf import DA, Variant
from alliance_reconf.sweep import check_graph, rmi_counterexample_exists, run_sweep, small_graphs

from conftest import complete


def test_sweep_is_clean():
    rep = run_sweep(3, workers=2)
    assert rep.checks > 5000 and not rep.failures


def test_check_graph_counts(p3):
    assert check_graph(p3).checks > 0


def test_small_graphs_are_distinct():
    gs = small_graphs(4)
    assert len({g.edges for g in gs}) == len(gs) == 11
    assert any(g == complete(4) for g in gs)


def test_rmi_helper():
    assert not rmi_counterexample_exists(4, DA)
    assert rmi_counterexample_exists(3, Variant("off", False, True))
