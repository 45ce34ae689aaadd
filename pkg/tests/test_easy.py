import pytest

from alliance_reconf import (
    TAR,
    TJ,
    TS,
    Instance,
    MalformedInput,
    Variant,
    build_graph,
    solve_exact,
    solve_gidp_oa,
    solve_idp_oa_ts,
    validate_sequence,
)
from alliance_reconf.oracle import enumerate_configs

from conftest import atlas

IDP_OA = Variant("off", False, True)
G_IDP_OA = Variant("off", True, True)


def test_p3_endpoint_is_not_idp_oa(p3):
    with pytest.raises(MalformedInput):
        solve_idp_oa_ts(Instance(p3, {1}, {3}, IDP_OA, TS))


def test_two_edges():
    g = build_graph(4, [(1, 2), (3, 4)])
    out = solve_gidp_oa(Instance(g, {1, 3}, {2, 4}, G_IDP_OA, TJ))
    assert out.min_moves == 2
    out = solve_idp_oa_ts(Instance(g, {1, 3}, {2, 4}, IDP_OA, TS))
    assert out.min_moves == 2


def test_gidp_tar_is_frozen():
    g = build_graph(4, [(1, 2), (3, 4)])
    out = solve_gidp_oa(Instance(g, {1, 3}, {2, 4}, G_IDP_OA, TAR(3)))
    assert not out.reachable


@pytest.mark.parametrize("g", atlas(5), ids=lambda g: f"n{g.n}e{sorted(g.edges)}")
def test_agree_with_oracle(g):
    for variant, rules, solver in ((IDP_OA, (TS,), solve_idp_oa_ts), (G_IDP_OA, (TS, TJ), solve_gidp_oa)):
        configs = enumerate_configs(g, variant, 0, g.n)
        for s in configs:
            for t in configs:
                if len(s) != len(t):
                    continue
                for rule in rules:
                    inst = Instance(g, s, t, variant, rule)
                    ref = solve_exact(inst)
                    out = solver(inst)
                    assert (out.reachable, out.min_moves) == (ref.reachable, ref.min_moves)
                    if out.reachable:
                        assert validate_sequence(inst, out.witness) is None
