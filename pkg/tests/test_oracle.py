import pytest

from alliance_reconf import (
    DA,
    TAR,
    TJ,
    TS,
    Instance,
    MalformedInput,
    ResourceLimit,
    Variant,
    solve_ds_reconfig_tj,
    solve_exact,
    validate_sequence,
)
from alliance_reconf.oracle import bfs, enumerate_configs

from conftest import complete, cycle, path


def test_trivial(p3):
    out = solve_exact(Instance(p3, {1}, {1}, DA, TS))
    assert out.reachable and out.min_moves == 0 and out.witness == (frozenset({1}),)


def test_slide_blocked_jump_free(p3):
    assert not solve_exact(Instance(p3, {1}, {3}, DA, TS)).reachable
    out = solve_exact(Instance(p3, {1}, {3}, DA, TJ))
    assert out.min_moves == 1 and out.config_count == 2


def test_tar_and_bound(p3):
    inst = Instance(p3, {1}, {3}, DA, TAR(2))
    assert solve_exact(inst).min_moves == 2
    assert not solve_exact(inst.with_bound(1)).reachable
    assert solve_exact(inst.with_bound(2)).reachable


def test_enumerate_configs(p3):
    assert enumerate_configs(p3, DA, 1, 1) == [frozenset({1}), frozenset({3})]
    assert enumerate_configs(cycle(5), DA, 0, 0) == [frozenset()]
    assert enumerate_configs(complete(3), Variant("off", True), 1, 1) == []


def test_enumerate_order():
    got = enumerate_configs(path(4), DA, 0, 4)
    keys = [(len(c), tuple(sorted(c))) for c in got]
    assert keys == sorted(keys)


def test_ds_examples(p3, p4):
    assert solve_ds_reconfig_tj(p3, {2}, {2}).min_moves == 0
    with pytest.raises(MalformedInput):
        solve_ds_reconfig_tj(p3, {1}, {3})
    # no single vertex dominates P4, so the one-token case is malformed
    with pytest.raises(MalformedInput):
        solve_ds_reconfig_tj(p4, {2}, {3})
    assert solve_ds_reconfig_tj(p4, {2, 3}, {2, 4}).min_moves == 1
    assert solve_ds_reconfig_tj(cycle(4), {1, 3}, {2, 4}).min_moves == 2


def test_budget_is_enforced():
    g = complete(8)
    inst = Instance(g, {1, 2, 3, 4}, {5, 6, 7, 8}, DA, TJ)
    with pytest.raises(ResourceLimit):
        solve_exact(inst, budget=5)


def test_bfs_on_a_line():
    res = bfs(1, lambda s: [s + 1] if s < 10 else [], target=7)
    assert res.found and res.dist[7] == 6


@pytest.mark.parametrize("rule", [TS, TJ, TAR(3)])
def test_witness_validates(rule):
    inst = Instance(complete(4), {1, 2}, {3, 4}, DA, rule)
    out = solve_exact(inst)
    assert out.reachable
    assert not solve_exact(Instance(cycle(6), {1, 2}, {4, 5}, DA, TS)).reachable
    assert validate_sequence(inst, out.witness) is None
