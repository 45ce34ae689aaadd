import pytest

from alliance_reconf import DA, PA, TAR, TJ, TS, Instance, Misuse, Variant, build_graph, solve
from alliance_reconf.dispatch import nd_is_small, pick

from conftest import complete


def test_auto_order(p3):
    edge = build_graph(2, [(1, 2)])
    assert pick(Instance(edge, {1}, {2}, Variant("off", False, True), TS))[0] == "easy"
    assert pick(Instance(p3, {1}, {3}, DA, TS))[0] == "fpt"
    assert pick(Instance(complete(4), {1, 2}, {3, 4}, PA, TJ))[0] == "fpt"


def test_auto_falls_to_nd_then_oracle():
    oa_tj = Instance(complete(6), {1, 2, 3, 4}, {3, 4, 5, 6}, Variant("off"), TJ)
    assert not nd_is_small(oa_tj)
    assert pick(oa_tj)[0] == "oracle"
    big = Instance(build_graph(8, []), {1}, {2}, Variant("off"), TJ)
    assert pick(big)[0] == "nd"


def test_named_family_refuses(p3):
    with pytest.raises(Misuse):
        pick(Instance(p3, {1}, {3}, DA, TJ), "easy")
    with pytest.raises(Misuse):
        pick(Instance(p3, {1}, {3}, DA, TJ), "magic")


@pytest.mark.parametrize("family", ["auto", "fpt", "nd", "oracle"])
def test_families_agree(p4, family):
    out = solve(Instance(p4, {1, 2}, {3, 4}, DA, TAR(3)), family)
    assert out.min_moves == 4
