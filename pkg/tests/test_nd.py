import pytest

from alliance_reconf import (
    DA,
    OA,
    TJ,
    TS,
    Instance,
    MalformedInput,
    solve_exact,
    solve_nd_ell,
    solve_nd_k,
    validate_sequence,
)

from conftest import complete


def test_k6_two_tokens_is_not_a_da():
    # each member of a 2-set in K6 has 1 inside, 4 outside
    with pytest.raises(MalformedInput):
        Instance(complete(6), {1, 2}, {5, 6}, DA, TJ)


def test_k6_three_tokens():
    inst = Instance(complete(6), {1, 2, 3}, {4, 5, 6}, DA, TJ)
    out = solve_nd_k(inst)
    assert out.min_moves == solve_exact(inst).min_moves == 3
    assert out.info["spares"] == 0


def test_trivial_and_p3(p3):
    assert solve_nd_k(Instance(p3, {1}, {1}, DA, TJ)).min_moves == 0
    inst = Instance(p3, {1, 2}, {2, 3}, OA, TS)
    ref = solve_exact(inst)
    assert solve_nd_k(inst).reachable == ref.reachable


def test_nd_ell():
    g = complete(4)
    with pytest.raises(MalformedInput):
        Instance(g, {1}, {4}, DA, TJ)
    one = solve_nd_ell(Instance(g, {1, 2}, {1, 3}, DA, TJ), 1)
    assert one.min_moves == 1
    two = Instance(g, {1, 2}, {3, 4}, DA, TJ)
    assert not solve_nd_ell(two, 1).reachable
    out = solve_nd_ell(two, 2)
    assert out.min_moves == 2 and validate_sequence(two, out.witness) is None


def test_nd_ell_zero(p3):
    assert not solve_nd_ell(Instance(p3, {1}, {3}, DA, TJ), 0).reachable
