"""Randomised properties on graphs up to 7 vertices."""

from hypothesis import given, settings
from hypothesis import strategies as st

from alliance_reconf import (
    ALL_VARIANTS,
    RMI_VARIANTS,
    TAR,
    TJ,
    TS,
    Instance,
    build_graph,
    solve_exact,
    solve_nd_k,
    tar_to_tj,
    tj_to_tar,
    validate_sequence,
)
from alliance_reconf.graph import set_of
from alliance_reconf.oracle import enumerate_masks


@st.composite
def instances(draw, variants=ALL_VARIANTS):
    n = draw(st.integers(1, 7))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = build_graph(n, edges)
    v = draw(st.sampled_from(variants))
    masks = enumerate_masks(g, v, 0, 3)
    s = draw(st.sampled_from(masks)) if masks else None
    same = [m for m in masks if s is not None and m.bit_count() == s.bit_count()]
    if not same:
        return None
    t = draw(st.sampled_from(same))
    k = s.bit_count()
    rule = draw(st.sampled_from([TS, TJ, TAR(k + 1)]))
    return Instance(g, set_of(s), set_of(t), v, rule)


@settings(max_examples=150, deadline=None)
@given(instances())
def test_nd_k_matches_oracle(inst):
    if inst is None:
        return
    ref = solve_exact(inst)
    out = solve_nd_k(inst)
    assert (out.reachable, out.min_moves) == (ref.reachable, ref.min_moves)
    if ref.reachable:
        assert validate_sequence(inst, ref.witness) is None


@settings(max_examples=150, deadline=None)
@given(instances())
def test_reverse_instance_same_distance(inst):
    if inst is None:
        return
    back = Instance(inst.g, inst.target, inst.start, inst.variant, inst.rule)
    assert solve_exact(inst).min_moves == solve_exact(back).min_moves


@settings(max_examples=100, deadline=None)
@given(instances(RMI_VARIANTS))
def test_tj_tar_round_trip(inst):
    if inst is None:
        return
    tj = Instance(inst.g, inst.start, inst.target, inst.variant, TJ)
    out = solve_exact(tj)
    if not out.reachable:
        return
    k = len(inst.start)
    up = tj_to_tar(out.witness, inst.g, inst.variant)
    assert validate_sequence(Instance(inst.g, inst.start, inst.target, inst.variant, TAR(k + 1)), up) is None
    down = tar_to_tj(up, k, inst.g, inst.variant)
    assert validate_sequence(tj, down) is None
    assert len(down) <= len(out.witness)
