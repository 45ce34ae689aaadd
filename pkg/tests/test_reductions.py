import pytest

from alliance_reconf import (
    MalformedInput,
    Misuse,
    ReductionSpec,
    build_graph,
    pull_back,
    push_forward,
    reduce,
    solve_exact,
    two_coloring,
    validate_sequence,
)
from alliance_reconf.reductions import TARGETS

from conftest import complete, path
from reduction_sweep import claim_failures, equivalence

K3 = complete(3)


def test_da_ts_size():
    red = reduce(ReductionSpec("DA-TS"), K3, {1}, {2}, None)
    assert red.instance.g.n == 3 * 3 + 6 * 6
    assert red.instance.rule.kind == "TS"


def test_da_tj_bipartition(p4):
    red = reduce(ReductionSpec("DA-TJ"), p4, {1, 3}, {1, 4}, None)
    sides = two_coloring(red.instance.g)
    layers = []
    for side in sides:
        layers.append({red.name(v)[:2] if red.name(v)[0] == "V" else red.name(v)[:1] for v in side})
    assert {frozenset(x) for x in layers} == {
        frozenset({("V", 1), ("V", 3), ("V", 4), ("V", 6)}),
        frozenset({("V", 2), ("V", 5), ("a",)}),
    }


def test_pull_back_one_jump(p4):
    red = reduce(ReductionSpec("DA-TJ"), p4, {1, 3}, {1, 4}, None)
    out = solve_exact(red.instance)
    assert out.min_moves == 1
    assert pull_back(red, out.witness) == (frozenset({1, 3}), frozenset({1, 4}))


def test_pull_back_zero_moves(p4):
    red = reduce(ReductionSpec("DA-TJ"), p4, {1, 3}, {1, 3}, None)
    assert pull_back(red, [red.instance.start]) == (frozenset({1, 3}),)


@pytest.mark.parametrize("target", [t for t in TARGETS if not t.startswith("G-OA")])
def test_push_then_pull(target):
    g = build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    seq = [frozenset({1, 3}), frozenset({1, 2}), frozenset({2, 4})]
    red = reduce(ReductionSpec(target), g, seq[0], seq[-1], None)
    forward = push_forward(red, seq)
    if red.instance.rule.kind == "TJ":
        assert validate_sequence(red.instance, forward) is None
        assert pull_back(red, forward) == tuple(seq)


def test_pull_back_rejects_garbage(p4):
    red = reduce(ReductionSpec("DA-TJ"), p4, {1, 3}, {1, 4}, None)
    with pytest.raises(Misuse):
        pull_back(red, [red.instance.target])


def test_seed_checks(p3):
    with pytest.raises(MalformedInput):
        reduce(ReductionSpec("DA-TJ"), p3, {1}, {2}, None)
    lonely = build_graph(3, [(1, 2)])
    with pytest.raises(MalformedInput):
        reduce(ReductionSpec("DA-TJ"), lonely, {1, 3}, {2, 3}, None)
    with pytest.raises(MalformedInput):
        reduce(ReductionSpec("G-PA-TJ"), path(3), {1, 2}, {2, 3}, None)
    with pytest.raises(MalformedInput):
        ReductionSpec("XX")


@pytest.mark.parametrize("target", TARGETS)
def test_claims_small(target):
    bad_class, bad_claim = claim_failures(target, 3)
    assert not bad_class and not bad_claim


@pytest.mark.parametrize("target", [t for t in TARGETS if not t.startswith("G-OA")])
def test_equivalence_small(target):
    checks, bad = equivalence(target, 3)
    assert checks > 0 and not bad


@pytest.mark.parametrize("rule", ["TS", "TJ"])
def test_goa_chordal_small(rule):
    checks, bad = equivalence("G-OA-chordal", 3, rule, restrict=True, ks=(1,))
    assert checks > 0 and not bad


def test_goa_bip_restriction_matches_plain():
    plain = equivalence("G-OA-TJ-bip", 3, restrict=False, ks=(1,))
    cut = equivalence("G-OA-TJ-bip", 3, restrict=True, ks=(1,))
    assert plain[0] == cut[0] > 0 and not plain[1] and not cut[1]
