import pytest

from alliance_reconf import (
    DA,
    TAR,
    TJ,
    TS,
    Instance,
    MalformedInput,
    MoveRule,
    build_graph,
    validate_sequence,
)
from alliance_reconf.model import (
    config_bound_to_moves,
    format_instance,
    format_sequence,
    is_legal_step,
    parse_instance,
    parse_sequence,
)

from conftest import cycle


def test_legal_steps(p3):
    assert is_legal_step(p3, {1}, {2}, TS)
    assert not is_legal_step(p3, {1}, {3}, TS)
    assert is_legal_step(p3, {1}, {3}, TJ)
    assert is_legal_step(p3, {1}, {1, 2}, TAR(2))
    assert not is_legal_step(p3, {1}, {1, 2}, TAR(1))


def test_slide_implies_jump():
    g = cycle(5)
    configs = [frozenset({a, b}) for a in g.vertices for b in g.vertices if a < b]
    for a in configs:
        for b in configs:
            if is_legal_step(g, a, b, TS):
                assert is_legal_step(g, a, b, TJ)


def test_validate_examples(p3):
    same = Instance(p3, {1}, {1}, DA, TJ)
    assert validate_sequence(same, [{1}]) is None
    assert validate_sequence(Instance(p3, {1}, {3}, DA, TJ), [{1}, {3}]) is None
    bad = validate_sequence(Instance(p3, {1}, {3}, DA, TS), [{1}, {2}])
    assert (bad.index, bad.reason) == (2, "variant-fail")
    assert str(bad) == "violation at config 2: variant-fail"


def test_validate_other_reasons(p3):
    inst = Instance(p3, {1}, {3}, DA, TS)
    assert validate_sequence(inst, [{3}]).reason == "endpoint-mismatch"
    assert validate_sequence(inst, [{1}]).reason == "endpoint-mismatch"
    jump = validate_sequence(inst, [{1}, {3}])
    assert (jump.index, jump.reason) == (2, "step-illegal")
    capped = Instance(p3, {1}, {3}, DA, TJ, 0)
    assert validate_sequence(capped, [{1}, {3}]).reason == "bound-exceeded"


def test_instance_rejects_bad_input(p3):
    with pytest.raises(MalformedInput):
        Instance(p3, {2}, {2}, DA, TS)
    with pytest.raises(MalformedInput):
        Instance(p3, {1}, {1, 3}, DA, TJ)
    with pytest.raises(MalformedInput):
        Instance(p3, {1, 3}, {1}, DA, TAR(1))
    with pytest.raises(MalformedInput):
        Instance(p3, {4}, {4}, DA, TJ)
    with pytest.raises(MalformedInput):
        MoveRule("TAR")
    with pytest.raises(MalformedInput):
        MoveRule("XX")


def test_config_bound_conversion():
    assert config_bound_to_moves(2) == 0
    assert config_bound_to_moves(6) == 4
    with pytest.raises(MalformedInput):
        config_bound_to_moves(1)


@pytest.mark.parametrize("rule", [TS, TJ, TAR(3)])
def test_instance_text_round_trip(rule):
    g = build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    inst = Instance(g, {1, 2}, {3, 4}, DA, rule, 3)
    assert parse_instance(format_instance(inst)) == inst


def test_sequence_text_round_trip():
    seq = (frozenset({1, 2}), frozenset(), frozenset({3}))
    assert tuple(parse_sequence(format_sequence(seq))) == seq


def test_parse_errors():
    for text in ("", "n x\n", "n 3\nedge 1 5\nvariant def\nrule TJ\nstart 1\ntarget 1\n"):
        with pytest.raises(MalformedInput):
            parse_instance(text)
