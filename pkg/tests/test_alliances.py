from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alliance_reconf import (
    ALL_VARIANTS,
    Variant,
    boundary,
    build_graph,
    is_defensive,
    is_dominating,
    is_offensive,
    satisfies,
    y_set,
    z_set,
)
from alliance_reconf.graph import mask_of
from alliance_reconf.sweep import direct_check

from conftest import complete, path, star

EDGE = build_graph(2, [(1, 2)])


def test_boundary(p3):
    assert boundary(p3, {2}) == {1, 3}
    assert boundary(p3, set()) == frozenset()
    assert boundary(complete(3), {1}) == {2, 3}


def test_defensive_examples(p3):
    assert is_defensive(p3, set())
    assert not is_defensive(p3, {2})
    assert is_defensive(complete(3), {1, 2})


def test_offensive_examples(p3):
    assert is_offensive(p3, set())
    assert is_offensive(star(3), {1})
    assert not is_offensive(p3, {1})


def test_satisfies_examples(p3):
    assert satisfies(star(3), {1}, Variant("off", True))
    assert satisfies(p3, {1, 3}, Variant("off", False, True))
    assert not satisfies(p3, set(), Variant("def", True))


def test_powerful_is_both(p3):
    pa = Variant("pow")
    for r in range(4):
        for a in combinations((1, 2, 3), r):
            assert satisfies(p3, a, pa) == (is_defensive(p3, a) and is_offensive(p3, a))


def test_z_and_y(p4):
    assert z_set(p4, {1}) == {3}
    assert z_set(p4, set()) == frozenset()
    assert z_set(EDGE, set()) == {1, 2}
    assert y_set(p4, {1}) == {1, 2, 3, 4}
    assert y_set(p4, set()) == {1, 4}
    assert y_set(complete(3), set()) == frozenset()


def test_variant_labels_are_distinct():
    assert len({v.label for v in ALL_VARIANTS}) == 8


@st.composite
def graph_and_set(draw):
    n = draw(st.integers(1, 7))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    a = draw(st.frozensets(st.integers(1, n)))
    return build_graph(n, edges), a


@settings(max_examples=300, deadline=None)
@given(graph_and_set())
def test_predicates_match_per_vertex_reading(case):
    g, a = case
    for v in ALL_VARIANTS:
        assert satisfies(g, a, v) == direct_check(g, mask_of(a), v)
    assert boundary(g, a).isdisjoint(a)


@settings(max_examples=200, deadline=None)
@given(graph_and_set())
def test_type_exchange(case):
    # swapping a member for an outside twin keeps every property
    g, a = case
    for u in a:
        for w in g.vertices:
            if w not in a and g.neighbors(u) - {w} == g.neighbors(w) - {u}:
                b = (a - {u}) | {w}
                for v in ALL_VARIANTS:
                    assert satisfies(g, a, v) == satisfies(g, b, v)


@pytest.mark.parametrize("n", range(1, 6))
def test_global_means_dominating(n):
    g = path(n)
    for r in range(n + 1):
        for a in combinations(g.vertices, r):
            assert satisfies(g, a, Variant("def", True)) == (is_defensive(g, a) and is_dominating(g, a))
