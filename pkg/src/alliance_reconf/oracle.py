"""Exact breadth-first solvers over the implicit reconfiguration graph.

States are vertex bitmasks.  Successors of a state are generated in
canonical order (lexicographic on sorted vertex tuples), so BFS parents, and
therefore witnesses, are deterministic.  The specialised solvers in other
modules reuse :func:`bfs` with a restricted ground set or a custom
successor function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Iterable

from .alliances import Variant, check_mask, satisfies_mask
from .errors import MalformedInput, ResourceLimit
from .graph import Graph, bits, check_config, mask_of, set_of
from .model import Config, Instance, MoveRule, Outcome, TJ

DEFAULT_BUDGET = 10**7

Successors = Callable[[int], list[int]]
LocalCheck = Callable[[int, int], bool]


def canon_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass
class SearchStats:
    expanded: int = 0
    discovered: int = 0
    max_successors: int = 0


@dataclass
class SearchResult:
    found: bool
    dist: dict[int, int]
    parent: dict[int, int | None]
    stats: SearchStats

    def path_to(self, mask: int) -> tuple[Config, ...]:
        path = []
        cur: int | None = mask
        while cur is not None:
            path.append(set_of(cur))
            cur = self.parent[cur]
        return tuple(reversed(path))


def bfs(
    start: int,
    successors: Successors,
    target: int | None = None,
    bound: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> SearchResult:
    """BFS from ``start``; stops when ``target`` is discovered (if given).

    ``bound`` limits the depth; nodes at depth ``bound`` are not expanded.
    Raises :class:`ResourceLimit` once more than ``budget`` states are known.
    """
    stats = SearchStats(discovered=1)
    dist = {start: 0}
    parent: dict[int, int | None] = {start: None}
    if start == target:
        return SearchResult(True, dist, parent, stats)
    queue = deque([start])
    while queue:
        a = queue.popleft()
        d = dist[a]
        if bound is not None and d >= bound:
            continue
        stats.expanded += 1
        succ = successors(a)
        if len(succ) > stats.max_successors:
            stats.max_successors = len(succ)
        for b in succ:
            if b in dist:
                continue
            dist[b] = d + 1
            parent[b] = a
            stats.discovered += 1
            if b == target:
                return SearchResult(True, dist, parent, stats)
            if stats.discovered > budget:
                raise ResourceLimit(f"state budget of {budget} exceeded")
            queue.append(b)
    return SearchResult(False, dist, parent, stats)


def variant_check(g: Graph, variant: Variant) -> LocalCheck:
    return lambda mask, affected: check_mask(g, mask, variant, affected)


def step_successors(
    g: Graph,
    rule: MoveRule,
    feasible: LocalCheck,
    ground: int | None = None,
    fixed: int = 0,
) -> Successors:
    """Successor function for ``rule`` over configurations inside ``ground``.

    ``feasible(mask, affected)`` is called with the closed neighbourhoods of
    the changed vertices; the parent is always feasible, so a local check is
    enough.  Tokens on ``fixed`` never move.
    """
    if ground is None:
        ground = g.all_mask
    adj = g.adj
    kind = rule.kind
    cap = rule.cap

    def succ(a: int) -> list[int]:
        out = []
        movable = a & ~fixed
        free = ground & ~a
        if kind == "TAR":
            size = a.bit_count()
            for u in bits(movable):
                b = a ^ (1 << u)
                if feasible(b, adj[u] | (1 << u)):
                    out.append(b)
            if size + 1 <= cap:
                for v in bits(free):
                    b = a | (1 << v)
                    if feasible(b, adj[v] | (1 << v)):
                        out.append(b)
        else:
            for u in bits(movable):
                base = a ^ (1 << u)
                near = adj[u] | (1 << u)
                targets = free if kind == "TJ" else adj[u] & free
                for v in bits(targets):
                    b = base | (1 << v)
                    if feasible(b, near | adj[v] | (1 << v)):
                        out.append(b)
        out.sort(key=canon_key)
        return out

    return succ


def outcome_from(result: SearchResult, target: int, solver: str) -> Outcome:
    if not result.found:
        return Outcome(False, None, None, solver, result.stats.discovered)
    path = result.path_to(target)
    return Outcome(True, len(path) - 1, path, solver, result.stats.discovered)


def solve_exact(
    inst: Instance,
    budget: int = DEFAULT_BUDGET,
    ground: Iterable[int] | None = None,
) -> Outcome:
    """Plain BFS; ``ground`` optionally restricts where tokens may sit."""
    gmask = None if ground is None else mask_of(ground) | mask_of(inst.start) | mask_of(inst.target)
    succ = step_successors(inst.g, inst.rule, variant_check(inst.g, inst.variant), gmask)
    s, t = mask_of(inst.start), mask_of(inst.target)
    result = bfs(s, succ, t, inst.move_bound, budget)
    return outcome_from(result, t, "oracle")


def distances_from(
    g: Graph,
    variant: Variant,
    rule: MoveRule,
    start: Iterable[int],
    bound: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> dict[Config, int]:
    """Distance from ``start`` to every reachable configuration."""
    succ = step_successors(g, rule, variant_check(g, variant))
    result = bfs(mask_of(check_config(g, start)), succ, None, bound, budget)
    return {set_of(m): d for m, d in result.dist.items()}


def enumerate_masks(
    g: Graph, variant: Variant, min_size: int, max_size: int, budget: int = DEFAULT_BUDGET
) -> list[int]:
    lo = max(min_size, 0)
    hi = min(max_size, g.n)
    total = sum(comb(g.n, s) for s in range(lo, hi + 1))
    if total > budget:
        raise ResourceLimit(f"enumeration of {total} subsets exceeds budget {budget}")
    out = []
    for size in range(lo, hi + 1):
        for combo in combinations(g.vertices, size):
            m = mask_of(combo)
            if satisfies_mask(g, m, variant):
                out.append(m)
    return out


def enumerate_configs(
    g: Graph, variant: Variant, min_size: int, max_size: int, budget: int = DEFAULT_BUDGET
) -> list[Config]:
    """All configurations with sizes in range satisfying ``variant``.

    Canonical order: by size, then lexicographic on sorted vertex tuples.
    """
    return [set_of(m) for m in enumerate_masks(g, variant, min_size, max_size, budget)]


def dominating_check(g: Graph) -> LocalCheck:
    adj = g.adj

    def check(mask: int, affected: int) -> bool:
        for v in bits(affected & ~mask):
            if not adj[v] & mask:
                return False
        return True

    return check


def solve_ds_reconfig_tj(
    g: Graph,
    d_s: Iterable[int],
    d_t: Iterable[int],
    move_bound: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Outcome:
    """Dominating-set reconfiguration under token jumping."""
    s = mask_of(check_config(g, d_s))
    t = mask_of(check_config(g, d_t))
    check = dominating_check(g)
    for name, m in (("start", s), ("target", t)):
        if not check(m, g.all_mask):
            raise MalformedInput(f"{name} is not a dominating set")
    if s.bit_count() != t.bit_count():
        raise MalformedInput("dominating sets differ in size")
    result = bfs(s, step_successors(g, TJ, check), t, move_bound, budget)
    return outcome_from(result, t, "oracle-ds")


def ds_distances_from(g: Graph, d_s: Iterable[int], budget: int = DEFAULT_BUDGET) -> dict[Config, int]:
    result = bfs(mask_of(d_s), step_successors(g, TJ, dominating_check(g)), None, None, budget)
    return {set_of(m): d for m, d in result.dist.items()}
