"""Neighbourhood-diversity solvers.

Two vertices of the same type are twins: exchanging them is a graph
automorphism, so exchanging a token with an empty same-class vertex keeps
every alliance variant.  :func:`solve_nd_k` keeps at most 2k members per class
as token positions; :func:`solve_nd_ell` branches only on (source class,
destination class) pairs.
"""

from __future__ import annotations

from math import comb

from .errors import InternalAssertion
from .fpt import keep_with_extras, spare_count
from .graph import mask_of, nd_partition
from .model import Instance, Outcome
from .oracle import DEFAULT_BUDGET, bfs, canon_key, outcome_from, step_successors, variant_check


def nd_ground_mask(inst: Instance) -> int:
    part = nd_partition(inst.g)
    ends = mask_of(inst.start) | mask_of(inst.target)
    k = inst.k
    ground = 0
    for cls in part.classes:
        members = sorted(cls)
        in_ends = sum(1 for v in members if ends >> v & 1)
        ground |= keep_with_extras(members, ends, spare_count(k, in_ends, 2 * k))
    return ground


def solve_nd_k(inst: Instance, budget: int = DEFAULT_BUDGET) -> Outcome:
    """Exact BFS with tokens restricted to 2k representatives per ND class.

    The graph is not shrunk: dropping vertices would change degrees and hence
    the predicates; only token positions are restricted.
    """
    g = inst.g
    ground = nd_ground_mask(inst)
    s, t = mask_of(inst.start), mask_of(inst.target)
    succ = step_successors(g, inst.rule, variant_check(g, inst.variant), ground)
    out = outcome_from(bfs(s, succ, t, inst.move_bound, budget), t, "nd-k")
    size = ground.bit_count()
    cap = sum(comb(size, j) for j in range(inst.k + 1))
    if out.states > cap:
        raise InternalAssertion(f"{out.states} states exceed the {cap} subsets of the ground set")
    out.info.update(ground=size, spares=(ground & ~(s | t)).bit_count())
    return out


def solve_nd_ell(inst: Instance, ell: int | None, budget: int = DEFAULT_BUDGET) -> Outcome:
    """Depth-bounded search over class-level moves.

    A move is fixed by its source and destination class.  The leaving token
    is a non-target token when one exists, the arriving token lands on a free
    target vertex when one exists; otherwise the smallest vertex is used.
    """
    g = inst.g
    part = nd_partition(g)
    nd = part.size
    classes = [mask_of(c) for c in part.classes]
    joined = [[j in part.class_neighbors(i) for j in range(nd)] for i in range(nd)]
    feasible = variant_check(g, inst.variant)
    t = mask_of(inst.target)
    s = mask_of(inst.start)
    kind = inst.rule.kind
    cap = inst.rule.cap
    limit = 2 * nd if kind == "TAR" else nd * nd
    widest = 0

    def pick(mask: int, prefer: int) -> int:
        best = mask & prefer or mask
        return (best & -best).bit_length() - 1

    def succ(a: int) -> list[int]:
        nonlocal widest
        out = []
        branches = 0
        leave = [pick(a & c, ~t) if a & c else None for c in classes]
        arrive = [pick(~a & c, t) if ~a & c else None for c in classes]
        if kind == "TAR":
            for u in leave:
                if u is not None:
                    branches += 1
                    b = a ^ (1 << u)
                    if feasible(b, g.adj[u] | (1 << u)):
                        out.append(b)
            if a.bit_count() < cap:
                for v in arrive:
                    if v is not None:
                        branches += 1
                        b = a | (1 << v)
                        if feasible(b, g.adj[v] | (1 << v)):
                            out.append(b)
        else:
            for i, u in enumerate(leave):
                if u is None:
                    continue
                for j in range(nd):
                    if kind == "TS" and not joined[i][j]:
                        continue
                    if i == j:
                        free = ~a & classes[j] & ~(1 << u)
                        v = pick(free, t) if free else None
                    else:
                        v = arrive[j]
                    if v is None:
                        continue
                    branches += 1
                    b = a ^ (1 << u) | (1 << v)
                    if feasible(b, g.adj[u] | g.adj[v] | (1 << u) | (1 << v)):
                        out.append(b)
        if branches > limit:
            raise InternalAssertion(f"{branches} class moves exceed the bound {limit}")
        widest = max(widest, branches)
        out = sorted(set(out), key=canon_key)
        return out

    bound = ell if inst.move_bound is None else (inst.move_bound if ell is None else min(ell, inst.move_bound))
    out = outcome_from(bfs(s, succ, t, bound, budget), t, "nd-ell")
    out.info.update(nd=nd, max_branches=widest)
    return out
