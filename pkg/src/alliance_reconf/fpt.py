"""Parameterised solvers: bounded TS branching, DA distance pruning, and the
k-only ground-set reductions for powerful, global offensive, and global
defensive alliances.

Every solver returns the same verdict and minimum move count as
:func:`oracle.solve_exact` under the same move bound; the restrictions only
shrink where tokens may go, never the graph on which predicates are read.
"""

from __future__ import annotations

from .alliances import Variant, y_mask
from .errors import InternalAssertion, Misuse
from .graph import Graph, bits, mask_of, same_type, set_of, within_distance_mask
from .model import Instance, MoveRule, Outcome
from .monotonicity import tar_to_tj
from .oracle import DEFAULT_BUDGET, bfs, canon_key, outcome_from, step_successors, variant_check

DA = Variant("def")


def _bound(inst: Instance, ell: int | None) -> int | None:
    if ell is None:
        return inst.move_bound
    if inst.move_bound is None:
        return ell
    return min(ell, inst.move_bound)


# -- TS branching ------------------------------------------------------------

def ts_branch_limit(variant: Variant, k: int) -> int:
    """Largest number of valid slides out of a k-token configuration.

    A moving token u ends up on the boundary of the new set, so both the
    defensive and the offensive argument force d_{V\\A}(u) <= d_A(u) + 1 <= k:
    at most k tokens with at most k targets each.
    """
    return k * k


def solve_ts_budgeted(inst: Instance, ell: int | None, budget: int = DEFAULT_BUDGET) -> Outcome:
    """Depth-bounded TS search that only branches on tokens able to move.

    A token u may slide only if 2 d_A(u) + 1 >= d(u); for DAs this is the
    membership condition, for OAs it is the boundary condition u meets after
    leaving.  The per-expansion successor count is asserted against
    :func:`ts_branch_limit`; the maximum seen is reported in ``info``.
    """
    if inst.rule.kind != "TS":
        raise Misuse("solve_ts_budgeted handles the TS rule only")
    g = inst.g
    k = len(inst.start)
    limit = ts_branch_limit(inst.variant, k)
    feasible = variant_check(g, inst.variant)
    adj, deg = g.adj, g.deg
    counts: list[int] = []

    def succ(a: int) -> list[int]:
        out = []
        for u in bits(a):
            inside = (adj[u] & a).bit_count()
            if 2 * inside + 1 < deg[u]:
                continue
            base = a ^ (1 << u)
            near = adj[u] | (1 << u)
            for v in bits(adj[u] & ~a):
                b = base | (1 << v)
                if feasible(b, near | adj[v] | (1 << v)):
                    out.append(b)
        if len(out) > limit:
            raise InternalAssertion(f"{len(out)} slide successors exceed the bound {limit} for k={k}")
        counts.append(len(out))
        out.sort(key=canon_key)
        return out

    s, t = mask_of(inst.start), mask_of(inst.target)
    result = bfs(s, succ, t, _bound(inst, ell), budget)
    out = outcome_from(result, t, "fpt-ts")
    out.info.update(max_successors=max(counts, default=0), expansions=len(counts), k=k)
    return out


# -- DA distance pruning -----------------------------------------------------

def da_search_space_mask(g: Graph, a_s: int, a_t: int, k: int, ell: int | None) -> int:
    low = mask_of(v for v in g.vertices if g.deg[v] <= 2 * k)
    ends = a_s | a_t
    return within_distance_mask(g, ends & low, ell, allowed=low) | ends


def da_search_space(g: Graph, a_s, a_t, k: int, ell: int | None) -> frozenset[int]:
    """Vertices of G^{<=2k} within distance ``ell`` (inside G^{<=2k}) of the endpoints.

    ``ell=None`` drops the distance restriction.  Endpoints are always kept.
    """
    return set_of(da_search_space_mask(g, mask_of(a_s), mask_of(a_t), k, ell))


def _require_da(inst: Instance, kind: str) -> None:
    if inst.variant != DA:
        raise Misuse("pruned DA solvers need the plain defensive variant")
    if inst.rule.kind != kind:
        raise Misuse(f"this solver handles the {kind} rule only")


def solve_da_tar_pruned(inst: Instance, ell: int | None, budget: int = DEFAULT_BUDGET) -> Outcome:
    _require_da(inst, "TAR")
    bound = _bound(inst, ell)
    s, t = mask_of(inst.start), mask_of(inst.target)
    ground = da_search_space_mask(inst.g, s, t, inst.rule.cap, bound)
    succ = step_successors(inst.g, inst.rule, variant_check(inst.g, DA), ground)
    out = outcome_from(bfs(s, succ, t, bound, budget), t, "fpt-da-tar")
    out.info["ground"] = ground.bit_count()
    return out


def solve_da_tj_pruned(inst: Instance, ell: int | None, budget: int = DEFAULT_BUDGET) -> Outcome:
    """TJ via TAR with cap k+1 and twice the bound, then normalised back."""
    _require_da(inst, "TJ")
    bound = _bound(inst, ell)
    k = len(inst.start)
    tar_bound = None if bound is None else 2 * bound
    s, t = mask_of(inst.start), mask_of(inst.target)
    ground = da_search_space_mask(inst.g, s, t, k + 1, tar_bound)
    succ = step_successors(inst.g, MoveRule("TAR", k + 1), variant_check(inst.g, DA), ground)
    result = bfs(s, succ, t, tar_bound, budget)
    if not result.found:
        return Outcome(False, None, None, "fpt-da-tj", result.stats.discovered)
    tar_path = result.path_to(t)
    witness = tar_to_tj(tar_path, k, inst.g, DA)
    moves = len(witness) - 1
    if 2 * moves != len(tar_path) - 1:
        raise InternalAssertion("TAR distance is not twice the TJ distance")
    return Outcome(True, moves, witness, "fpt-da-tj", result.stats.discovered, {"ground": ground.bit_count()})


# -- k-only ground-set reductions --------------------------------------------

def spare_count(k: int, in_ends: int, total: int) -> int:
    """Spare representatives beyond endpoint members for a class of twins.

    With R the kept members, a token visiting a dropped member can be
    relabelled to a member of R that is unused while it stays there: at most
    k - 1 other visits overlap it and at most k endpoint colours are pinned,
    so |R| >= 2k, or k spares next to the endpoint members, always suffices.
    Capping the total at ``total`` (>= 2k) keeps both guarantees.
    """
    return min(k, max(0, total - in_ends))


def keep_with_extras(members: list[int], ends: int, extras: int) -> int:
    """Mask of endpoint members plus the first ``extras`` other members."""
    keep = 0
    left = extras
    for v in members:
        if ends >> v & 1:
            keep |= 1 << v
        elif left > 0:
            keep |= 1 << v
            left -= 1
    return keep


def pa_ground_mask(g: Graph, a_s: int, a_t: int, k: int) -> int:
    """Y(A_s) with spare isolates, isolated edges, and pendant leaves trimmed.

    Kept: every vertex of a component touching the endpoints, up to k further
    isolates and k further isolated edges (3k vertices), and per attachment
    vertex at most 2k+1 leaves (see :func:`spare_count`).
    """
    ends = a_s | a_t
    ground = y_mask(g, a_s)
    deg, adj = g.deg, g.adj
    isolates = [v for v in g.vertices if deg[v] == 0]
    pairs = [
        v for v in g.vertices
        if deg[v] == 1 and deg[(w := next(bits(adj[v])))] == 1 and v < w
    ]
    keep_iso = keep_with_extras(isolates, ends, k)
    drop = mask_of(isolates) & ~keep_iso
    left = k
    for v in pairs:
        comp = (1 << v) | adj[v]
        if comp & ends:
            continue
        if left > 0:
            left -= 1
        else:
            drop |= comp
    for z in g.vertices:
        if deg[z] <= 1:
            continue
        leaves = [v for v in bits(adj[z]) if deg[v] == 1]
        if not leaves:
            continue
        in_ends = sum(1 for v in leaves if ends >> v & 1)
        keep = keep_with_extras(leaves, ends, spare_count(k, in_ends, 2 * k + 1))
        drop |= mask_of(leaves) & ~keep
    return ground & ~drop


def solve_pa_k(inst: Instance, budget: int = DEFAULT_BUDGET) -> Outcome:
    """Powerful alliances (global optional), any rule, no move bound needed.

    Every PA along a TJ/TAR sequence is an OA, so Y(A) never changes and all
    configurations stay inside Y(A_s).
    """
    if inst.variant.base != "pow":
        raise Misuse("solve_pa_k needs the powerful base")
    g = inst.g
    s, t = mask_of(inst.start), mask_of(inst.target)
    if y_mask(g, s) != y_mask(g, t):
        return Outcome(False, None, None, "fpt-pa", 0, {"early_exit": "Y differs"})
    ground = pa_ground_mask(g, s, t, inst.k)
    succ = step_successors(g, inst.rule, variant_check(g, inst.variant), ground)
    out = outcome_from(bfs(s, succ, t, inst.move_bound, budget), t, "fpt-pa")
    out.info["ground"] = ground.bit_count()
    return out


def goa_structure(g: Graph, k: int) -> tuple[int, int, int]:
    """Forced set D (degree > 2k), the set B, and V' = V minus D and B."""
    d = mask_of(v for v in g.vertices if g.deg[v] > 2 * k)
    b = 0
    for v in bits(g.all_mask & ~d):
        in_d = (g.adj[v] & d).bit_count()
        if in_d > g.deg[v] - in_d:
            b |= 1 << v
    return d, b, g.all_mask & ~d & ~b


def goa_ground_mask(g: Graph, a_s: int, a_t: int, k: int, sliding: bool) -> tuple[int, int]:
    """Ground set and forced set for global OAs with at most k tokens.

    Vertices of B are grouped by N(v) ∩ V' (refined by neighbourhood type when
    tokens slide, so that adjacency is preserved); each group keeps its
    endpoint members and at most 2k members in total.  Swapping a token inside a group keeps
    the global OA property, and at most k tokens are ever in one group.
    """
    d, b, rest = goa_structure(g, k)
    ends = a_s | a_t
    groups: dict[int, list[list[int]]] = {}
    for v in bits(b):
        buckets = groups.setdefault(g.adj[v] & rest, [])
        for bucket in buckets:
            if not sliding or same_type(g, v, bucket[0]):
                bucket.append(v)
                break
        else:
            buckets.append([v])
    keep = 0
    for buckets in groups.values():
        for bucket in buckets:
            in_ends = sum(1 for v in bucket if ends >> v & 1)
            keep |= keep_with_extras(bucket, ends, spare_count(k, in_ends, 2 * k))
    return d | rest | keep, d


def solve_goa_k(inst: Instance, budget: int = DEFAULT_BUDGET) -> Outcome:
    v = inst.variant
    if not (v.base == "off" and v.global_ and not v.independent):
        raise Misuse("solve_goa_k needs the global offensive variant")
    g = inst.g
    s, t = mask_of(inst.start), mask_of(inst.target)
    ground, forced = goa_ground_mask(g, s, t, inst.k, inst.rule.kind == "TS")
    if forced & ~s or forced & ~t:
        raise InternalAssertion("a vertex of degree above 2k is missing from an endpoint")
    succ = step_successors(g, inst.rule, variant_check(g, v), ground, fixed=forced)
    out = outcome_from(bfs(s, succ, t, inst.move_bound, budget), t, "fpt-goa")
    out.info.update(ground=ground.bit_count(), forced=forced.bit_count())
    return out


def solve_gda_k(inst: Instance, budget: int = DEFAULT_BUDGET) -> Outcome:
    v = inst.variant
    if not (v.base == "def" and v.global_):
        raise Misuse("solve_gda_k needs the global defensive variant")
    k = len(inst.start)
    if inst.g.n > k + k * k:
        raise InternalAssertion(f"{inst.g.n} vertices exceed k + k^2 = {k + k * k}")
    g = inst.g
    s, t = mask_of(inst.start), mask_of(inst.target)
    succ = step_successors(g, inst.rule, variant_check(g, v))
    return outcome_from(bfs(s, succ, t, inst.move_bound, budget), t, "fpt-gda")
