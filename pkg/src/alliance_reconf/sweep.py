"""Small-graph property sweep behind ``selftest``.

Graphs are generated up to isomorphism by adding one vertex at a time and
keeping one canonical form per class.  Canonical forms minimise the edge
bitmask over vertex orders that sort by degree, which is exact and fast
enough for n <= 7.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .alliances import ALL_VARIANTS, Variant, check_mask, satisfies_mask, y_mask
from .dispatch import easy_solver, fpt_solver
from .errors import ReconfError
from .graph import Graph, bits, build_graph
from .model import TAR, TJ, TS, Instance, validate_sequence
from .monotonicity import check_rmi
from .nd import solve_nd_ell, solve_nd_k
from .oracle import enumerate_masks, solve_exact


def _canonical(n: int, edges: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(deg[v], []).append(v)
    order = sorted(groups)
    best = None
    for choice in product(*(permutations(groups[d]) for d in order)):
        pos = {}
        for block in choice:
            for v in block:
                pos[v] = len(pos)
        key = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best or ()


def small_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on n vertices (1-based labels)."""
    if n <= 0:
        return []
    layer: set[tuple[tuple[int, int], ...]] = {()}
    for size in range(2, n + 1):
        nxt = set()
        new = size - 1
        for edges in layer:
            for r in range(size):
                for nbrs in combinations(range(new), r):
                    grown = list(edges) + [(u, new) for u in nbrs]
                    nxt.add(_canonical(size, grown))
        layer = nxt
    return [build_graph(n, [(u + 1, v + 1) for u, v in e]) for e in sorted(layer)]


def direct_check(g: Graph, a: int, variant: Variant) -> bool:
    """The alliance inequalities evaluated vertex by vertex on plain sets."""
    members = set(bits(a))
    for v in g.vertices:
        nb = g.neighbors(v)
        inside = len(nb & members)
        outside = len(nb) - inside
        if v in members:
            if variant.defensive and inside + 1 < outside:
                return False
            if variant.independent and inside:
                return False
        elif inside:
            if variant.offensive and inside < outside + 1:
                return False
        elif variant.global_:
            return False
    return True


@dataclass
class SweepReport:
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def expect(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def merge(self, other: "SweepReport") -> None:
        self.checks += other.checks
        self.failures.extend(other.failures)


def _instances(g: Graph, variant: Variant, max_k: int, bound: int):
    masks = enumerate_masks(g, variant, 0, max_k)
    by_size: dict[int, list[int]] = {}
    for m in masks:
        by_size.setdefault(m.bit_count(), []).append(m)
    for size, group in by_size.items():
        for s, t in product(group, repeat=2):
            for rule in (TS, TJ, TAR(size), TAR(size + 1)):
                yield Instance(g, frozenset(bits(s)), frozenset(bits(t)), variant, rule, bound)


def check_graph(g: Graph, max_k: int = 2, bound: int = 3) -> SweepReport:
    rep = SweepReport()
    name = f"n={g.n} edges={list(g.edges)}"
    for a in range(1 << g.n):
        m = a << 1
        for variant in ALL_VARIANTS:
            rep.expect(
                satisfies_mask(g, m, variant) == direct_check(g, m, variant),
                f"predicate {variant.label} on {name} A={sorted(bits(m))}",
            )
    for variant in ALL_VARIANTS:
        if variant.rmi:
            rep.expect(check_rmi(g, variant) is None, f"rmi {variant.label} on {name}")
        for inst in _instances(g, variant, max_k, bound):
            tag = f"{variant.label}-{inst.rule.kind} {name} {sorted(inst.start)}->{sorted(inst.target)}"
            ref = solve_exact(inst)
            if ref.reachable:
                rep.expect(validate_sequence(inst, ref.witness) is None, f"oracle witness {tag}")
            solvers = [("nd", lambda i: solve_nd_k(i))]
            if inst.move_bound is not None:
                solvers.append(("nd-ell", lambda i: solve_nd_ell(i, i.move_bound)))
            for fam, pick in (("easy", easy_solver), ("fpt", fpt_solver)):
                found = pick(inst)
                if found is not None:
                    solvers.append((fam, lambda i, f=found: f(i, 10**7)))
            for fam, run in solvers:
                try:
                    out = run(inst)
                except ReconfError as exc:
                    rep.expect(False, f"{fam} raised {exc!r} on {tag}")
                    continue
                rep.expect(
                    (out.reachable, out.min_moves) == (ref.reachable, ref.min_moves),
                    f"{fam} disagrees with oracle on {tag}",
                )
                if out.reachable:
                    rep.expect(validate_sequence(inst, out.witness) is None, f"{fam} witness {tag}")
    off = Variant("off")
    for m in enumerate_masks(g, off, 0, g.n):
        steps = [m ^ (1 << w) for w in g.vertices]
        steps += [m ^ (1 << u) | (1 << v) for u in bits(m) for v in bits(g.all_mask & ~m)]
        for b in steps:
            if check_mask(g, b, off, g.all_mask):
                rep.expect(y_mask(g, m) == y_mask(g, b), f"Y-invariance on {name}")
    return rep


def run_sweep(max_n: int = 4, workers: int = 1, max_k: int = 2, bound: int = 3) -> SweepReport:
    graphs = [g for n in range(1, max_n + 1) for g in small_graphs(n)]
    total = SweepReport()
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for rep in pool.map(lambda g: check_graph(g, max_k, bound), graphs):
            total.merge(rep)
    return total


def rmi_counterexample_exists(max_n: int, variant: Variant) -> bool:
    return any(check_rmi(g, variant) is not None for n in range(1, max_n + 1) for g in small_graphs(n))
