"""Pick a solver for an instance.

``auto`` tries the families in order easy, fpt, nd, oracle and takes the
first one that has an algorithm for the variant and rule.  Asking for a
family by name refuses (misuse) instead of falling back.
"""

from __future__ import annotations

from typing import Callable

from .easy import solve_gidp_oa, solve_idp_oa_ts
from .errors import Misuse
from .fpt import (
    solve_da_tar_pruned,
    solve_da_tj_pruned,
    solve_gda_k,
    solve_goa_k,
    solve_pa_k,
    solve_ts_budgeted,
)
from .graph import nd_partition
from .model import Instance, Outcome
from .nd import solve_nd_k
from .oracle import DEFAULT_BUDGET, solve_exact

FAMILIES = ("easy", "fpt", "nd", "oracle")
Solver = Callable[[Instance, int], Outcome]


def easy_solver(inst: Instance) -> Solver | None:
    v, kind = inst.variant, inst.rule.kind
    if v.base != "off" or not v.independent:
        return None
    if v.global_:
        return lambda i, budget: solve_gidp_oa(i)
    if kind == "TS":
        return lambda i, budget: solve_idp_oa_ts(i)
    return None


def fpt_solver(inst: Instance) -> Solver | None:
    v, kind = inst.variant, inst.rule.kind
    if v.base == "pow":
        return solve_pa_k
    if v.base == "off" and v.global_ and not v.independent:
        return solve_goa_k
    if v.base == "def" and v.global_:
        k = len(inst.start)
        if inst.g.n <= k + k * k:
            return solve_gda_k
        return None
    if kind == "TS":
        return lambda i, budget: solve_ts_budgeted(i, None, budget)
    if v.base == "def" and kind == "TAR":
        return lambda i, budget: solve_da_tar_pruned(i, None, budget)
    if v.base == "def" and kind == "TJ":
        return lambda i, budget: solve_da_tj_pruned(i, None, budget)
    return None


def nd_is_small(inst: Instance) -> bool:
    """Worth reducing: some class holds more than 2k vertices."""
    limit = 2 * inst.k
    return any(len(c) > limit for c in nd_partition(inst.g).classes)


def nd_solver(inst: Instance) -> Solver | None:
    return solve_nd_k


def pick(inst: Instance, family: str = "auto") -> tuple[str, Solver]:
    table = {
        "easy": easy_solver,
        "fpt": fpt_solver,
        "nd": nd_solver,
        "oracle": lambda i: solve_exact,
    }
    if family == "auto":
        for name in ("easy", "fpt"):
            found = table[name](inst)
            if found is not None:
                return name, found
        if nd_is_small(inst):
            return "nd", solve_nd_k
        return "oracle", solve_exact
    if family not in table:
        raise Misuse(f"unknown solver family {family!r}")
    found = table[family](inst)
    if found is None:
        raise Misuse(
            f"no {family} algorithm for {inst.variant.label} under {inst.rule.kind}"
        )
    return family, found


def solve(inst: Instance, family: str = "auto", budget: int = DEFAULT_BUDGET) -> Outcome:
    _, solver = pick(inst, family)
    return solver(inst, budget)
