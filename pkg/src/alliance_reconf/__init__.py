"""Reconfiguration of graph alliances: predicates, solvers, and gadgets."""

from .alliances import (
    ALL_VARIANTS,
    DA,
    OA,
    PA,
    RMI_VARIANTS,
    Variant,
    boundary,
    is_defensive,
    is_dominating,
    is_offensive,
    satisfies,
    y_set,
    z_set,
)
from .dispatch import solve
from .easy import solve_gidp_oa, solve_idp_oa_ts
from .errors import InternalAssertion, MalformedInput, Misuse, ReconfError, ResourceLimit
from .fpt import (
    da_search_space,
    solve_da_tar_pruned,
    solve_da_tj_pruned,
    solve_gda_k,
    solve_goa_k,
    solve_pa_k,
    solve_ts_budgeted,
    ts_branch_limit,
)
from .graph import Graph, build_graph, nd_partition, perfect_elimination_order, two_coloring
from .ilp import check_ilp_feasible_tiny, encode_ilp, export_lp, read_lp
from .model import TAR, TJ, TS, Instance, MoveRule, Outcome, validate_sequence
from .monotonicity import check_rmi, idp_oa_tar_tj_bridge, tar_to_tj, tj_to_tar
from .nd import solve_nd_ell, solve_nd_k
from .oracle import solve_ds_reconfig_tj, solve_exact
from .reductions import ReductionSpec, pull_back, push_forward, reduce

__all__ = [
    "ALL_VARIANTS",
    "DA",
    "Graph",
    "Instance",
    "InternalAssertion",
    "MalformedInput",
    "Misuse",
    "MoveRule",
    "OA",
    "Outcome",
    "PA",
    "RMI_VARIANTS",
    "ReconfError",
    "ReductionSpec",
    "ResourceLimit",
    "TAR",
    "TJ",
    "TS",
    "Variant",
    "boundary",
    "build_graph",
    "check_ilp_feasible_tiny",
    "check_rmi",
    "da_search_space",
    "encode_ilp",
    "export_lp",
    "idp_oa_tar_tj_bridge",
    "is_defensive",
    "is_dominating",
    "is_offensive",
    "nd_partition",
    "perfect_elimination_order",
    "pull_back",
    "push_forward",
    "read_lp",
    "reduce",
    "satisfies",
    "solve",
    "solve_da_tar_pruned",
    "solve_da_tj_pruned",
    "solve_ds_reconfig_tj",
    "solve_exact",
    "solve_gda_k",
    "solve_gidp_oa",
    "solve_goa_k",
    "solve_idp_oa_ts",
    "solve_nd_ell",
    "solve_nd_k",
    "solve_pa_k",
    "solve_ts_budgeted",
    "tar_to_tj",
    "tj_to_tar",
    "ts_branch_limit",
    "two_coloring",
    "validate_sequence",
    "y_set",
    "z_set",
]
