"""Second feasibility route for the ILP tests, through scipy's MILP solver."""

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp


def milp_feasible(m):
    if not m.variables:
        return all(_const_ok(c) for c in m.constraints)
    index = {name: i for i, (name, _, _) in enumerate(m.variables)}
    rows, lo, hi = [], [], []
    for c in m.constraints:
        if not c.terms:
            if not _const_ok(c):
                return False
            continue
        row = np.zeros(len(index))
        for name, coef in c.terms:
            row[index[name]] += coef
        rows.append(row)
        lo.append(c.rhs if c.sense in (">=", "=") else -np.inf)
        hi.append(c.rhs if c.sense in ("<=", "=") else np.inf)
    res = milp(
        np.zeros(len(index)),
        integrality=np.ones(len(index)),
        bounds=Bounds([v[1] for v in m.variables], [v[2] for v in m.variables]),
        constraints=[LinearConstraint(np.array(rows), lo, hi)] if rows else [],
    )
    return res.status == 0


def _const_ok(c):
    return {"<=": 0 <= c.rhs, ">=": 0 >= c.rhs, "=": c.rhs == 0}[c.sense]
