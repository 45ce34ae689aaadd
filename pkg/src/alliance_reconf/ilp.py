"""Integer program for bounded TJ reconfiguration on graphs of small nd.

For classes C_1..C_nd and configurations A_1..A_L (L = number of
configurations, so L - 1 moves) the variables, for p in 1..L-1, are

* ``x_i_p``   tokens in C_i at time p
* ``y_i_j_p`` 1 iff the move after time p jumps from C_i to C_j
* ``w_i_p``   1 iff x_i_p > 0                           (defensive block)
* ``wp_i_p``  1 iff some token sits in a neighbour class (offensive block)
* ``wpp_i_p`` 1 iff C_i has a token-free vertex        (offensive block)

``literal`` mode writes the textbook form of each block.  ``validated``
mode replaces the blocks that disagree with the brute-force oracle by
corrected linearisations and lists each substitution in ``metadata``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import MalformedInput, Misuse, ResourceLimit
from .graph import nd_partition
from .model import Instance

MODES = ("literal", "validated")

SUBSTITUTIONS = {
    "def": "defensive row -> (d_i + 2c_i - 1) w <= 2 sum_{N_i} x: a member needs 2 d_A(v) + 1 >= d(v); the textbook row drops the +1",
    "off": "offensive row -> (w' + w'' - 1)(d_i + 1) <= 2 sum_{N_i} x: for a non-member v, d_A(v) = sum_{N_i} x already counts clique mates, so the extra 2c_i is wrong",
    "global": "global -> w'' <= sum_{N_i} x: only token-free vertices need a neighbour in A; the textbook 1 <= sum_{N_i} x also constrains fully occupied classes",
    "independent": "independence row -> sum_{N_i} x + (|V| - c_i) w <= |V|: an occupied class forbids tokens in neighbour classes (and a second token in a clique class); the textbook row has the inequality reversed",
}


@dataclass(frozen=True)
class Constraint:
    name: str
    terms: tuple[tuple[str, int], ...]
    sense: str
    rhs: int


@dataclass
class IlpModel:
    variables: list[tuple[str, int, int]] = field(default_factory=list)
    constraints: list[Constraint] = field(default_factory=list)
    mode: str = "literal"
    metadata: dict = field(default_factory=dict)

    def var(self, name: str, lo: int, hi: int) -> str:
        self.variables.append((name, lo, hi))
        return name

    def add(self, name: str, terms: dict[str, int] | list[tuple[str, int]], sense: str, rhs: int) -> None:
        if sense not in ("<=", ">=", "="):
            raise MalformedInput(f"bad sense {sense!r}")
        merged: dict[str, int] = {}
        for v, c in (terms.items() if isinstance(terms, dict) else terms):
            merged[v] = merged.get(v, 0) + c
        clean = tuple((v, c) for v, c in merged.items() if c != 0)
        self.constraints.append(Constraint(name, clean, sense, rhs))


def _sum(names, coef: int = 1) -> list[tuple[str, int]]:
    return [(n, coef) for n in names]


def encode_ilp(
    inst: Instance, ell: int, mode: str = "validated", keep_literal: frozenset[str] = frozenset()
) -> IlpModel:
    """Model whose feasibility means: target reachable within ell - 1 jumps.

    ``keep_literal`` names blocks (keys of ``SUBSTITUTIONS``) that stay in
    textbook form even in validated mode; used to show each fix is needed.
    """
    if inst.rule.kind != "TJ":
        raise Misuse("the ILP models token jumping only")
    if mode not in MODES:
        raise Misuse(f"unknown mode {mode!r}")
    if ell < 1:
        raise Misuse("ell counts configurations and must be at least 1")
    g = inst.g
    var = inst.variant
    part = nd_partition(g)
    nd = part.size
    cls = list(part.classes)
    n = g.n
    deg = [g.deg[min(c)] for c in cls]
    clique = [1 if f else 0 for f in part.clique_flags]
    nbr = [part.class_neighbors(i) for i in range(nd)]
    start = [len(c & inst.start) for c in cls]
    end = [len(c & inst.target) for c in cls]
    leave = [len((c & inst.start) - inst.target) for c in cls]
    steps = range(1, ell)
    validated = mode == "validated"

    def fixed(block: str) -> bool:
        return validated and block not in keep_literal

    need_w = var.defensive or (var.independent and fixed("independent"))
    need_wp = var.offensive
    need_wpp = var.offensive or (var.global_ and fixed("global"))

    m = IlpModel(mode=mode)
    m.metadata = {"nd": nd, "ell": ell, "variant": var.label, "substitutions": []}
    if validated:
        for key in ("def", "off", "global", "independent"):
            active = {"def": var.defensive, "off": var.offensive, "global": var.global_, "independent": var.independent}[key]
            if active and key not in keep_literal:
                m.metadata["substitutions"].append(SUBSTITUTIONS[key])

    def X(i, p):
        return f"x_{i + 1}_{p}"

    def Y(i, j, p):
        return f"y_{i + 1}_{j + 1}_{p}"

    for p in steps:
        for i in range(nd):
            m.var(X(i, p), 0, len(cls[i]))
        for i in range(nd):
            if need_w:
                m.var(f"w_{i + 1}_{p}", 0, 1)
            if need_wp:
                m.var(f"wp_{i + 1}_{p}", 0, 1)
            if need_wpp:
                m.var(f"wpp_{i + 1}_{p}", 0, 1)
        for i, j in product(range(nd), repeat=2):
            m.var(Y(i, j, p), 0, 1)

    if ell == 1:
        for i in range(nd):
            m.add(f"start_end_{i + 1}", [], "=", end[i] - start[i])
            m.add(f"sort_{i + 1}", [], ">=", leave[i])
        return m

    last = ell - 1
    for p in steps:
        m.add(f"one_step_{p}", _sum(Y(i, j, p) for i in range(nd) for j in range(nd)), "<=", 1)
    for i in range(nd):
        m.add(f"start_{i + 1}", [(X(i, 1), 1)], "=", start[i])
    for p in range(1, ell - 1):
        for i in range(nd):
            terms = [(X(i, p + 1), 1), (X(i, p), -1)]
            terms += _sum((Y(i, j, p) for j in range(nd)), 1)
            terms += _sum((Y(j, i, p) for j in range(nd)), -1)
            m.add(f"between_{i + 1}_{p}", terms, "=", 0)
    for i in range(nd):
        terms = [(X(i, last), 1)]
        terms += _sum((Y(i, j, last) for j in range(nd)), -1)
        terms += _sum((Y(j, i, last) for j in range(nd)), 1)
        m.add(f"end_{i + 1}", terms, "=", end[i])
    for i in range(nd):
        m.add(f"sort_{i + 1}", _sum(Y(i, j, p) for p in steps for j in range(nd)), ">=", leave[i])

    for p in steps:
        for i in range(nd):
            tag = f"{i + 1}_{p}"
            around = _sum((X(j, p) for j in nbr[i]), 1)
            w, wp, wpp = f"w_{tag}", f"wp_{tag}", f"wpp_{tag}"
            if need_w:
                m.add(f"w_upper_{tag}", [(X(i, p), 1), (w, -n)], "<=", 0)
                m.add(f"w_lower_{tag}", [(w, 1), (X(i, p), -1)], "<=", 0)
            if var.defensive:
                coef = deg[i] + 2 * clique[i] - (1 if fixed("def") else 0)
                m.add(f"def_{tag}", [(w, coef)] + _sum((X(j, p) for j in nbr[i]), -2), "<=", 0)
            if need_wp:
                m.add(f"wp_upper_{tag}", around + [(wp, -n)], "<=", 0)
                m.add(f"wp_lower_{tag}", [(wp, 1)] + _sum((X(j, p) for j in nbr[i]), -1), "<=", 0)
            if need_wpp:
                m.add(f"wpp_upper_{tag}", [(X(i, p), -1), (wpp, -n)], "<=", -len(cls[i]))
                m.add(f"wpp_lower_{tag}", [(wpp, 1), (X(i, p), 1)], "<=", len(cls[i]))
            if var.offensive:
                big = deg[i] + 1 if fixed("off") else deg[i] + 2 * clique[i] + 1
                m.add(f"off_{tag}", [(wp, big), (wpp, big)] + _sum((X(j, p) for j in nbr[i]), -2), "<=", big)
            if var.global_:
                if fixed("global"):
                    m.add(f"global_{tag}", [(wpp, 1)] + _sum((X(j, p) for j in nbr[i]), -1), "<=", 0)
                else:
                    m.add(f"global_{tag}", around, ">=", 1)
            if var.independent:
                if fixed("independent"):
                    m.add(f"indep_{tag}", around + [(w, n - clique[i])], "<=", n)
                else:
                    m.add(f"indep_{tag}", _sum((X(j, p) for j in nbr[i]), n) + [(X(i, p), -1)], "<=", n * clique[i] * len(nbr[i]))
    return m


def variable_bound(nd: int, ell: int) -> int:
    return max(ell - 1, 0) * nd * (nd + 4)


# -- feasibility by exhaustive search ----------------------------------------

def check_ilp_feasible_tiny(m: IlpModel, budget: int = 10**7) -> bool:
    """Exhaustive depth-first search over the variables in model order.

    A branch is cut as soon as some constraint cannot be met whatever values
    the unassigned variables take within their bounds; the search is
    therefore complete.  ``budget`` caps the number of visited nodes.
    """
    names = [v[0] for v in m.variables]
    index = {name: i for i, name in enumerate(names)}
    lo = [v[1] for v in m.variables]
    hi = [v[2] for v in m.variables]
    rows: list[tuple[list[tuple[int, int]], int]] = []
    for c in m.constraints:
        terms = []
        for name, coef in c.terms:
            if name not in index:
                raise MalformedInput(f"constraint {c.name} uses unknown variable {name}")
            terms.append((index[name], coef))
        if c.sense in ("<=", "="):
            rows.append((terms, c.rhs))
        if c.sense in (">=", "="):
            rows.append(([(i, -a) for i, a in terms], -c.rhs))
    touching: list[list[int]] = [[] for _ in names]
    for r, (terms, _) in enumerate(rows):
        for i, _a in terms:
            touching[i].append(r)
    for terms, rhs in rows:
        if not terms and 0 > rhs:
            return False

    value = [0] * len(names)
    assigned = [False] * len(names)
    nodes = 0

    def row_ok(r: int) -> bool:
        terms, rhs = rows[r]
        least = 0
        for i, a in terms:
            if assigned[i]:
                least += a * value[i]
            else:
                least += a * lo[i] if a > 0 else a * hi[i]
        return least <= rhs

    if not all(row_ok(r) for r in range(len(rows))):
        return False

    def search(pos: int) -> bool:
        nonlocal nodes
        if pos == len(names):
            return True
        for val in range(lo[pos], hi[pos] + 1):
            nodes += 1
            if nodes > budget:
                raise ResourceLimit(f"ILP search exceeded {budget} nodes")
            value[pos] = val
            assigned[pos] = True
            if all(row_ok(r) for r in touching[pos]) and search(pos + 1):
                return True
            assigned[pos] = False
        return False

    return search(0)


# -- LP file format ----------------------------------------------------------

def _term_text(terms: tuple[tuple[str, int], ...]) -> str:
    if not terms:
        return "0"
    parts = []
    for name, coef in terms:
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        parts.append(f"{sign} {name}" if mag == 1 else f"{sign} {mag} {name}")
    return " ".join(parts)


def export_lp(m: IlpModel) -> str:
    lines = [f"\\ mode: {m.mode}"]
    for sub in m.metadata.get("substitutions", []):
        lines.append(f"\\ substituted {sub}")
    lines += ["Minimize", " obj: 0", "Subject To"]
    for c in m.constraints:
        lines.append(f" {c.name}: {_term_text(c.terms)} {c.sense} {c.rhs}")
    lines.append("Bounds")
    for name, lo, hi in m.variables:
        lines.append(f" {lo} <= {name} <= {hi}")
    lines.append("General")
    for name, _lo, _hi in m.variables:
        lines.append(f" {name}")
    lines.append("End")
    return "\n".join(lines) + "\n"


def read_lp(text: str) -> IlpModel:
    """Parse text produced by :func:`export_lp` back into a model."""
    m = IlpModel()
    section = None
    bounds: dict[str, tuple[int, int]] = {}
    order: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("\\"):
            body = line[1:].strip()
            if body.startswith("mode:"):
                m.mode = body.split(":", 1)[1].strip()
            elif body.startswith("substituted "):
                m.metadata.setdefault("substitutions", []).append(body[len("substituted "):])
            continue
        if line in ("Minimize", "Subject To", "Bounds", "General", "End"):
            section = line
            continue
        if section == "Subject To":
            name, body = line.split(":", 1)
            tokens = body.split()
            sense, rhs = tokens[-2], int(tokens[-1])
            tokens = tokens[:-2]
            terms = []
            if tokens != ["0"]:
                i = 0
                while i < len(tokens):
                    sign = -1 if tokens[i] == "-" else 1
                    if i + 2 < len(tokens) + 1 and tokens[i + 1].lstrip("-").isdigit():
                        coef, var = int(tokens[i + 1]), tokens[i + 2]
                        i += 3
                    else:
                        coef, var = 1, tokens[i + 1]
                        i += 2
                    terms.append((var, sign * coef))
            m.constraints.append(Constraint(name.strip(), tuple(terms), sense, rhs))
        elif section == "Bounds":
            lo, _, name, _, hi = line.split()
            bounds[name] = (int(lo), int(hi))
        elif section == "General":
            order.extend(line.split())
    m.variables = [(name, *bounds[name]) for name in order]
    return m
