"""Gadget constructions from dominating-set reconfiguration (TJ).

Each construction copies the seed vertex set into layers ``("V", q, v)``
and adds gadget vertices.  Tokens of the seed instance live on layer 1;
:meth:`Reduction.config_of` maps a vertex set D of the seed to the alliance
A_D, and :func:`pull_back` maps an alliance sequence back by reading layer 1.

Vertex labels are tuples ``(tag, ints...)``.  Labels are sorted and numbered
from 1, so the reduced graph is the same on every run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .alliances import Variant
from .errors import MalformedInput, Misuse
from .graph import Graph, build_graph, check_config, mask_of
from .model import Config, Instance, MoveRule, TJ, TS, validate_sequence
from .oracle import dominating_check

Label = tuple


@dataclass(frozen=True)
class ReductionSpec:
    target: str
    rule: str = ""

    def __post_init__(self) -> None:
        if self.target not in _BUILDERS:
            raise MalformedInput(f"unknown reduction target {self.target!r}")
        rule = self.rule or _DEFAULT_RULE[self.target]
        if rule not in _ALLOWED_RULES[self.target]:
            raise MalformedInput(f"{self.target} supports rules {sorted(_ALLOWED_RULES[self.target])}")
        object.__setattr__(self, "rule", rule)

    @property
    def expected_class(self) -> str:
        return "chordal" if self.target in _CHORDAL else "bipartite"

    @property
    def variant(self) -> Variant:
        return _VARIANT[self.target]

    @property
    def move_rule(self) -> MoveRule:
        return TS if self.rule == "TS" else TJ

    @property
    def needs_no_isolates(self) -> bool:
        return self.target in _NO_ISOLATES


class _Builder:
    def __init__(self) -> None:
        self.labels: set[Label] = set()
        self.edges: set[tuple[Label, Label]] = set()

    def add(self, *labels: Label) -> None:
        self.labels.update(labels)

    def join(self, x: Label, y: Label) -> None:
        if x == y:
            raise AssertionError(f"self-loop at {x}")
        self.labels.update((x, y))
        self.edges.add((x, y) if x < y else (y, x))

    def clique(self, labels: Iterable[Label]) -> None:
        group = sorted(set(labels))
        for i, x in enumerate(group):
            for y in group[i + 1:]:
                self.join(x, y)


@dataclass(frozen=True)
class Reduction:
    spec: ReductionSpec
    seed: Graph
    d_s: Config
    d_t: Config
    instance: Instance
    names: tuple[Label, ...]
    fixed_part: frozenset[Label]

    @property
    def index(self) -> dict[Label, int]:
        return {lab: i + 1 for i, lab in enumerate(self.names)}

    def vertex(self, label: Label) -> int:
        return self.index[label]

    def name(self, v: int) -> Label:
        return self.names[v - 1]

    def config_of(self, d: Iterable[int]) -> Config:
        """A_D: the layer-1 copies of D plus the construction's fixed part."""
        idx = self.index
        labels = set(self.fixed_part) | {("V", 1, v) for v in d}
        return frozenset(idx[lab] for lab in labels)

    def project(self, a: Iterable[int]) -> Config:
        """Seed vertices whose layer-1 copy is occupied."""
        out = []
        for v in a:
            lab = self.names[v - 1]
            if lab[0] == "V" and lab[1] == 1:
                out.append(lab[2])
        return frozenset(out)


# -- constructions -------------------------------------------------------------
# Each builder gets the seed graph and k and returns (builder, fixed part).

def _layer(g: Graph, q: int) -> list[Label]:
    return [("V", q, v) for v in g.vertices]


def _closed_pairs(g: Graph):
    """(v, u) for all v and u in N[v]."""
    for v in g.vertices:
        yield v, v
        for u in g.neighbors(v):
            yield v, u


def _da_ts(g: Graph, k: int):
    b = _Builder()
    for q in (1, 2, 3):
        b.add(*_layer(g, q))
    b.clique(_layer(g, 1) + _layer(g, 3))
    for v, u in _closed_pairs(g):
        b.join(("V", 1, v), ("V", 2, u))
    fixed = set(_layer(g, 2) + _layer(g, 3))
    for v in g.vertices:
        d = g.deg[v]
        for j in range(1, d + 1):
            m = [("M", v, j, p) for p in range(7)]
            for p in (2, 4, 5, 6):
                b.join(m[1], m[p])
            b.join(m[2], m[3])
            b.join(m[1], ("V", 2 if j < d else 3, v))
            fixed.update((m[1], m[2]))
    return b, fixed


def _oa_ts(g: Graph, k: int):
    b = _Builder()
    for q in range(1, 15):
        b.add(*_layer(g, q))
    b.clique(_layer(g, 1) + _layer(g, 2) + _layer(g, 7))
    for v, u in _closed_pairs(g):
        b.join(("V", 1, v), ("V", 12, u))
    fixed = set(_layer(g, 2) + _layer(g, 4) + _layer(g, 7) + _layer(g, 9))
    for v in g.vertices:
        for q in (2, 7):
            x = [("V", q + i, v) for i in range(5)]
            b.join(x[0], x[1])
            b.join(x[1], x[2])
            b.join(x[1], x[3])
            b.join(x[3], x[4])
        b.join(("V", 12, v), ("V", 13, v))
        b.join(("V", 13, v), ("V", 14, v))
        for j in range(1, g.deg[v] + 2):
            b.join(("V", 12, v), ("m", v, j))
            fixed.add(("m", v, j))
    return b, fixed


def _da_tj(g: Graph, k: int):
    b = _Builder()
    for q in range(1, 7):
        b.add(*_layer(g, q))
    a = ("a",)
    for v in g.vertices:
        for u in g.neighbors(v):
            b.join(("V", 1, v), ("V", 2, u))
            b.join(("V", 3, v), ("V", 2, u))
            b.join(("V", 3, v), ("V", 5, u))
        for u in g.vertices:
            b.join(("V", 4, v), ("V", 5, u))
            b.join(("V", 6, v), ("V", 5, u))
        b.join(("V", 3, v), a)
        b.join(("V", 4, v), a)
        b.join(("V", 1, v), ("V", 2, v))
        b.join(("V", 6, v), ("V", 2, v))
        b.join(("V", 3, v), ("V", 5, v))
    return b, set(_layer(g, 2) + _layer(g, 3) + [a])


def _oa_tj(g: Graph, k: int):
    b = _Builder()
    for q in range(1, 10):
        b.add(*_layer(g, q))
    a, bb = ("a",), ("b",)
    b.join(a, bb)
    for v, u in _closed_pairs(g):
        b.join(("V", 1, v), ("V", 3, u))
        b.join(("V", 2, v), ("V", 3, u))
    for v in g.vertices:
        b.join(("V", 2, v), bb)
        b.join(("V", 7, v), bb)
        for x, y in ((4, 3), (4, 5), (6, 5), (7, 8), (9, 8)):
            b.join(("V", x, v), ("V", y, v))
    return b, set(_layer(g, 2) + [a])


def _goa_tj_bip(g: Graph, k: int):
    b = _Builder()
    for q in range(1, 6):
        b.add(*_layer(g, q))
    width = 2 * (k + 3 * g.n) + 1
    for v, u in _closed_pairs(g):
        b.join(("V", 1, u), ("V", 2, v))
        b.join(("V", 3, u), ("V", 2, v))
    for v in g.vertices:
        for u in g.vertices:
            b.join(("V", 1, v), ("V", 4, u))
            b.join(("V", 1, v), ("V", 5, u))
        for j in range(1, width + 1):
            b.join(("a", j), ("V", 4, v))
            b.join(("a", j), ("V", 5, v))
            b.join(("V", 3, v), ("b", j))
    return b, set(_layer(g, 3) + _layer(g, 4) + _layer(g, 5))


def _goa_chordal(g: Graph, k: int):
    b = _Builder()
    for q in range(1, 6):
        b.add(*_layer(g, q))
    width = 2 * (k + 4 * g.n + len(g.edges)) + 1
    b.clique(_layer(g, 1) + _layer(g, 3) + _layer(g, 4) + _layer(g, 5))
    for v, u in _closed_pairs(g):
        b.join(("V", 1, u), ("V", 2, v))
    fixed = set(_layer(g, 3) + _layer(g, 4) + _layer(g, 5))
    for v in g.vertices:
        for j in range(1, g.deg[v] + 2):
            b.join(("V", 2, v), ("m", v, j))
            fixed.add(("m", v, j))
            for p in range(1, width + 1):
                b.join(("m", v, j), ("m", v, j, p))
    for p in range(1, width + 1):
        for v in g.vertices:
            for q in (3, 4, 5):
                b.join(("a", p), ("V", q, v))
    return b, fixed


def _idp_oa_tj(g: Graph, k: int):
    b = _Builder()
    for q in range(1, 9):
        b.add(*_layer(g, q))
    for v, u in _closed_pairs(g):
        b.join(("V", 1, v), ("V", 2, u))
        b.join(("V", 3, v), ("V", 2, u))
    for v in g.vertices:
        b.join(("V", 3, v), ("V", 5, v))
        for q in (4, 5, 6, 7):
            b.join(("V", q, v), ("V", q + 1, v))
    return b, set(_layer(g, 3) + _layer(g, 4))


def _pa_tj(g: Graph, k: int):
    b = _Builder()
    for q in (1, 2, 3):
        b.add(*_layer(g, q))
    fixed = set(_layer(g, 2) + _layer(g, 3))
    for v in g.vertices:
        for u in g.neighbors(v):
            b.join(("V", 1, v), ("V", 2, u))
            b.join(("V", 3, v), ("V", 2, u))
        b.join(("V", 1, v), ("V", 2, v))
        for p in (2, 3):
            m = [("M", v, p, j) for j in range(7)]
            b.join(("V", p, v), m[1])
            for x, y in ((1, 2), (1, 3), (3, 4), (4, 5), (5, 6), (6, 3)):
                b.join(m[x], m[y])
            fixed.add(m[2])
    return b, fixed


def _gpa_tj(g: Graph, k: int):
    b = _Builder()
    for q in range(1, 6):
        b.add(*_layer(g, q))
    a = ("a",)
    n = g.n
    for v in g.vertices:
        b.join(("V", 1, v), a)
        b.join(("V", 4, v), ("V", 2, v))
        # {v5, v2}: without it v5 is an isolate that A_D never dominates
        b.join(("V", 5, v), ("V", 2, v))
        for j in range(1, g.deg[v] + 3):
            b.join(("V", 3, v), ("m", v, j))
    for v, u in _closed_pairs(g):
        b.join(("V", 1, v), ("V", 2, u))
        b.join(("V", 3, v), ("V", 2, u))
    for j in range(1, n + 1):
        b.join(("b", j), a)
    for j in range(1, n - k + 1):
        b.join(("b", j), ("c", 2 * j - 1))
        b.join(("b", j), ("c", 2 * j))
    fixed = set(_layer(g, 2) + _layer(g, 3) + [a] + [("b", j) for j in range(1, n - k + 1)])
    return b, fixed


_BUILDERS: dict[str, Callable] = {
    "DA-TS": _da_ts,
    "OA-TS": _oa_ts,
    "DA-TJ": _da_tj,
    "OA-TJ": _oa_tj,
    "G-OA-TJ-bip": _goa_tj_bip,
    "G-OA-chordal": _goa_chordal,
    "Idp-OA-TJ": _idp_oa_tj,
    "PA-TJ": _pa_tj,
    "G-PA-TJ": _gpa_tj,
}
TARGETS = tuple(_BUILDERS)

_CHORDAL = {"DA-TS", "OA-TS", "G-OA-chordal"}
_NO_ISOLATES = {"DA-TS", "DA-TJ", "G-OA-TJ-bip", "PA-TJ", "G-PA-TJ"}
_DEFAULT_RULE = {t: ("TS" if t in _CHORDAL else "TJ") for t in _BUILDERS}
_ALLOWED_RULES = {t: ({"TS", "TJ"} if t == "G-OA-chordal" else {_DEFAULT_RULE[t]}) for t in _BUILDERS}
_VARIANT = {
    "DA-TS": Variant("def"),
    "OA-TS": Variant("off"),
    "DA-TJ": Variant("def"),
    "OA-TJ": Variant("off"),
    "G-OA-TJ-bip": Variant("off", global_=True),
    "G-OA-chordal": Variant("off", global_=True),
    "Idp-OA-TJ": Variant("off", independent=True),
    "PA-TJ": Variant("pow"),
    "G-PA-TJ": Variant("pow", global_=True),
}


def build_gadget(spec: ReductionSpec, g: Graph, k: int) -> tuple[Graph, tuple[Label, ...], frozenset[Label]]:
    """Reduced graph, sorted vertex labels, and the fixed part of every A_D."""
    b, fixed = _BUILDERS[spec.target](g, k)
    names = tuple(sorted(b.labels))
    idx = {lab: i + 1 for i, lab in enumerate(names)}
    graph = build_graph(len(names), ((idx[x], idx[y]) for x, y in sorted(b.edges)))
    return graph, names, frozenset(fixed)


def check_seed(spec: ReductionSpec, g: Graph, d_s: Iterable[int], d_t: Iterable[int]) -> tuple[Config, Config]:
    s, t = check_config(g, d_s), check_config(g, d_t)
    dom = dominating_check(g)
    for name, c in (("start", s), ("target", t)):
        if not dom(mask_of(c), g.all_mask):
            raise MalformedInput(f"{name} is not a dominating set of the seed graph")
    if len(s) != len(t):
        raise MalformedInput("start and target dominating sets differ in size")
    if spec.needs_no_isolates and any(g.deg[v] == 0 for v in g.vertices):
        raise MalformedInput(f"{spec.target} needs a seed graph without isolates")
    if spec.target == "G-PA-TJ" and len(s) in (0, g.n - 1, g.n):
        raise MalformedInput("G-PA-TJ needs 0 < k < n - 1 (other sizes are trivial instances)")
    return s, t


def reduce(
    spec: ReductionSpec,
    g: Graph,
    d_s: Iterable[int],
    d_t: Iterable[int],
    move_bound: int | None = None,
) -> Reduction:
    """Build the alliance instance (G~, A_{D_s}, A_{D_t}) with the same move bound."""
    s, t = check_seed(spec, g, d_s, d_t)
    graph, names, fixed = build_gadget(spec, g, len(s))
    idx = {lab: i + 1 for i, lab in enumerate(names)}

    def a_of(d: Config) -> Config:
        return frozenset(idx[lab] for lab in fixed | {("V", 1, v) for v in d})

    inst = Instance(graph, a_of(s), a_of(t), spec.variant, spec.move_rule, move_bound)
    return Reduction(spec, g, s, t, inst, names, fixed)


def push_forward(red: Reduction, ds_seq: Sequence[Iterable[int]]) -> tuple[Config, ...]:
    """Map a dominating-set TJ sequence to the alliance sequence A_{D_1}, ..."""
    return tuple(red.config_of(d) for d in ds_seq)


def is_ds_tj_sequence(g: Graph, seq: Sequence[Config], start: Config, target: Config) -> bool:
    if not seq or seq[0] != start or seq[-1] != target:
        return False
    dom = dominating_check(g)
    for d in seq:
        if not dom(mask_of(d), g.all_mask):
            return False
    for x, y in zip(seq, seq[1:]):
        if len(x) != len(y) or len(x - y) != 1:
            return False
    return True


def pull_back(red: Reduction, witness: Sequence[Iterable[int]]) -> tuple[Config, ...]:
    """Project a valid alliance witness onto layer 1 and drop repeats.

    Raises :class:`Misuse` if the witness is invalid on the reduced instance
    or if its projection is not a dominating-set TJ sequence (which happens
    when tokens outside layer 1 move; the constructions only guarantee that
    some witness avoids this).
    """
    witness = [frozenset(a) for a in witness]
    bad = validate_sequence(red.instance, witness)
    if bad is not None:
        raise Misuse(f"witness is invalid on the reduced instance: {bad}")
    out: list[Config] = []
    for a in witness:
        d = red.project(a)
        if not out or out[-1] != d:
            out.append(d)
    if not is_ds_tj_sequence(red.seed, out, red.d_s, red.d_t):
        raise Misuse("witness moves tokens outside layer 1; its projection is not a dominating-set TJ sequence")
    return tuple(out)
