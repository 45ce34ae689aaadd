"""Move rules, instances, outcomes, and sequence validation.

Lengths are counted in moves throughout (a sequence of m configurations has
m - 1 moves).  Instance files may carry a configuration bound ``T`` in the
"fewer than T configurations" sense; it becomes the move bound ``T - 2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .alliances import Variant, satisfies_mask
from .errors import MalformedInput
from .graph import Graph, check_config, format_graph, mask_of, parse_graph_lines

Config = frozenset[int]
RULES = ("TS", "TJ", "TAR")


@dataclass(frozen=True)
class MoveRule:
    kind: str
    cap: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in RULES:
            raise MalformedInput(f"unknown move rule {self.kind!r}")
        if self.kind == "TAR":
            if self.cap is None:
                raise MalformedInput("TAR requires a cap")
            if self.cap < 0:
                raise MalformedInput("TAR cap must be non-negative")
        elif self.cap is not None:
            raise MalformedInput(f"{self.kind} takes no cap")

    @classmethod
    def parse(cls, text: str, cap: int | None = None) -> "MoveRule":
        return cls(text.strip().upper(), cap)


TS = MoveRule("TS")
TJ = MoveRule("TJ")


def TAR(cap: int) -> MoveRule:
    return MoveRule("TAR", cap)


def config_bound_to_moves(t: int) -> int:
    """Configuration-count bound (fewer than ``t`` configurations) to a move bound."""
    if t < 2:
        raise MalformedInput(f"configuration bound must be at least 2, got {t}")
    return t - 2


def moves_to_config_bound(moves: int) -> int:
    return moves + 2


@dataclass(frozen=True)
class Instance:
    g: Graph
    start: Config
    target: Config
    variant: Variant
    rule: MoveRule
    move_bound: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", check_config(self.g, self.start))
        object.__setattr__(self, "target", check_config(self.g, self.target))
        if self.move_bound is not None and self.move_bound < 0:
            raise MalformedInput("move bound must be non-negative")
        if self.rule.kind == "TAR":
            for name, c in (("start", self.start), ("target", self.target)):
                if len(c) > self.rule.cap:
                    raise MalformedInput(f"{name} has {len(c)} tokens, above cap {self.rule.cap}")
        elif len(self.start) != len(self.target):
            raise MalformedInput("start and target sizes differ under TS/TJ")
        for name, c in (("start", self.start), ("target", self.target)):
            if not satisfies_mask(self.g, mask_of(c), self.variant):
                raise MalformedInput(f"{name} is not a {self.variant.label} of the graph")

    @property
    def k(self) -> int:
        """Token parameter: the cap under TAR, the token count otherwise."""
        return self.rule.cap if self.rule.kind == "TAR" else len(self.start)

    def with_bound(self, move_bound: int | None) -> "Instance":
        return Instance(self.g, self.start, self.target, self.variant, self.rule, move_bound)


@dataclass(frozen=True)
class Outcome:
    reachable: bool
    min_moves: int | None = None
    witness: tuple[Config, ...] | None = None
    solver: str = ""
    states: int = 0
    info: dict = field(default_factory=dict, compare=False)

    @property
    def config_count(self) -> int | None:
        return None if self.min_moves is None else self.min_moves + 1


@dataclass(frozen=True)
class Violation:
    index: int
    reason: str

    def __str__(self) -> str:
        return f"violation at config {self.index}: {self.reason}"


def is_legal_step(g: Graph, a: Iterable[int], b: Iterable[int], rule: MoveRule) -> bool:
    a = frozenset(a)
    b = frozenset(b)
    if rule.kind == "TAR":
        return len(a ^ b) == 1 and len(a) <= rule.cap and len(b) <= rule.cap
    if len(a) != len(b) or len(a - b) != 1:
        return False
    if rule.kind == "TJ":
        return True
    (u,) = a - b
    (v,) = b - a
    return g.has_edge(u, v)


def validate_sequence(inst: Instance, seq: Sequence[Iterable[int]]) -> Violation | None:
    """First violation in ``seq`` (1-based config index) or ``None`` if valid."""
    configs = [frozenset(c) for c in seq]
    if not configs:
        return Violation(1, "endpoint-mismatch")
    if configs[0] != inst.start:
        return Violation(1, "endpoint-mismatch")
    for i, c in enumerate(configs, 1):
        if i > 1:
            if any(not 1 <= v <= inst.g.n for v in c) or not satisfies_mask(
                inst.g, mask_of(c), inst.variant
            ):
                return Violation(i, "variant-fail")
            if not is_legal_step(inst.g, configs[i - 2], c, inst.rule):
                return Violation(i, "step-illegal")
        if inst.move_bound is not None and i - 1 > inst.move_bound:
            return Violation(i, "bound-exceeded")
    if configs[-1] != inst.target:
        return Violation(len(configs), "endpoint-mismatch")
    return None


# -- file formats ------------------------------------------------------------

def _vertices(value: str) -> Config:
    try:
        return frozenset(int(t) for t in value.split())
    except ValueError:
        raise MalformedInput(f"bad vertex list {value!r}") from None


def parse_instance(text: str) -> Instance:
    g, rest = parse_graph_lines(text.splitlines())
    fields: dict[str, str] = {}
    for key, value in rest:
        if key in fields:
            raise MalformedInput(f"duplicate key {key!r}")
        fields[key] = value
    allowed = {"variant", "rule", "cap", "start", "target", "bound"}
    unknown = set(fields) - allowed
    if unknown:
        raise MalformedInput(f"unknown key {sorted(unknown)[0]!r}")
    for key in ("variant", "rule", "start", "target"):
        if key not in fields:
            raise MalformedInput(f"missing {key!r} line")
    cap = None
    if "cap" in fields:
        try:
            cap = int(fields["cap"])
        except ValueError:
            raise MalformedInput(f"bad cap {fields['cap']!r}") from None
    rule = MoveRule.parse(fields["rule"], cap)
    bound = None
    if "bound" in fields:
        try:
            bound = config_bound_to_moves(int(fields["bound"]))
        except ValueError:
            raise MalformedInput(f"bad bound {fields['bound']!r}") from None
    return Instance(
        g,
        _vertices(fields["start"]),
        _vertices(fields["target"]),
        Variant.parse(fields["variant"]),
        rule,
        bound,
    )


def _fmt(c: Iterable[int]) -> str:
    return " ".join(str(v) for v in sorted(c))


def format_instance(inst: Instance) -> str:
    lines = [format_graph(inst.g).rstrip("\n")]
    lines.append(f"variant: {inst.variant.to_text()}")
    lines.append(f"rule: {inst.rule.kind.lower()}")
    if inst.rule.kind == "TAR":
        lines.append(f"cap: {inst.rule.cap}")
    lines.append(f"start: {_fmt(inst.start)}".rstrip())
    lines.append(f"target: {_fmt(inst.target)}".rstrip())
    if inst.move_bound is not None:
        lines.append(f"bound: {moves_to_config_bound(inst.move_bound)}")
    return "\n".join(lines) + "\n"


def parse_sequence(text: str) -> list[Config]:
    """One configuration per line; a blank line is the empty configuration."""
    out = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        out.append(_vertices(stripped))
    return out


def format_sequence(seq: Iterable[Iterable[int]]) -> str:
    return "".join(_fmt(c) + "\n" for c in seq)


def parse_ds_instance(text: str) -> tuple[Graph, Config, Config, int | None]:
    """Dominating-set instance: graph block plus ``start``/``target``/``bound``."""
    g, rest = parse_graph_lines(text.splitlines())
    fields = dict(rest)
    unknown = set(fields) - {"start", "target", "bound"}
    if unknown:
        raise MalformedInput(f"unknown key {sorted(unknown)[0]!r}")
    for key in ("start", "target"):
        if key not in fields:
            raise MalformedInput(f"missing {key!r} line")
    bound = None
    if "bound" in fields:
        bound = config_bound_to_moves(int(fields["bound"]))
    return (
        g,
        check_config(g, _vertices(fields["start"])),
        check_config(g, _vertices(fields["target"])),
        bound,
    )


def format_ds_instance(g: Graph, d_s: Iterable[int], d_t: Iterable[int], bound: int | None = None) -> str:
    lines = [format_graph(g).rstrip("\n"), f"start: {_fmt(d_s)}".rstrip(), f"target: {_fmt(d_t)}".rstrip()]
    if bound is not None:
        lines.append(f"bound: {moves_to_config_bound(bound)}")
    return "\n".join(lines) + "\n"
