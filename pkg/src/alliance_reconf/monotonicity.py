"""Reconfiguration monotonicity and the TJ <-> TAR sequence transforms.

A property X is rmi (reconfiguration monotone increasing) when for every
X-TJ step A -> B with B \\ A = {v}, the set A ∪ {v} also has X.  For such X a
TJ sequence of length l becomes a TAR sequence (cap k+1) of length 2l by
inserting the unions, and a TAR sequence can be normalised back.

Independent OAs are not rmi: a slide along an isolated edge has a
non-independent union.  Their bridge handles that edge case separately.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .alliances import Variant, satisfies_mask
from .errors import Misuse
from .graph import Graph, bits, check_config, mask_of
from .model import Config, MoveRule, TJ, TAR, is_legal_step
from .oracle import DEFAULT_BUDGET, enumerate_masks

GIDP_OA = Variant("off", True, True)


def check_rmi(
    g: Graph, variant: Variant, budget: int = DEFAULT_BUDGET
) -> tuple[Config, Config, int] | None:
    """First TJ step a -> b whose union a ∪ b breaks ``variant``, or ``None``."""
    feasible = enumerate_masks(g, variant, 0, g.n, budget)
    known = set(feasible)
    for a in feasible:
        for u in bits(a):
            base = a ^ (1 << u)
            for v in bits(g.all_mask & ~a):
                b = base | (1 << v)
                if b in known and not satisfies_mask(g, a | (1 << v), variant):
                    return frozenset(bits(a)), frozenset(bits(b)), v
    return None


def _as_configs(g: Graph, seq: Iterable[Iterable[int]]) -> list[Config]:
    return [check_config(g, c) for c in seq]


def _check(g: Graph, variant: Variant, seq: Sequence[Config], rule: MoveRule, what: str) -> None:
    if not seq:
        raise Misuse(f"empty {what} sequence")
    for i, c in enumerate(seq):
        if not satisfies_mask(g, mask_of(c), variant):
            raise Misuse(f"{what} sequence config {i + 1} is not a {variant.label}")
        if i and not is_legal_step(g, seq[i - 1], c, rule):
            raise Misuse(f"{what} sequence step {i} is not a legal {rule.kind} step")


def _require_rmi(variant: Variant) -> None:
    if not variant.rmi:
        raise Misuse(f"{variant.label} is not rmi; use idp_oa_tar_tj_bridge")


def tj_to_tar(seq: Sequence[Iterable[int]], g: Graph, variant: Variant) -> tuple[Config, ...]:
    """Insert A_i ∪ B_{i+1} between consecutive configs (exactly 2x the moves)."""
    _require_rmi(variant)
    configs = _as_configs(g, seq)
    _check(g, variant, configs, TJ, "TJ")
    out = [configs[0]]
    for a, b in zip(configs, configs[1:]):
        out.append(a | b)
        out.append(b)
    return tuple(out)


def _dedupe(seq: list[Config]) -> list[Config]:
    """Cut every loop, keeping the first occurrence of a repeated config."""
    out: list[Config] = []
    pos: dict[Config, int] = {}
    for c in seq:
        if c in pos:
            cut = pos[c] + 1
            for dropped in out[cut:]:
                del pos[dropped]
            del out[cut:]
        else:
            pos[c] = len(out)
            out.append(c)
    return out


def _lift(seq: list[Config], floor: int, g: Graph, rmi: bool) -> list[Config]:
    """Raise every config below ``floor`` tokens.

    The leftmost minimum B_i sits between B_{i-1} = B_i + v and
    B_{i+1} = B_i + u.  If u = v the detour is dropped; otherwise B_i is
    replaced by B_{i-1} + u (valid by monotonicity).  When u, v are adjacent
    (only possible for independent OAs, on an isolated edge) the union is not
    independent, so the edge slide is moved past the preceding removal of w:
    B_{i-1}, B_i become B_i + w, B_i + w + u.
    """
    seq = _dedupe(seq)
    while True:
        low = min(len(c) for c in seq)
        if low >= floor:
            return seq
        i = next(j for j, c in enumerate(seq) if len(c) == low)
        prev, cur, nxt = seq[i - 1], seq[i], seq[i + 1]
        (v,) = prev - cur
        (u,) = nxt - cur
        if u == v:
            del seq[i : i + 2]
        elif rmi or not g.has_edge(u, v):
            seq[i] = prev | {u}
        else:
            (w,) = seq[i - 2] - prev
            seq[i - 1] = cur | {w}
            seq[i] = cur | {w, u}
        seq = _dedupe(seq)


def _compress(seq: list[Config], k: int) -> tuple[Config, ...]:
    out = tuple(seq[::2])
    if any(len(c) != k for c in out):
        raise Misuse("normalised TAR sequence does not alternate around k")
    return out


def tar_to_tj(seq: Sequence[Iterable[int]], k: int, g: Graph, variant: Variant) -> tuple[Config, ...]:
    """Normalise a TAR sequence (cap k+1, size-k endpoints) into a TJ sequence."""
    _require_rmi(variant)
    configs = _as_configs(g, seq)
    _check(g, variant, configs, TAR(k + 1), "TAR")
    if len(configs[0]) != k or len(configs[-1]) != k:
        raise Misuse(f"TAR endpoints must have exactly {k} tokens")
    return _compress(_lift(list(configs), k, g, True), k)


def idp_oa_tar_tj_bridge(
    seq: Sequence[Iterable[int]], direction: str, g: Graph, variant: Variant = Variant("off", False, True)
) -> tuple[Config, ...]:
    """Convert independent-OA sequences between TJ and TAR (cap k+1).

    ``direction`` is ``"tj_to_tar"`` or ``"tar_to_tj"``.  Jumps between
    non-adjacent vertices become add-then-remove; a jump along an edge (an
    isolated edge, since both ends are independent OAs) becomes
    remove-then-add.
    """
    if not (variant.independent and variant.base == "off"):
        raise Misuse("bridge is only for independent OAs")
    configs = _as_configs(g, seq)
    if not configs:
        raise Misuse("empty sequence")
    k = len(configs[0])
    if direction == "tj_to_tar":
        _check(g, variant, configs, TJ, "TJ")
        out = [configs[0]]
        for a, b in zip(configs, configs[1:]):
            (u,) = a - b
            (v,) = b - a
            out.append(a - {u} if g.has_edge(u, v) else a | {v})
            out.append(b)
        return tuple(out)
    if direction == "tar_to_tj":
        _check(g, variant, configs, TAR(k + 1), "TAR")
        if len(configs[-1]) != k:
            raise Misuse("TAR endpoints differ in size")
        return _compress(_lift(list(configs), k - 1, g, False), k)
    raise Misuse(f"unknown direction {direction!r}")


def gidp_oa_frozen(g: Graph, a: Iterable[int]) -> bool:
    """True iff no single addition or removal keeps ``a`` a global independent OA."""
    m = mask_of(check_config(g, a))
    if not satisfies_mask(g, m, GIDP_OA):
        raise Misuse("configuration is not a global independent OA")
    for v in g.vertices:
        if satisfies_mask(g, m ^ (1 << v), GIDP_OA):
            return False
    return True
