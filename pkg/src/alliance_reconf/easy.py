"""Fast paths for independent offensive alliances.

Between two independent OAs a slide is only possible along an isolated edge,
and such edges are components of their own.  Hence under TS (and for global
independent OAs also under TJ) the only possible moves flip a token across
an isolated edge, and reachability is a pairing test on the symmetric
difference.  Global independent OAs admit no TAR step at all.
"""

from __future__ import annotations

from .errors import InternalAssertion, Misuse
from .model import Instance, Outcome


def _pairing(inst: Instance) -> tuple[list[tuple[int, int]] | None, int]:
    """Match A_s\\A_t to A_t\\A_s via isolated edges; also count adjacency reads."""
    g = inst.g
    gone = sorted(inst.start - inst.target)
    new = inst.target - inst.start
    reads = 0
    pairs = []
    for x in gone:
        reads += 1
        if g.deg[x] != 1:
            return None, reads
        (y,) = g.neighbors(x)
        reads += 1
        if g.deg[y] != 1 or y not in new:
            return None, reads
        pairs.append((x, y))
    if reads > 2 * g.n:
        raise InternalAssertion("pairing test read more than 2n adjacency lists")
    return pairs, reads


def _slide_witness(inst: Instance, pairs: list[tuple[int, int]]) -> tuple[frozenset[int], ...]:
    seq = [inst.start]
    cur = set(inst.start)
    for x, y in pairs:
        cur.discard(x)
        cur.add(y)
        seq.append(frozenset(cur))
    return tuple(seq)


def _finish(inst: Instance, pairs: list[tuple[int, int]] | None, reads: int, solver: str) -> Outcome:
    if pairs is None or (inst.move_bound is not None and len(pairs) > inst.move_bound):
        return Outcome(False, None, None, solver, 0, {"adjacency_reads": reads})
    return Outcome(True, len(pairs), _slide_witness(inst, pairs), solver, 0, {"adjacency_reads": reads})


def solve_idp_oa_ts(inst: Instance) -> Outcome:
    v = inst.variant
    if not (v.base == "off" and v.independent and inst.rule.kind == "TS"):
        raise Misuse("solve_idp_oa_ts needs independent OAs under TS")
    pairs, reads = _pairing(inst)
    return _finish(inst, pairs, reads, "easy-idp-ts")


def solve_gidp_oa(inst: Instance) -> Outcome:
    v = inst.variant
    if not (v.base == "off" and v.independent and v.global_):
        raise Misuse("solve_gidp_oa needs global independent OAs")
    if inst.rule.kind == "TAR":
        if inst.start == inst.target:
            return Outcome(True, 0, (inst.start,), "easy-gidp", 0)
        return Outcome(False, None, None, "easy-gidp", 0)
    pairs, reads = _pairing(inst)
    return _finish(inst, pairs, reads, "easy-gidp")
