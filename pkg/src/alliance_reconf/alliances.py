"""Alliance predicates and the Z/Y vertex-set machinery.

Conditions, for A a vertex set:

* defensive (DA): every v in A has d_A(v) + 1 >= d_{V\\A}(v)
* offensive (OA): every v in N(A)\\A has d_A(v) >= d_{V\\A}(v) + 1
* powerful (PA): both
* global: N[A] = V;  independent: A induces no edge (offensive base only)

The empty set is vacuously a DA/OA/PA; it is global only in the empty graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import MalformedInput
from .graph import Graph, bits, check_config, mask_of, set_of

BASES = ("def", "off", "pow")
_BASE_NAMES = {"def": "DA", "off": "OA", "pow": "PA"}


@dataclass(frozen=True)
class Variant:
    base: str
    global_: bool = False
    independent: bool = False

    def __post_init__(self) -> None:
        if self.base not in BASES:
            raise MalformedInput(f"unknown alliance base {self.base!r}")
        if self.independent and self.base != "off":
            raise MalformedInput("the independent flag requires the offensive base")

    @property
    def defensive(self) -> bool:
        return self.base in ("def", "pow")

    @property
    def offensive(self) -> bool:
        return self.base in ("off", "pow")

    @property
    def label(self) -> str:
        out = _BASE_NAMES[self.base]
        if self.independent:
            out = "Idp-" + out
        if self.global_:
            out = "G-" + out
        return out

    @property
    def rmi(self) -> bool:
        return not self.independent

    def to_text(self) -> str:
        words = [self.base]
        if self.global_:
            words.append("global")
        if self.independent:
            words.append("independent")
        return " ".join(words)

    @classmethod
    def parse(cls, text: str) -> "Variant":
        words = text.lower().split()
        if not words:
            raise MalformedInput("empty variant")
        extra = set(words[1:])
        unknown = extra - {"global", "independent"}
        if unknown:
            raise MalformedInput(f"unknown variant flag {sorted(unknown)[0]!r}")
        return cls(words[0], "global" in extra, "independent" in extra)


DA = Variant("def")
OA = Variant("off")
PA = Variant("pow")

ALL_VARIANTS = (
    Variant("def"),
    Variant("def", True),
    Variant("off"),
    Variant("off", True),
    Variant("off", False, True),
    Variant("off", True, True),
    Variant("pow"),
    Variant("pow", True),
)
RMI_VARIANTS = tuple(v for v in ALL_VARIANTS if v.rmi)


# -- bitmask core ------------------------------------------------------------

def check_mask(g: Graph, a: int, variant: Variant, affected: int) -> bool:
    """Evaluate ``variant`` on configuration ``a`` only at vertices in ``affected``.

    With ``affected = g.all_mask`` this is the full predicate.  After a step
    from a feasible configuration it suffices to pass the closed
    neighbourhoods of the changed vertices.
    """
    adj = g.adj
    deg = g.deg
    if variant.defensive or variant.independent:
        for v in bits(affected & a):
            inside = (adj[v] & a).bit_count()
            if variant.defensive and 2 * inside + 1 < deg[v]:
                return False
            if variant.independent and inside:
                return False
    if variant.offensive or variant.global_:
        for v in bits(affected & ~a):
            nb = adj[v] & a
            if not nb:
                if variant.global_:
                    return False
                continue
            if variant.offensive and 2 * nb.bit_count() < deg[v] + 1:
                return False
    return True


def satisfies_mask(g: Graph, a: int, variant: Variant) -> bool:
    return check_mask(g, a, variant, g.all_mask)


def boundary_mask(g: Graph, a: int) -> int:
    return g.neighborhood_mask(a) & ~a


def z_mask(g: Graph, x: int) -> int:
    leaves = g.leaves_mask()
    closed = g.neighborhood_mask(x) | x
    allowed = leaves | (closed & ~x)
    out = 0
    for v in bits(g.all_mask & ~closed):
        if not g.adj[v] & ~allowed:
            out |= 1 << v
    return out


def y_mask(g: Graph, x: int) -> int:
    return g.neighborhood_mask(x) | x | z_mask(g, x) | g.leaves_mask()


# -- public set-based API ----------------------------------------------------

def boundary(g: Graph, a: Iterable[int]) -> frozenset[int]:
    return set_of(boundary_mask(g, mask_of(check_config(g, a))))


def is_defensive(g: Graph, a: Iterable[int]) -> bool:
    return satisfies_mask(g, mask_of(check_config(g, a)), DA)


def is_offensive(g: Graph, a: Iterable[int]) -> bool:
    return satisfies_mask(g, mask_of(check_config(g, a)), OA)


def is_dominating(g: Graph, a: Iterable[int]) -> bool:
    m = mask_of(check_config(g, a))
    return (g.neighborhood_mask(m) | m) == g.all_mask


def satisfies(g: Graph, a: Iterable[int], variant: Variant) -> bool:
    return satisfies_mask(g, mask_of(check_config(g, a)), variant)


def z_set(g: Graph, x: Iterable[int]) -> frozenset[int]:
    return set_of(z_mask(g, mask_of(check_config(g, x))))


def y_set(g: Graph, x: Iterable[int]) -> frozenset[int]:
    return set_of(y_mask(g, mask_of(check_config(g, x))))
