"""Immutable simple graphs over vertices 1..n plus structural recognizers.

Adjacency is stored as one Python integer bitmask per vertex (bit ``v`` set
means ``v`` is a neighbour).  Vertex sets inside the search code are also
bitmasks; the public API accepts and returns ``frozenset`` objects.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import MalformedInput


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``.

    Build instances with :func:`build_graph`; the constructor assumes the
    edge set is already normalised to pairs ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)
    deg: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "deg", tuple(a.bit_count() for a in adj))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def all_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) ^ 1

    def neighbors(self, v: int) -> frozenset[int]:
        return set_of(self.adj[v])

    def degree(self, v: int) -> int:
        return self.deg[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def neighborhood_mask(self, mask: int) -> int:
        """Open neighbourhood N(A) of a vertex mask (may intersect A)."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def leaves_mask(self) -> int:
        return mask_of(v for v in self.vertices if self.deg[v] == 1)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabelled to 1..n'; ``names[i-1]`` is the old label."""
        names = tuple(sorted(set(keep)))
        index = {v: i + 1 for i, v in enumerate(names)}
        edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return build_graph(len(names), edges), names


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise MalformedInput(f"vertex count must be non-negative, got {n}")
    edges = set()
    for u, v in edge_list:
        if not (1 <= u <= n and 1 <= v <= n):
            raise MalformedInput(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        if u == v:
            raise MalformedInput(f"self-loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def check_config(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """Return ``vertices`` as a frozenset after checking they lie in ``g``."""
    out = frozenset(vertices)
    bad = [v for v in out if not 1 <= v <= g.n]
    if bad:
        raise MalformedInput(f"vertex {min(bad)} is not in the graph (n={g.n})")
    return out


def two_coloring(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Bipartition of ``g`` or ``None`` if an odd cycle exists.

    The smallest vertex of every component goes to the first part.
    """
    color: dict[int, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in bits(g.adj[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    part0 = frozenset(v for v, c in color.items() if c == 0)
    part1 = frozenset(v for v, c in color.items() if c == 1)
    return part0, part1


def is_simplicial(g: Graph, v: int, within: int) -> bool:
    nb = g.adj[v] & within
    for u in bits(nb):
        if nb & ~(g.adj[u] | (1 << u)):
            return False
    return True


def perfect_elimination_order(g: Graph) -> tuple[int, ...] | None:
    """Ordering v_1..v_n with each v_i simplicial in G[{v_1..v_i}], if chordal.

    Repeatedly strips the smallest simplicial vertex of the remaining graph;
    stripped vertices fill the ordering from the back.
    """
    remaining = g.all_mask
    eliminated: list[int] = []
    while remaining:
        for v in bits(remaining):
            if is_simplicial(g, v, remaining):
                eliminated.append(v)
                remaining &= ~(1 << v)
                break
        else:
            return None
    return tuple(reversed(eliminated))


@dataclass(frozen=True)
class NdPartition:
    """Neighbourhood-diversity classes of a graph.

    ``clique_flags[i]`` is true only for classes with at least two vertices
    that induce a clique; singleton classes count as independent.  This makes
    ``i in class_neighbors(i)`` hold exactly when ``clique_flags[i]`` does.
    """

    classes: tuple[frozenset[int], ...]
    class_adjacency: frozenset[tuple[int, int]]
    clique_flags: tuple[bool, ...]

    @property
    def size(self) -> int:
        return len(self.classes)

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise KeyError(v)

    def class_neighbors(self, i: int) -> tuple[int, ...]:
        """Indices j whose class is joined to class i (i itself for cliques)."""
        out = []
        for j in range(self.size):
            if j == i:
                if self.clique_flags[i]:
                    out.append(j)
            elif (min(i, j), max(i, j)) in self.class_adjacency:
                out.append(j)
        return tuple(out)


def same_type(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)


def nd_partition(g: Graph) -> NdPartition:
    reps: list[int] = []
    members: list[list[int]] = []
    for v in g.vertices:
        for i, r in enumerate(reps):
            if same_type(g, v, r):
                members[i].append(v)
                break
        else:
            reps.append(v)
            members.append([v])
    flags = tuple(len(m) >= 2 and g.has_edge(m[0], m[1]) for m in members)
    adjacency = set()
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if g.has_edge(reps[i], reps[j]):
                adjacency.add((i, j))
    return NdPartition(
        tuple(frozenset(m) for m in members), frozenset(adjacency), flags
    )


def low_degree_subgraph(g: Graph, r: int) -> tuple[Graph, tuple[int, ...]]:
    """G^{<=r}: induced subgraph on vertices of degree at most ``r``."""
    if r < 0:
        raise MalformedInput("degree bound must be non-negative")
    return g.induced(v for v in g.vertices if g.deg[v] <= r)


def within_distance_mask(g: Graph, seed: int, bound: int | None, allowed: int | None = None) -> int:
    """Multi-source BFS ball; ``allowed`` restricts the vertices walked through."""
    if allowed is None:
        allowed = g.all_mask
    reached = seed & allowed
    frontier = reached
    depth = 0
    while frontier and (bound is None or depth < bound):
        nxt = g.neighborhood_mask(frontier) & allowed & ~reached
        reached |= nxt
        frontier = nxt
        depth += 1
    return reached | seed


def within_distance(g: Graph, seed: Iterable[int], bound: int) -> frozenset[int]:
    s = check_config(g, seed)
    return set_of(within_distance_mask(g, mask_of(s), bound))


def parse_graph_lines(lines: Iterable[str]) -> tuple[Graph, list[tuple[str, str]]]:
    """Parse a graph block; returns the graph and remaining ``key: value`` lines."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    rest: list[tuple[str, str]] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise MalformedInput(f"line {lineno}: expected 'key: value', got {raw.strip()!r}")
        key = key.strip().lower()
        value = value.strip()
        if key == "graph":
            if n is not None:
                raise MalformedInput(f"line {lineno}: duplicate 'graph:' line")
            n = _int(value, lineno)
        elif key == "edge":
            if n is None:
                raise MalformedInput(f"line {lineno}: 'edge:' before 'graph:'")
            parts = value.split()
            if len(parts) != 2:
                raise MalformedInput(f"line {lineno}: edge needs two endpoints")
            edges.append((_int(parts[0], lineno), _int(parts[1], lineno)))
        else:
            if n is None:
                raise MalformedInput(f"line {lineno}: '{key}:' before 'graph:'")
            rest.append((key, value))
    if n is None:
        raise MalformedInput("missing 'graph: <n>' line")
    return build_graph(n, edges), rest


def _int(text: str, lineno: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise MalformedInput(f"line {lineno}: {text!r} is not an integer") from None


def parse_graph(text: str) -> Graph:
    g, rest = parse_graph_lines(text.splitlines())
    if rest:
        raise MalformedInput(f"unexpected key {rest[0][0]!r} in graph file")
    return g


def format_graph(g: Graph) -> str:
    lines = [f"graph: {g.n}"]
    lines += [f"edge: {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"
