"""Simple labeled graphs on the vertex set 1..n."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with vertices 1..n.

    `edges` holds pairs (u, v) with u < v. Equality is labeled equality.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    _adj: tuple[frozenset[int], ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            norm.add(_pair(u, v))
        object.__setattr__(self, "edges", frozenset(norm))
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(_pair(u, v) for u, v in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def non_edges(self) -> list[tuple[int, int]]:
        return [p for p in combinations(self.vertices, 2) if p not in self.edges]

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} not in 1..{self.n}")

    def __str__(self) -> str:
        es = " ".join(f"{u}-{v}" for u, v in sorted(self.edges))
        return f"Graph(n={self.n}: {es})"


# -- generators --------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph(n)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def wheel(rim: int) -> Graph:
    """Rim cycle 1-2-...-rim plus hub rim+1 adjacent to every rim vertex."""
    if rim < 3:
        raise ValueError("wheel needs a rim of at least 3 vertices")
    hub = rim + 1
    edges = list(cycle(rim).edges) + [(i, hub) for i in range(1, rim + 1)]
    return Graph.from_edges(hub, edges)


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(g.non_edges()))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on 1..n, ordered by the bitmask over pairs."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


# -- structure ---------------------------------------------------------------

def induced(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by `keep`, relabeled to 1..|keep| in increasing order.

    Returns the subgraph and the map new id -> original id.
    """
    old = sorted(set(keep))
    for v in old:
        g._check(v)
    fwd = {v: i for i, v in enumerate(old, start=1)}
    edges = [(fwd[u], fwd[v]) for u, v in g.edges if u in fwd and v in fwd]
    return Graph.from_edges(len(old), edges), {i: v for v, i in fwd.items()}


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    g._check(v)
    return induced(g, (u for u in g.vertices if u != v))


def relabel(g: Graph, mapping: dict[int, int], n: int | None = None) -> Graph:
    """Rename vertices through `mapping` (old -> new) into a graph on 1..n."""
    return Graph.from_edges(n if n is not None else g.n, ((mapping[u], mapping[v]) for u, v in g.edges))


def disjoint_union(*parts: Graph) -> Graph:
    """Place the parts side by side; part i is shifted by the sizes before it."""
    edges = []
    offset = 0
    for g in parts:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


def components(g: Graph) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        stack = [s]
        comp = {s}
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def non_cut_vertices(g: Graph) -> set[int]:
    """Vertices whose removal leaves a connected graph."""
    return {v for v in g.vertices if is_connected(delete_vertex(g, v)[0])}


def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


# -- text formats ------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d < 64 for d in data):
        raise ValueError("graph6 characters must lie in '?'..'~'")
    n = data[0]
    if n == 63:
        raise ValueError("only the short graph6 form (n <= 62) is supported")
    nbits = n * (n - 1) // 2
    payload = data[1:]
    if len(payload) != (nbits + 5) // 6:
        raise ValueError(f"graph6 payload has {len(payload)} bytes, expected {(nbits + 5) // 6}")
    bits = [(d >> (5 - i)) & 1 for d in payload for i in range(6)]
    if any(bits[nbits:]):
        raise ValueError("nonzero graph6 padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i + 1, j + 1))
            k += 1
    return Graph.from_edges(n, edges)


def serialize_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("only the short graph6 form (n <= 62) is supported")
    bits = [int(g.has_edge(i + 1, j + 1)) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edgelist(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.strip().splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge {u} {v} out of range for n={n}")
        p = _pair(u, v)
        if p in edges:
            raise ValueError(f"duplicate edge {u} {v}")
        edges.add(p)
    return Graph(n, frozenset(edges))


def serialize_edgelist(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in sorted(g.edges)]) + "\n"


def parse_graph(text: str) -> Graph:
    """Edge list if the first non-blank byte is a digit, else graph6."""
    s = text.lstrip()
    if s[:1].isdigit():
        return parse_edgelist(s)
    return parse_graph6(s)
