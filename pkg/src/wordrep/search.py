"""Brute-force search for representants, plus comparability helpers.

The search builds words letter by letter. Pair counts are kept
incrementally: appending a closes an 11 on {a, b} for exactly those b whose
last occurrence precedes the last occurrence of a (unseen b included).

Two enumeration modes:

* canonical: letters make their first appearance in increasing order, so
  each word is enumerated once up to renaming; a complete word is accepted
  if its graph is isomorphic to the target, and the isomorphism is applied
  to produce a word over the target's own labels. Pruning is label-free
  (degree-sequence dominance on the pairs already forced to be non-edges
  and on the pairs that can still become non-edges).
* labeled: letters are target vertices; a prefix is cut as soon as an edge
  pair is bound to end above k (its count already exceeds k, or the copies
  still to come cannot avoid pushing it there) or a non-edge pair can no
  longer reach k+1.

The tree is split into work units by every prefix of a fixed depth. Units
are independent and are merged in prefix order, so the outcome (witness,
status and node count) does not depend on how many workers ran them.
"""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import graphs as gr
from .graphs import Graph
from .represent import RepresentationError, verify
from .universal import represent2
from .words import Word, format_word

UNIT_DEPTH = 4


@dataclass(frozen=True)
class SearchBudget:
    """Search family and limits.

    uniform_only: search t-uniform words for t = 1..max_copies_per_letter.
    permutational_only: search concatenations of t permutations, same t range.
    Otherwise every word using each letter 1..max_copies_per_letter times.
    node_limit None means unlimited. `canonical` and `prune` exist so tests
    can compare against the plain enumeration.
    """

    max_copies_per_letter: int = 3
    uniform_only: bool = True
    permutational_only: bool = False
    node_limit: int | None = 5_000_000
    worker_hint: int = 1
    canonical: bool = True
    prune: bool = True

    def __post_init__(self) -> None:
        if self.max_copies_per_letter < 1:
            raise ValueError("max_copies_per_letter must be positive")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be positive")
        if self.worker_hint < 1:
            raise ValueError("worker_hint must be positive")

    @property
    def family(self) -> str:
        t = self.max_copies_per_letter
        if self.permutational_only:
            return f"permutational(blocks<={t})"
        if self.uniform_only:
            return f"uniform(t<={t})"
        return f"words(copies<={t})"


@dataclass(frozen=True)
class SearchResult:
    word: Word | None
    status: str  # "found", "absent" (none in the family) or "exhausted"
    family: str
    nodes: int
    length_bound: int  # 2n(n - clique), a uniform length enough for k = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


def max_clique_size(g: Graph) -> int:
    best = 1 if g.n else 0
    verts = list(g.vertices)
    for size in range(2, g.n + 1):
        if any(all(g.has_edge(u, v) for u, v in combinations(c, 2)) for c in combinations(verts, size)):
            best = size
        else:
            break
    return best


def length_bound(g: Graph) -> int:
    return 2 * g.n * (g.n - max_clique_size(g))


# -- isomorphism -----------------------------------------------------------------

def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << (u - 1) for u in g.neighbors(v)) for v in g.vertices]


def find_isomorphism(a: Sequence[int], b: Sequence[int]) -> list[int] | None:
    """Map vertices of graph a onto graph b (0-based bitmask adjacency)."""
    n = len(a)
    if n != len(b):
        return None
    deg_a = [bin(x).count("1") for x in a]
    deg_b = [bin(x).count("1") for x in b]
    if sorted(deg_a) != sorted(deg_b):
        return None
    order = sorted(range(n), key=lambda v: -deg_a[v])
    image = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for u in range(n):
            if used >> u & 1 or deg_b[u] != deg_a[v]:
                continue
            ok = True
            for j in range(i):
                w = order[j]
                if (a[v] >> w & 1) != (b[u] >> image[w] & 1):
                    ok = False
                    break
            if ok:
                image[v] = u
                used |= 1 << u
                if extend(i + 1):
                    return True
                used &= ~(1 << u)
        image[v] = -1
        return False

    return image if extend(0) else None


# -- the search engine --------------------------------------------------------------

@dataclass
class _Problem:
    n: int
    k: int
    target: list[int]  # adjacency bitmasks
    copies: int
    mode: str  # "uniform", "perm" or "free"
    canonical: bool
    prune: bool
    nondeg_sorted: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        nondeg = [bin(full & ~self.target[v] & ~(1 << v)).count("1") for v in range(self.n)]
        self.nondeg_sorted = sorted(nondeg, reverse=True)

    @property
    def length(self) -> int:
        return self.n * self.copies


def _add_range(x: int, y: int, last_is_x: bool | None, exact: bool) -> tuple[int, int]:
    """Fewest and most 11s that appending x more copies of one letter and y
    of the other can add to their pair; last_is_x tells which of the two the
    pair's subword currently ends with (None when neither has occurred).
    With exact False copies are optional, so the fewest is 0."""
    if last_is_x is None:
        hi = max(x - 1, 0) + max(y - 1, 0)
        lo = max(0, abs(x - y) - 1)
    else:
        if not last_is_x:
            x, y = y, x
        hi = x + max(y - 1, 0)
        p = x + 1
        lo = max(0, p - y - 1) if p >= y else y - p
    return (lo if exact else 0), hi


class _Budget(Exception):
    pass


class _State:
    """Incremental pair counts for a word under construction.

    For every pair the final count is confined to [count + lo, count + hi]
    given the copies still to come; `must` marks pairs whose lower end is
    already above k (surely non-edges), `can` pairs whose upper end still
    reaches k + 1 (possibly non-edges).
    """

    def __init__(self, prob: _Problem) -> None:
        self.s = prob
        n = prob.n
        self.word: list[int] = []
        self.used = [0] * n
        self.last = [-1] * n
        self.counts = [[0] * n for _ in range(n)]
        self.must = [[False] * n for _ in range(n)]
        self.can = [[False] * n for _ in range(n)]
        self.mdeg = [0] * n
        self.cdeg = [0] * n
        self.intro = 0  # canonical: letters introduced so far
        self.block_mask = 0  # perm mode: letters used in the current block
        self.nodes = 0
        self.limit: int | None = None
        for a in range(n):
            for b in range(a + 1, n):
                self._set_pair(a, b)

    def _bounds(self, a: int, b: int) -> tuple[int, int]:
        s = self.s
        la, lb = self.last[a], self.last[b]
        last_is_a = None if la < 0 and lb < 0 else la > lb
        c = self.counts[a][b]
        lo, hi = _add_range(s.copies - self.used[a], s.copies - self.used[b], last_is_a, s.mode != "free")
        return c + lo, c + hi

    def _set_pair(self, a: int, b: int) -> None:
        lo, hi = self._bounds(a, b)
        k = self.s.k
        m, c = lo > k, hi > k
        if m != self.must[a][b]:
            d = 1 if m else -1
            self.mdeg[a] += d
            self.mdeg[b] += d
            self.must[a][b] = self.must[b][a] = m
        if c != self.can[a][b]:
            d = 1 if c else -1
            self.cdeg[a] += d
            self.cdeg[b] += d
            self.can[a][b] = self.can[b][a] = c

    def choices(self) -> list[int]:
        s = self.s
        n = s.n
        pos = len(self.word)
        if pos >= s.length:
            return []
        cap = s.copies
        if s.mode == "perm" and pos % n == 0:
            self.block_mask = 0
        out = []
        top = self.intro + 1 if s.canonical else n
        for a in range(min(top, n)):
            if self.used[a] >= cap:
                continue
            if s.mode == "perm" and self.block_mask >> a & 1:
                continue
            out.append(a)
        return out

    def push(self, a: int) -> tuple | None:
        """Append letter a; return an undo record, or None if pruned
        (state already restored)."""
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _Budget
        s = self.s
        n = s.n
        counts = self.counts
        la = self.last[a]
        inc = []
        if la >= 0:
            for b in range(n):
                if b != a and self.last[b] < la:
                    inc.append(b)
        for b in inc:
            c = counts[a][b] + 1
            counts[a][b] = c
            counts[b][a] = c
        old_status = [(self.must[a][b], self.can[a][b]) for b in range(n)]
        old_last = la
        self.used[a] += 1
        self.last[a] = len(self.word)
        self.word.append(a)
        old_intro = self.intro
        if a == self.intro:
            self.intro += 1
        old_block = self.block_mask
        if s.mode == "perm":
            self.block_mask |= 1 << a
        for b in range(n):
            if b != a:
                self._set_pair(a, b)
        rec = (a, inc, old_status, old_last, old_intro, old_block)
        if s.prune and not self._feasible(a):
            self.pop(rec)
            return None
        return rec

    def pop(self, rec: tuple) -> None:
        a, inc, old_status, old_last, old_intro, old_block = rec
        counts = self.counts
        n = self.s.n
        self.word.pop()
        self.last[a] = old_last
        self.intro = old_intro
        self.block_mask = old_block
        self.used[a] -= 1
        for b in inc:
            c = counts[a][b] - 1
            counts[a][b] = c
            counts[b][a] = c
        for b in range(n):
            if b == a:
                continue
            m, c = old_status[b]
            if m != self.must[a][b]:
                d = 1 if m else -1
                self.mdeg[a] += d
                self.mdeg[b] += d
                self.must[a][b] = self.must[b][a] = m
            if c != self.can[a][b]:
                d = 1 if c else -1
                self.cdeg[a] += d
                self.cdeg[b] += d
                self.can[a][b] = self.can[b][a] = c

    def _feasible(self, a: int) -> bool:
        s = self.s
        if s.canonical:
            want = s.nondeg_sorted
            for have, w in zip(sorted(self.mdeg, reverse=True), want):
                if have > w:
                    return False
            for have, w in zip(sorted(self.cdeg, reverse=True), want):
                if have < w:
                    return False
            return True
        row = s.target[a]
        must, can = self.must[a], self.can[a]
        for b in range(s.n):
            if b == a:
                continue
            if row >> b & 1:
                if must[b]:
                    return False
            elif not can[b]:
                return False
        return True

    def complete(self) -> bool:
        s = self.s
        if s.mode == "free":
            return self.intro == s.n if s.canonical else all(self.used)
        return len(self.word) == s.length

    def match(self) -> list[int] | None:
        """Letter -> target vertex map (0-based) if the word fits the target."""
        s = self.s
        n, k = s.n, s.k
        if s.mode == "free" and not all(self.used):
            return None
        adj = [0] * n
        for a in range(n):
            row = self.counts[a]
            m = 0
            for b in range(n):
                if b != a and row[b] <= k:
                    m |= 1 << b
            adj[a] = m
        if s.canonical:
            return find_isomorphism(adj, s.target)
        return list(range(n)) if adj == s.target else None


def _dfs(st: _State) -> list[int] | None:
    if st.complete():
        m = st.match()
        if m is not None:
            return m
        if st.s.mode != "free":
            return None
    for a in st.choices():
        rec = st.push(a)
        if rec is None:
            continue
        m = _dfs(st)
        if m is not None:
            return m
        st.pop(rec)
    return None


def _units(prob: _Problem, depth: int) -> tuple[list[tuple[int, ...]], int, list[int] | None, tuple[int, ...]]:
    """Prefixes of length `depth` in DFS order, the nodes spent listing them,
    and a match found at a complete word shorter than `depth`, if any."""
    st = _State(prob)
    out: list[tuple[int, ...]] = []
    found: list = [None, ()]

    def walk() -> bool:
        if st.complete():
            m = st.match()
            if m is not None:
                found[0], found[1] = m, tuple(st.word)
                return True
            if prob.mode != "free":
                return False
        if len(st.word) == depth:
            out.append(tuple(st.word))
            return False
        for a in st.choices():
            rec = st.push(a)
            if rec is None:
                continue
            if walk():
                return True
            st.pop(rec)
        return False

    walk()
    return out, st.nodes, found[0], found[1]


def _run_unit(args: tuple[_Problem, tuple[int, ...], int | None]) -> tuple[list[int] | None, tuple[int, ...], int, bool]:
    prob, prefix, limit = args
    st = _State(prob)
    for a in prefix:
        rec = st.push(a)
        assert rec is not None
    st.nodes = 0
    st.limit = limit
    try:
        m = _dfs(st)
    except _Budget:
        return None, (), limit or 0, True
    return m, tuple(st.word), st.nodes, False


def _search_one(prob: _Problem, node_limit: int | None, workers: int) -> tuple[list[int] | None, tuple[int, ...], str, int]:
    units, nodes, m, word = _units(prob, min(UNIT_DEPTH, prob.length))
    if m is not None:
        return m, word, "found", nodes
    if node_limit is not None and nodes > node_limit:
        return None, (), "exhausted", node_limit
    jobs = ((prob, u, node_limit) for u in units)
    if workers > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results: Iterable = ex.map(_run_unit, jobs, chunksize=max(1, len(units) // (8 * workers)))
            return _merge(results, nodes, node_limit)
    return _merge(map(_run_unit, jobs), nodes, node_limit)


def _merge(results: Iterable, nodes: int, node_limit: int | None) -> tuple[list[int] | None, tuple[int, ...], str, int]:
    for m, word, used, hit_limit in results:
        nodes += used
        if hit_limit or (node_limit is not None and nodes > node_limit):
            return None, (), "exhausted", node_limit or nodes
        if m is not None:
            return m, word, "found", nodes
    return None, (), "absent", nodes


def find_representant(g: Graph, k: int, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Look for a word k-11-representing g inside the budget's family."""
    if k < 0:
        raise ValueError("level must be non-negative")
    if g.n < 1:
        raise ValueError("graph must have a vertex")
    target = _adj_masks(g)
    mode = "perm" if budget.permutational_only else "uniform" if budget.uniform_only else "free"
    copy_range = range(1, budget.max_copies_per_letter + 1) if mode != "free" else [budget.max_copies_per_letter]
    total = 0
    bound = length_bound(g)
    for t in copy_range:
        prob = _Problem(g.n, k, target, t, mode, budget.canonical, budget.prune)
        remaining = None if budget.node_limit is None else budget.node_limit - total
        m, pattern, status, used = _search_one(prob, remaining, budget.worker_hint)
        total += used
        if status == "found":
            word = tuple(m[a] + 1 for a in pattern)
            if not verify(word, g, k):
                raise RepresentationError("search produced a word that fails verification")
            return SearchResult(word, "found", budget.family, total, bound)
        if status == "exhausted":
            return SearchResult(None, "exhausted", budget.family, budget.node_limit or total, bound)
    return SearchResult(None, "absent", budget.family, total, bound)


def is_circle_graph(g: Graph, cap: int = 8, node_limit: int | None = None) -> bool:
    """Exhaustive decision over 2-uniform words (chord diagrams)."""
    if g.n > cap:
        raise ValueError(f"graph has {g.n} vertices, above the cap {cap}")
    res = find_representant(g, 0, SearchBudget(max_copies_per_letter=2, uniform_only=True, node_limit=node_limit))
    if res.status == "exhausted":
        raise RuntimeError("node limit reached before a verdict")
    return res.found


# -- minimal level and census -----------------------------------------------------------

@dataclass(frozen=True)
class LevelResult:
    k: int
    word: Word
    qualifier: str  # "=" exact, "≤" an upper bound only
    family: str
    nodes: int
    searches: tuple[SearchResult, ...] = ()


def complete_for_level0(g: Graph, b: SearchBudget) -> bool:
    """Whether exhausting the budget's family settles 0-11-representability:
    uniform words with up to 2(n - clique) copies suffice."""
    if b.permutational_only:
        return False
    return b.max_copies_per_letter >= 2 * (g.n - max_clique_size(g))


def min_level(g: Graph, b: SearchBudget = SearchBudget(), max_level: int = 2) -> LevelResult | None:
    """Smallest level with a witness, searching levels 0 and 1 and falling
    back to the universal permutational construction at level 2.

    Returns None when max_level < 2 and nothing was found up to it.
    """
    return _min_level(g, b, max_level)[0]


def _min_level(g: Graph, b: SearchBudget, max_level: int) -> tuple[LevelResult | None, list[SearchResult]]:
    if g.n < 2:
        raise ValueError("need at least two vertices")
    if max_level < 0:
        raise ValueError("max_level must be non-negative")
    if gr.is_complete(g):
        return LevelResult(0, tuple(g.vertices), "=", "permutation", 0), []
    searches: list[SearchResult] = []
    nodes = 0
    for k in range(min(max_level, 1) + 1):
        res = find_representant(g, k, b)
        searches.append(res)
        nodes += res.nodes
        if res.found:
            exact = k == 0 or (searches[0].status == "absent" and complete_for_level0(g, b))
            return LevelResult(k, res.word, "=" if exact else "≤", res.family, nodes, tuple(searches)), searches
    if max_level < 2:
        return None, searches
    pw = represent2(g)
    return LevelResult(2, pw.word, "≤", "universal-permutational", nodes, tuple(searches)), searches


CENSUS_FIELDS = ("graph6", "n", "k_claimed", "qualifier", "witness_word", "family", "nodes_expanded")


def census_rows(
    n: int,
    k: int,
    b: SearchBudget = SearchBudget(),
    graphs: Iterable[Graph] | None = None,
    universal_only: bool = False,
) -> Iterator[dict[str, str]]:
    """One row per graph (all labeled graphs on n vertices by default).

    When nothing is found up to level k the row reports k_claimed = k with
    qualifier ">" if every searched family was exhausted without a witness,
    or "?" if the node limit stopped the search.
    """
    if graphs is None:
        if n > 7:
            raise ValueError("census enumerates labeled graphs only up to n = 7")
        graphs = gr.all_labeled_graphs(n)
    for g in graphs:
        row = {"graph6": gr.serialize_graph6(g), "n": str(g.n)}
        if universal_only:
            if k < 2:
                raise ValueError("the universal construction needs k >= 2")
            pw = represent2(g)
            row.update(k_claimed="2", qualifier="≤", witness_word=format_word(pw.word), family="universal-permutational", nodes_expanded="0")
        else:
            res, searches = _min_level(g, b, k)
            if res is None:
                q = "?" if any(s.status == "exhausted" for s in searches) else ">"
                row.update(k_claimed=str(k), qualifier=q, witness_word="", family=b.family, nodes_expanded=str(sum(s.nodes for s in searches)))
            else:
                row.update(k_claimed=str(res.k), qualifier=res.qualifier, witness_word=format_word(res.word), family=res.family, nodes_expanded=str(res.nodes))
        yield row


def census_csv(rows: Iterable[dict[str, str]]) -> str:
    buf = io.StringIO()
    wr = csv.DictWriter(buf, fieldnames=CENSUS_FIELDS, lineterminator="\n")
    wr.writeheader()
    for row in rows:
        wr.writerow(row)
    return buf.getvalue()


# -- comparability graphs -------------------------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    """Arcs (u, v) meaning u -> v; every edge of the graph exactly once."""

    arcs: frozenset[tuple[int, int]]

    def is_transitive(self) -> bool:
        succ: dict[int, set[int]] = {}
        for u, v in self.arcs:
            succ.setdefault(u, set()).add(v)
        return all(w in succ.get(u, ()) for u, vs in succ.items() for v in vs for w in succ.get(v, ()))


def transitive_orientation(g: Graph, cap: int = 12) -> Orientation | None:
    """Backtracking over edge directions with forced-direction propagation."""
    if g.n > cap:
        raise ValueError(f"graph has {g.n} vertices, above the cap {cap}")
    edges = sorted(g.edges)
    direction: dict[tuple[int, int], bool] = {}  # (u<v) -> True means u -> v

    def arc(u: int, v: int) -> bool | None:
        """True if u -> v, False if v -> u, None if unset."""
        if u < v:
            return direction.get((u, v))
        d = direction.get((v, u))
        return None if d is None else not d

    def setarc(u: int, v: int, trail: list) -> bool:
        cur = arc(u, v)
        if cur is not None:
            return cur
        key = (u, v) if u < v else (v, u)
        direction[key] = u < v
        trail.append(key)
        return True

    def propagate(queue: list[tuple[int, int]], trail: list) -> bool:
        while queue:
            u, v = queue.pop()  # u -> v
            for w in g.vertices:
                if w in (u, v):
                    continue
                # v -> w needs u - w to be an arc u -> w
                if g.has_edge(v, w) and arc(v, w) is True:
                    if not g.has_edge(u, w) or arc(u, w) is False:
                        return False
                    if arc(u, w) is None:
                        setarc(u, w, trail)
                        queue.append((u, w))
                # w -> u needs w -> v
                if g.has_edge(w, u) and arc(w, u) is True:
                    if not g.has_edge(w, v) or arc(w, v) is False:
                        return False
                    if arc(w, v) is None:
                        setarc(w, v, trail)
                        queue.append((w, v))
                # v - w unset with u, w non-adjacent: v -> w would force u - w
                if g.has_edge(v, w) and not g.has_edge(u, w) and arc(v, w) is None:
                    setarc(w, v, trail)
                    queue.append((w, v))
                # w - u unset with w, v non-adjacent: w -> u would force w - v
                if g.has_edge(w, u) and not g.has_edge(w, v) and arc(w, u) is None:
                    setarc(u, w, trail)
                    queue.append((u, w))
        return True

    def solve(i: int) -> bool:
        while i < len(edges) and edges[i] in direction:
            i += 1
        if i == len(edges):
            return True
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            trail: list = []
            setarc(a, b, trail)
            if propagate([(a, b)], trail) and solve(i + 1):
                return True
            for key in trail:
                del direction[key]
        return False

    if not solve(0):
        return None
    arcs = frozenset((u, v) if d else (v, u) for (u, v), d in direction.items())
    o = Orientation(arcs)
    assert o.is_transitive()
    return o


def _linear_extensions(n: int, below: list[int], limit: int) -> Iterator[tuple[int, ...]]:
    """Linear extensions of a poset on 1..n given by predecessor masks."""
    count = 0
    out: list[int] = []

    def rec(placed: int) -> Iterator[tuple[int, ...]]:
        nonlocal count
        if len(out) == n:
            count += 1
            yield tuple(out)
            return
        for v in range(1, n + 1):
            bit = 1 << v
            if placed & bit or below[v] & ~placed:
                continue
            out.append(v)
            yield from rec(placed | bit)
            out.pop()
            if count >= limit:
                return

    yield from rec(0)


def _gain(p: tuple[int, ...], missing: set[tuple[int, int]]) -> int:
    rank = {v: i for i, v in enumerate(p)}
    return sum(rank[a] < rank[b] for a, b in missing)


def permutational_representant(g: Graph, max_extensions: int = 50_000) -> Word:
    """Concatenated linear extensions of a transitive orientation in which
    every incomparable pair appears in both orders.

    Each round takes the extension covering the most still-missing ordered
    pairs; if the extension space is too large to list, a pair-driven
    extension (the down-set of a first) is used instead.
    """
    o = transitive_orientation(g)
    if o is None:
        raise ValueError("graph is not a comparability graph")
    n = g.n
    below = [0] * (n + 1)
    for u, v in o.arcs:
        below[v] |= 1 << u
    missing = {(a, b) for a, b in g.non_edges()} | {(b, a) for a, b in g.non_edges()}
    exts = list(_linear_extensions(n, below, max_extensions))
    enumerable = len(exts) < max_extensions
    chosen: list[tuple[int, ...]] = []
    while missing or not chosen:
        if enumerable:
            best = max(exts, key=lambda p, todo=missing: _gain(p, todo))
        else:
            a, b = min(missing) if missing else (1, 1)
            best = _extension_with_first(n, below, a)
        chosen.append(best)
        rank = {v: i for i, v in enumerate(best)}
        missing = {(a, b) for a, b in missing if rank[a] > rank[b]}
    word = tuple(a for p in chosen for a in p)
    if not verify(word, g, 0):
        raise RepresentationError("linear extensions do not represent the graph")
    return word


def _extension_with_first(n: int, below: list[int], a: int) -> tuple[int, ...]:
    down = {a}
    stack = [a]
    while stack:
        v = stack.pop()
        for u in range(1, n + 1):
            if below[v] >> u & 1 and u not in down:
                down.add(u)
                stack.append(u)
    order: list[int] = []
    placed = 0
    for group in (sorted(down), [v for v in range(1, n + 1) if v not in down]):
        pending = list(group)
        while pending:
            for v in pending:
                if not below[v] & ~placed:
                    order.append(v)
                    placed |= 1 << v
                    pending.remove(v)
                    break
    return tuple(order)
