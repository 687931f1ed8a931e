"""Word transformations that build representants of derived graphs.

Every operation returns a ConstructionResult whose word has already been
checked against the expected graph; a failed check raises
RepresentationError instead of returning.

Conventions: input words have alphabet 1..n; a new vertex gets id n+1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import graphs as gr
from .graphs import Graph
from .represent import (
    RepresentationError,
    Verdict,
    graph_of_word,
    pair_counts,
    verify,
    with_endpoints,
)
from .words import (
    Word,
    blocks,
    count_pattern11,
    cyclic_shift,
    final_permutation,
    initial_permutation,
    is_permutational,
    is_uniform,
    relabel,
    restrict,
    reverse,
)

@dataclass(frozen=True)
class ConstructionResult:
    word: Word
    expected: Graph
    level: int
    certificate: Verdict
    notes: tuple[str, ...] = field(default=())

def _certify(word: Sequence[int], expected: Graph, level: int, notes: Iterable[str] = ()) -> ConstructionResult:
    word = tuple(word)
    verdict = verify(word, expected, level)
    if not verdict:
        raise RepresentationError(f"construction failed verification:\n{verdict}")
    return ConstructionResult(word, expected, level, verdict, tuple(notes))

def _add_vertex(g: Graph, nbrs: Iterable[int]) -> Graph:
    v = g.n + 1
    return Graph.from_edges(v, list(g.edges) + [(u, v) for u in nbrs])

def _prepend_pi_until(w: Word, letter: int, count: int) -> Word:
    pi = initial_permutation(w)
    while w.count(letter) < count:
        w = pi + w
    return w

def _split_after(w: Word, x: int) -> list[Word]:
    """w = x g1 x g2 ... x gm  ->  [g1, ..., gm]."""
    assert w[0] == x
    parts: list[list[int]] = []
    for a in w:
        if a == x:
            parts.append([])
        else:
            parts[-1].append(a)
    return [tuple(p) for p in parts]

def _split_before(w: Word, y: int) -> list[Word]:
    """w = h1 y h2 y ... hm y  ->  [h1, ..., hm]."""
    assert w[-1] == y
    parts: list[list[int]] = [[]]
    for a in w:
        if a == y:
            parts.append([])
        else:
            parts[-1].append(a)
    return [tuple(p) for p in parts[:-1]]

def _neighbor_set(nbrs: Iterable[int], n: int) -> frozenset[int]:
    s = frozenset(nbrs)
    bad = [u for u in s if not 1 <= u <= n]
    if bad:
        raise ValueError(f"neighbors {sorted(bad)} not in 1..{n}")
    return s

# -- gluing and unions ---------------------------------------------------------

def disjoint_union(parts: Sequence[tuple[Sequence[int], Graph]], k: int) -> ConstructionResult:
    """Concatenate padded representants of the components.

    Part i is shifted by the sizes of the parts before it.
    """
    if not parts:
        raise ValueError("need at least one part")
    word: list[int] = []
    offset = 0
    for w, g in parts:
        w = tuple(w)
        if not verify(w, g, k):
            raise RepresentationError(f"part {offset}: input word does not {k}-11-represent its graph")
        lo = min(w.count(a) for a in set(w))
        if lo < k + 2:
            w = initial_permutation(w) * (k + 2 - lo) + w
        word.extend(a + offset for a in w)
        offset += g.n
    return _certify(word, gr.disjoint_union(*(g for _, g in parts)), k)

def add_pendant(w: Sequence[int], k: int, x: int) -> ConstructionResult:
    """New vertex n+1 adjacent only to x: every other x becomes y x y."""
    w = tuple(w)
    g = graph_of_word(w, k)
    if x not in w:
        raise ValueError(f"vertex {x} not in word")
    y = g.n + 1
    w = _prepend_pi_until(w, x, 2 * k + 2)
    out: list[int] = []
    seen = 0
    for a in w:
        if a == x:
            out.extend((y, x, y) if seen % 2 == 0 else (x,))
            seen += 1
        else:
            out.append(a)
    return _certify(out, _add_vertex(g, [x]), k)

def add_twin(w: Sequence[int], k: int, y: int, adjacent: bool) -> ConstructionResult:
    """New vertex x = n+1 with the neighbourhood of y, adjacent to y or not."""
    w = tuple(w)
    g = graph_of_word(w, k)
    if y not in w:
        raise ValueError(f"vertex {y} not in word")
    x = g.n + 1
    if adjacent:
        out = [b for a in w for b in ((x, y) if a == y else (a,))]
    else:
        w = _prepend_pi_until(w, y, k + 2)
        out = []
        seen = 0
        for a in w:
            if a == y:
                out.extend((x, y) if seen % 2 == 0 else (y, x))
                seen += 1
            else:
                out.append(a)
    nbrs = set(g.neighbors(y)) | ({y} if adjacent else set())
    return _certify(out, _add_vertex(g, nbrs), k)

def _equalize(a: Word, x: int, b: Word, y: int) -> tuple[Word, Word]:
    ca, cb = a.count(x), b.count(y)
    if ca < cb:
        a = initial_permutation(a) * (cb - ca) + a
    elif cb < ca:
        b = initial_permutation(b) * (ca - cb) + b
    return a, b

def glue_at_vertex(w1: Sequence[int], w2: Sequence[int], k: int, x: int, y: int) -> ConstructionResult:
    """Identify x of the first graph with y of the second.

    Output ids: first graph unchanged; second graph's other vertices follow
    as n1+1, n1+2, ... in increasing original order; y becomes x.
    """
    w1, w2 = tuple(w1), tuple(w2)
    g1, g2 = graph_of_word(w1, k), graph_of_word(w2, k)
    if x not in w1 or y not in w2:
        raise ValueError("glue vertices must occur in their words")
    # Normalize the first letter before padding: a word starting with x has
    # an initial permutation starting with x, so padding keeps the start.
    a = with_endpoints(w1, x, w1[-1])
    b = with_endpoints(w2, y, w2[-1])
    a, b = _equalize(a, x, b, y)
    others = [v for v in g2.vertices if v != y]
    ids = {v: g1.n + i for i, v in enumerate(others, start=1)}
    ids[y] = x
    b = relabel(b, ids)
    gs, hs = _split_after(a, x), _split_after(b, x)
    assert len(gs) == len(hs)
    pi1, pi2 = initial_permutation(a)[1:], initial_permutation(b)[1:]
    head = ((x,) + pi1 + pi2 + (x,) + pi2 + pi1) * (k + 1)
    body = tuple(c for gi, hi in zip(gs, hs) for c in (x,) + gi + hi)
    expected = Graph.from_edges(g1.n + g2.n - 1, list(g1.edges) + [(ids[u], ids[v]) for u, v in g2.edges])
    return _certify(head + body, expected, k)

def connect_by_edge(w1: Sequence[int], w2: Sequence[int], k: int, x: int, y: int) -> ConstructionResult:
    """Join x of the first graph to y of the second by a new edge.

    The second graph's vertices are shifted by n1.
    """
    w1, w2 = tuple(w1), tuple(w2)
    g1, g2 = graph_of_word(w1, k), graph_of_word(w2, k)
    if x not in w1 or y not in w2:
        raise ValueError("endpoint vertices must occur in their words")
    a = with_endpoints(w1, x, w1[-1])
    b = with_endpoints(w2, w2[0], y)
    pi = initial_permutation(b)
    if pi[-1] != y:
        cut = pi.index(y)
        front, back = pi[:cut], pi[cut + 1:]
        b = back + front + (y,) + back + b
    a, b = _equalize(a, x, b, y)
    shift = {v: v + g1.n for v in g2.vertices}
    b = relabel(b, shift)
    yy = shift[y]
    gs, hs = _split_after(a, x), _split_before(b, yy)
    assert len(gs) == len(hs)
    pi1, pi2 = initial_permutation(a)[1:], initial_permutation(b)[:-1]
    head = ((x,) + pi1 + pi2 + (yy,) + pi2 + (x, yy) + pi1) * (k + 1)
    body = tuple(c for gi, hi in zip(gs, hs) for c in (x,) + gi + hi + (yy,))
    expected = Graph.from_edges(
        g1.n + g2.n, list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges] + [(x, yy)]
    )
    return _certify(head + body, expected, k)

# -- adding a vertex with a prescribed neighbourhood ---------------------------

def _cone_start(w: Word, nbrs: frozenset[int], v: int) -> tuple[Word, Word]:
    pi = initial_permutation(w)
    start = tuple(a for a in pi if a in nbrs) + (v,) + tuple(a for a in pi if a not in nbrs)
    return pi, start + w

def _alternate_prefix(pi: Word, word: Word, v: int, copies: int) -> Word:
    """Prepend r(pi) v, pi v, r(pi) v, ... until `copies` letters v occur."""
    rpi = reverse(pi)
    use_reverse = True
    while word.count(v) < copies:
        word = (rpi if use_reverse else pi) + (v,) + word
        use_reverse = not use_reverse
    return word

def _ordered_permutation_power(w: Word, nbrs: frozenset[int], copies: int) -> Word:
    """(pi|N pi|N^c)^copies: a uniform word for the complete graph on the
    alphabet of w, with the neighbourhood listed first."""
    pi = initial_permutation(w)
    return (tuple(a for a in pi if a in nbrs) + tuple(a for a in pi if a not in nbrs)) * copies

def add_vertex_from_uniform(w: Sequence[int], nbrs: Iterable[int]) -> ConstructionResult:
    """From a t-uniform 0-11 representant of G, a (t-1)-11 representant of
    G plus a vertex n+1 adjacent exactly to `nbrs`.

    With t = 1 no prefix is prepended and pairs ordered differently in
    pi|N pi|N^c than in w pick up a spurious 11; since a permutation
    represents a complete graph, w is first replaced by pi|N pi|N^c.
    """
    w = tuple(w)
    t = is_uniform(w)
    if t is None:
        raise ValueError("input word is not uniform")
    if t == 0:
        raise ValueError("uniformity must be at least 1")
    g = graph_of_word(w, 0)
    nbrs = _neighbor_set(nbrs, g.n)
    v = g.n + 1
    notes = []
    if t == 1:
        w = _ordered_permutation_power(w, nbrs, 1)
        notes.append("1-uniform input reordered to list the neighbourhood first")
    pi, word = _cone_start(w, nbrs, v)
    word = _alternate_prefix(pi, word, v, t)
    res = _certify(word, _add_vertex(g, nbrs), t - 1, notes)
    counts = pair_counts(res.word, v)
    for u in nbrs:
        if counts[u - 1, v - 1] != t - 1:
            raise RepresentationError(f"cone edge {u}-{v} has count {counts[u - 1, v - 1]}, expected {t - 1}")
    return res

def add_vertex_general(w: Sequence[int], k: int, nbrs: Iterable[int]) -> ConstructionResult:
    """From an m-uniform k-11 representant of G (2m - k - 1 > 0), a
    (3m - k - 1)-uniform (2m - 2)-11 representant of G plus vertex n+1.

    Adjacent {u, v} pairs end with exactly 2m - 2 occurrences, the others
    with exactly 2m. In the boundary case 2m - k - 1 = 1 (no alternating
    prefix) the given word is replaced by (pi|N pi|N^c)^m, which is valid
    because every pair of an m-uniform word has at most 2m - 2 occurrences,
    so G is complete there.
    """
    w = tuple(w)
    m = is_uniform(w)
    if m is None:
        raise ValueError("input word is not uniform")
    if 2 * m - k - 1 <= 0:
        raise ValueError(f"need 2m - k - 1 > 0, got m={m}, k={k}")
    g = graph_of_word(w, k)
    nbrs = _neighbor_set(nbrs, g.n)
    v = g.n + 1
    notes = []
    if 2 * m - k - 1 == 1:
        w = _ordered_permutation_power(w, nbrs, m)
        notes.append("boundary case: input replaced by (pi|N pi|N^c)^m")
    pi, word = _cone_start(w, nbrs, v)
    word = (v,) * m + _alternate_prefix(pi, word, v, 2 * m - k - 1)
    res = _certify(word, _add_vertex(g, nbrs), 2 * m - 2, notes)
    if is_uniform(res.word) != 3 * m - k - 1:
        raise RepresentationError("output is not (3m - k - 1)-uniform")
    counts = pair_counts(res.word, v)
    for u in g.vertices:
        want = 2 * m - 2 if u in nbrs else 2 * m
        if counts[u - 1, v - 1] != want:
            raise RepresentationError(f"pair {u}-{v} has count {counts[u - 1, v - 1]}, expected {want}")
    return res

def grow_parameters(n: int, k: int) -> tuple[int, int]:
    """Uniformity and level reached on n+1 vertices when every n-vertex graph
    is (k+n-3)-uniformly k-11-representable. Requires 2n + k - 7 > 0."""
    if 2 * n + k - 7 <= 0:
        raise ValueError("need 2n + k - 7 > 0")
    m = k + n - 3
    return 3 * m - k - 1, 2 * m - 2

def grow_general(w: Sequence[int], k: int, neighborhoods: Iterable[Iterable[int]]) -> Iterator[ConstructionResult]:
    """Apply add_vertex_general repeatedly; the level of each output feeds
    the next step."""
    level = k
    for nbrs in neighborhoods:
        res = add_vertex_general(w, level, nbrs)
        yield res
        w, level = res.word, res.level

def add_triangle(w: Sequence[int], x: int, y: int) -> ConstructionResult:
    """New vertex z = n+1 adjacent exactly to the edge x y (level 1)."""
    w = tuple(w)
    g = graph_of_word(w, 1)
    if x == y or not g.has_edge(x, y):
        raise ValueError(f"{x} {y} is not an edge at level 1")
    z = g.n + 1
    expected = _add_vertex(g, [x, y])
    if count_pattern11(w, x, y) == 0:
        a = with_endpoints(w, x, y)
        a = _prepend_pi_until(a, x, 2)
        seen = {x: 0, y: 0}
        out: list[int] = []
        for c in a:
            if c == x:
                i = seen[x]
                out.extend((z, x, z) if i == 0 else (x,))
                seen[x] += 1
            elif c == y:
                i = seen[y]
                out.extend((y,) if i == 0 else (z, y, z) if i == 1 else (y, z))
                seen[y] += 1
            else:
                out.append(c)
        return _certify(out, expected, 1, ["x and y alternate"])

    # one 11 occurrence; name the doubled letter y
    sub = restrict(w, {x, y})
    doubled = next(sub[i] for i in range(len(sub) - 1) if sub[i] == sub[i + 1])
    if doubled == x:
        x, y = y, x
    a = with_endpoints(w, x, x)

    def x_before_pair(word: Word) -> int:
        s = restrict(word, {x, y})
        j = next(i for i in range(len(s) - 1) if s[i] == s[i + 1] == y)
        return s[:j].count(x)

    while x_before_pair(a) < 2:
        a = initial_permutation(a) + a
    before = x_before_pair(a)
    out = []
    nx = ny = 0
    pair_seen = False
    for c in a:
        if c == x:
            nx += 1
            if nx == 1:
                out.extend((z, x, z))
            elif nx < before:
                out.extend((x, z))
            elif nx == before:
                out.append(x)
            else:
                out.extend((x, z))
        elif c == y:
            ny += 1
            # x and y alternate up to the yy factor, so its first y is
            # the y numbered `before`
            if not pair_seen and ny == before:
                out.extend((z, y, z))
                pair_seen = True
            else:
                out.append(y)
        else:
            out.append(c)
    return _certify(out, expected, 1, ["one 11 occurrence on {x, y}"])

def add_vertex_from_permutational(w: Sequence[int], nbrs: Iterable[int]) -> ConstructionResult:
    """From a permutational 0-11 representant pi_1 ... pi_t of G, a 1-11
    representant of G plus vertex n+1 adjacent exactly to `nbrs`."""
    w = tuple(w)
    if is_permutational(w) is None:
        raise ValueError("input word is not a concatenation of permutations")
    g = graph_of_word(w, 0)
    nbrs = _neighbor_set(nbrs, g.n)
    v = g.n + 1
    parts = blocks(w)
    pi = parts[0]
    head = reverse(pi) + (v,) + tuple(a for a in pi if a in nbrs) + (v,) + tuple(a for a in pi if a not in nbrs)
    body = list(parts[0])
    for p in parts[1:]:
        body.append(v)
        body.extend(p)
    return _certify(head + tuple(body), _add_vertex(g, nbrs), 1)

# -- removing edges ------------------------------------------------------------

def _uniform_graph(w: Word) -> Graph:
    if is_uniform(w) is None:
        raise ValueError("input word is not uniform")
    return graph_of_word(w, 0)

def remove_edge(w: Sequence[int], x: int, y: int) -> ConstructionResult:
    """1-11 representant y x w w y x of G minus the edge x y."""
    w = tuple(w)
    g = _uniform_graph(w)
    if x == y or not g.has_edge(x, y):
        raise ValueError(f"{x} {y} is not an edge")
    if restrict(w, {x, y})[0] == y:
        x, y = y, x
    expected = Graph(g.n, g.edges - {(min(x, y), max(x, y))})
    return _certify((y, x) + w + w + (y, x), expected, 1)

def remove_clique_edges(w: Sequence[int], clique: Iterable[int]) -> ConstructionResult:
    """1-11 representant p w w q of G minus every edge inside `clique`."""
    w = tuple(w)
    g = _uniform_graph(w)
    K = _neighbor_set(clique, g.n)
    expected = Graph(g.n, frozenset(e for e in g.edges if not (e[0] in K and e[1] in K)))
    if len(K) < 2:
        return _certify(w + w, expected, 1)
    sub = restrict(w, K)
    p, q = reverse(initial_permutation(sub)), reverse(final_permutation(sub))
    return _certify(p + w + w + q, expected, 1)

def remove_star_edges(w: Sequence[int], v: int, nbrs: Iterable[int]) -> ConstructionResult:
    """1-11 representant of G minus the edges from v to `nbrs`.

    After rotating w to start with v and listing N as v_1 ... v_k in
    first-occurrence order, emits v_k ... v_1 v w w v_1 ... v_k v. The
    trailing block runs forward: reversing it too would add a second 11 to
    every adjacent pair inside N and delete that edge as well.
    """
    w = tuple(w)
    g = _uniform_graph(w)
    N = _neighbor_set(nbrs, g.n)
    if v in N:
        raise ValueError("v cannot be its own neighbour")
    bad = N - g.neighbors(v)
    if bad:
        raise ValueError(f"{sorted(bad)} are not neighbours of {v}")
    expected = Graph(g.n, frozenset(e for e in g.edges if not (v in e and (e[0] in N or e[1] in N))))
    if not N:
        return _certify(w + w, expected, 1)
    w = cyclic_shift(w, w.index(v))
    order = initial_permutation(restrict(w, N))
    return _certify(reverse(order) + (v,) + w + w + order + (v,), expected, 1)

def star_word_as_printed(w: Sequence[int], v: int, nbrs: Iterable[int]) -> Word:
    """The unrepaired word v_k ... v_1 v w w v_k ... v_1 v, kept for tests
    that document why remove_star_edges differs from it."""
    w = cyclic_shift(tuple(w), tuple(w).index(v))
    order = initial_permutation(restrict(w, set(nbrs)))
    return reverse(order) + (v,) + w + w + reverse(order) + (v,)
