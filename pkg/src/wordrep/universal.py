"""Permutational 2-11-representants for arbitrary graphs.

Both builders add one vertex at a time. Given blocks P_1 ... P_f of the
smaller graph and, for each old vertex j, the lowest-index block k_j that
starts with j, every block is rewritten as

    j n Q_j                   if it is k_j and n ~ j
    j n Q_j  n j Q_j  j n Q_j if it is k_j and n !~ j
    n P_i                     otherwise

When every block is some k_j and n is adjacent to all old vertices, no
block would start with n; the last block is then duplicated first (a
repeated block never changes the represented graph) and the copy becomes
n P_i.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import graphs as gr
from .graphs import Graph
from .represent import RepresentationError, verify
from .words import Word, format_word


@dataclass(frozen=True)
class PermutationalWord:
    blocks: tuple[Word, ...]
    heads: dict[int, int] = field(default_factory=dict, compare=False)
    duplications: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("need at least one block")
        letters = set(self.blocks[0])
        for b in self.blocks:
            if len(b) != len(letters) or set(b) != letters:
                raise ValueError(f"block {b} is not a permutation of {sorted(letters)}")
        if not self.heads:
            heads: dict[int, int] = {}
            for i, b in enumerate(self.blocks):
                heads.setdefault(b[0], i)
            object.__setattr__(self, "heads", heads)

    @property
    def word(self) -> Word:
        return tuple(a for b in self.blocks for a in b)

    @property
    def letters(self) -> frozenset[int]:
        return frozenset(self.blocks[0])

    def condition_b(self) -> bool:
        """Every vertex starts at least one block."""
        return set(self.heads) == set(self.letters)

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return format_word(self.word, block=len(self.blocks[0]))


def duplicate_block(pw: PermutationalWord, i: int) -> PermutationalWord:
    if not 0 <= i < len(pw.blocks):
        raise IndexError(f"block index {i} out of range")
    bl = pw.blocks[: i + 1] + pw.blocks[i:]
    return PermutationalWord(bl, duplications=pw.duplications + 1)


def f_general(n: int) -> int:
    return n * n - n + 2


def f_connected(n: int) -> int:
    return n * n - 3 * n + 4


def _add_vertex(pw: PermutationalWord, new: int, nbrs: frozenset[int]) -> PermutationalWord:
    old = pw.letters
    dup = pw.duplications
    if len(pw.blocks) <= len(old) and nbrs >= old:
        pw = duplicate_block(pw, len(pw.blocks) - 1)
        dup = pw.duplications
    chosen = {idx: j for j, idx in pw.heads.items()}
    out: list[Word] = []
    for i, p in enumerate(pw.blocks):
        j = chosen.get(i)
        if j is None:
            out.append((new,) + p)
        elif j in nbrs:
            out.append((j, new) + p[1:])
        else:
            out.extend([(j, new) + p[1:], (new, j) + p[1:], (j, new) + p[1:]])
    return PermutationalWord(tuple(out), duplications=dup)


def _base(g: Graph, a: int, b: int, connected: bool) -> PermutationalWord:
    if connected:
        return PermutationalWord(((a, b), (b, a)))
    last = (a, b) if g.has_edge(a, b) else (b, a)
    return PermutationalWord(((a, b), (b, a), (a, b), last))


def _check(pw: PermutationalWord, g: Graph, bound: int) -> PermutationalWord:
    verdict = verify(pw.word, g, 2)
    if not verdict:
        raise RepresentationError(f"universal construction failed:\n{verdict}")
    if not pw.condition_b():
        raise RepresentationError("some vertex starts no block")
    if len(pw) > bound:
        raise RepresentationError(f"{len(pw)} blocks exceed the bound {bound}")
    return pw


def _pad(pw: PermutationalWord, target: int) -> PermutationalWord:
    while len(pw) < target:
        pw = duplicate_block(pw, len(pw) - 1)
    return pw


def represent2(g: Graph, exact_blocks: bool = False) -> PermutationalWord:
    """Permutational 2-11-representant with at most n^2 - n + 2 blocks,
    adding vertices 3, 4, ..., n in order."""
    if g.n < 2:
        raise ValueError("need at least two vertices")
    pw = _base(g, 1, 2, connected=False)
    for v in range(3, g.n + 1):
        pw = _add_vertex(pw, v, frozenset(u for u in g.neighbors(v) if u < v))
    if exact_blocks:
        pw = _pad(pw, f_general(g.n))
    return _check(pw, g, f_general(g.n))


def elimination_order(g: Graph) -> list[int]:
    """Vertices of a connected graph in the order they are added back.

    Repeatedly strips the smallest-id non-cut vertex of positive degree;
    the last two vertices standing form the starting edge.
    """
    if not gr.is_connected(g):
        raise ValueError("graph is not connected")
    alive = set(g.vertices)
    removed: list[int] = []
    while len(alive) > 2:
        sub, ids = gr.induced(g, alive)
        cands = [ids[v] for v in gr.non_cut_vertices(sub) if sub.degree(v) > 0]
        v = min(cands)
        removed.append(v)
        alive.discard(v)
    return sorted(alive) + removed[::-1]


def represent2_connected(g: Graph, exact_blocks: bool = False) -> PermutationalWord:
    """Permutational 2-11-representant of a connected graph with at most
    n^2 - 3n + 4 blocks, starting from an edge written as 12 21."""
    if g.n < 2:
        raise ValueError("need at least two vertices")
    order = elimination_order(g)
    a, b = order[0], order[1]
    pw = _base(g, a, b, connected=True)
    placed = {a, b}
    for v in order[2:]:
        pw = _add_vertex(pw, v, frozenset(g.neighbors(v) & placed))
        placed.add(v)
    if exact_blocks:
        pw = _pad(pw, f_connected(g.n))
    return _check(pw, g, f_connected(g.n))


def block_recurrence(g: Graph, order: Sequence[int] | None = None) -> list[tuple[int, int, int]]:
    """(non-neighbours among earlier vertices, duplications, blocks) after
    each insertion of represent2; used to audit the block-count growth."""
    pw = _base(g, 1, 2, connected=False)
    rows = []
    for v in range(3, g.n + 1):
        earlier = frozenset(u for u in g.neighbors(v) if u < v)
        before = pw.duplications
        pw = _add_vertex(pw, v, earlier)
        rows.append((v - 1 - len(earlier), pw.duplications - before, len(pw)))
    return rows
