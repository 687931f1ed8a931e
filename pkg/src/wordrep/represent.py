"""The graph a word defines at level k, verification, and level-shifting moves.

Letters x, y are adjacent at level k when the subword induced by {x, y}
has at most k adjacent equal pairs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .graphs import Graph
from .words import (
    Word,
    final_permutation,
    initial_permutation,
    multiplicities,
    reverse,
)


class RepresentationError(RuntimeError):
    """A construction produced a word that does not represent its target."""


def pair_counts(w: Sequence[int], n: int | None = None) -> np.ndarray:
    """Symmetric matrix of pattern-11 counts, indexed by letter - 1.

    Entry [a-1, b-1] is the number of adjacent equal pairs in the subword
    induced by {a, b}. Runs in a handful of vectorized passes: an occurrence
    of a closes an 11 for b exactly when no b lies since the previous a.
    """
    arr = np.asarray(w, dtype=np.intp) - 1
    if arr.size == 0:
        return np.zeros((n or 0, n or 0), dtype=np.int64)
    if n is None:
        n = int(arr.max()) + 1
    length = arr.size
    onehot = np.zeros((n, length), dtype=np.int64)
    onehot[arr, np.arange(length)] = 1
    prefix = np.zeros((n, length + 1), dtype=np.int64)
    np.cumsum(onehot, axis=1, out=prefix[:, 1:])

    order = np.argsort(arr, kind="stable")
    same = arr[order[1:]] == arr[order[:-1]]
    closing = order[1:][same]
    opening = order[:-1][same]
    between = prefix[:, closing] - prefix[:, opening + 1]
    half = onehot[:, closing] @ (between == 0).T.astype(np.int64)
    np.fill_diagonal(half, 0)
    return half + half.T


def _check_alphabet(w: Sequence[int]) -> int:
    if not w:
        raise ValueError("a representant must be nonempty")
    letters = set(w)
    n = len(letters)
    if letters != set(range(1, n + 1)):
        raise ValueError(f"alphabet must be 1..{n}, got {sorted(letters)}")
    return n


def _graph_from_counts(counts: np.ndarray, k: int) -> Graph:
    n = counts.shape[0]
    iu, ju = np.nonzero(np.triu(counts <= k, 1))
    return Graph(n, frozenset(zip((iu + 1).tolist(), (ju + 1).tolist())))


def graph_of_word(w: Sequence[int], k: int) -> Graph:
    n = _check_alphabet(w)
    return _graph_from_counts(pair_counts(w, n), k)


@dataclass(frozen=True)
class ReprClaim:
    """A word together with the level it is read at."""

    word: Word
    level: int
    counts: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError("level must be non-negative")
        n = _check_alphabet(self.word)
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "counts", pair_counts(self.word, n))

    @cached_property
    def graph(self) -> Graph:
        return _graph_from_counts(self.counts, self.level)

    def count(self, x: int, y: int) -> int:
        if x == y:
            raise ValueError("need two distinct letters")
        return int(self.counts[x - 1, y - 1])

    @property
    def uniformity(self) -> int | None:
        vals = set(multiplicities(self.word).values())
        return vals.pop() if len(vals) == 1 else None


@dataclass(frozen=True)
class Violation:
    pair: tuple[int, int]
    count: int
    expected_edge: bool

    def __str__(self) -> str:
        want = "edge" if self.expected_edge else "non-edge"
        return f"{self.pair[0]} {self.pair[1]}: count {self.count}, expected {want}"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    level: int
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "PASS"
        return "FAIL\n" + "\n".join(str(v) for v in self.violations)


def verify(w: Sequence[int], g: Graph, k: int) -> Verdict:
    """Check that `w` k-11-represents `g`; on failure list every bad pair."""
    n = _check_alphabet(w)
    if n != g.n:
        raise ValueError(f"word alphabet has {n} letters but graph has {g.n} vertices")
    counts = pair_counts(w, n)
    bad = []
    iu, ju = np.triu_indices(n, 1)
    got = counts[iu, ju] <= k
    want = np.array([g.has_edge(i + 1, j + 1) for i, j in zip(iu.tolist(), ju.tolist())], dtype=bool)
    for idx in np.nonzero(got != want)[0].tolist():
        i, j = int(iu[idx]) + 1, int(ju[idx]) + 1
        bad.append(Violation((i, j), int(counts[i - 1, j - 1]), bool(want[idx])))
    return Verdict(not bad, k, tuple(bad))


def extend_level(w: Sequence[int], side: str = "left") -> Word:
    """Add exactly one 11 occurrence to every pair (level k -> k+1).

    left: r(pi(w)) w; right: w r(sigma(w)).
    """
    if not w:
        raise ValueError("empty word")
    if side == "left":
        return reverse(initial_permutation(w)) + tuple(w)
    if side == "right":
        return tuple(w) + reverse(final_permutation(w))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def double(w: Sequence[int]) -> Word:
    if not w:
        raise ValueError("empty word")
    return tuple(w) + tuple(w)


def pad_occurrences(w: Sequence[int], min_count: int, letter: int | None = None) -> Word:
    """Prepend copies of the initial permutation until every letter (or just
    `letter`) occurs at least `min_count` times. Pair counts are unchanged."""
    if not w:
        raise ValueError("empty word")
    mult = multiplicities(w)
    have = mult[letter] if letter is not None else min(mult.values())
    if letter is not None and have == 0:
        raise ValueError(f"letter {letter} not in word")
    reps = max(0, min_count - have)
    return initial_permutation(w) * reps + tuple(w)


def with_endpoints(w: Sequence[int], i: int, j: int) -> Word:
    """Equivalent word starting with `i` and ending with `j`.

    Built as pi(w) w sigma(w) with everything left of the leftmost i and
    right of the rightmost j removed. Every pair count is re-checked.
    """
    if not w:
        raise ValueError("empty word")
    if i not in w or j not in w:
        raise ValueError(f"letters {i}, {j} must occur in the word")
    pi = initial_permutation(w)
    sigma = final_permutation(w)
    out = pi[pi.index(i):] + tuple(w) + sigma[:sigma.index(j) + 1]
    n = max(w)
    if not np.array_equal(pair_counts(out, n), pair_counts(w, n)):
        raise RepresentationError("endpoint normalization changed a pair count")
    return out
