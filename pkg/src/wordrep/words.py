"""Word primitives.

A word is a tuple of positive integer letters. Every function here accepts
any sequence of ints and returns a plain tuple, so results are hashable and
safe to share.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

Word = tuple[int, ...]

BLOCK_SEPARATOR = "/"


def as_word(letters: Iterable[int]) -> Word:
    w = tuple(int(a) for a in letters)
    for a in w:
        if a < 1:
            raise ValueError(f"letters must be positive integers, got {a}")
    return w


def parse_word(text: str) -> Word:
    """Parse whitespace-separated positive integers; '/' tokens are skipped."""
    tokens = [t for t in text.replace(BLOCK_SEPARATOR, f" {BLOCK_SEPARATOR} ").split()]
    letters = []
    for tok in tokens:
        if tok == BLOCK_SEPARATOR:
            continue
        if not tok.isdigit():
            raise ValueError(f"bad word token {tok!r}")
        letters.append(int(tok))
    return as_word(letters)


def format_word(w: Sequence[int], block: int | None = None) -> str:
    """Serialize `w`; with `block`, insert '/' every `block` letters."""
    if not block:
        return " ".join(str(a) for a in w)
    chunks = [" ".join(str(a) for a in w[i:i + block]) for i in range(0, len(w), block)]
    return f" {BLOCK_SEPARATOR} ".join(chunks)


def alphabet(w: Sequence[int]) -> frozenset[int]:
    return frozenset(w)


def restrict(w: Sequence[int], letters: Iterable[int]) -> Word:
    keep = set(letters)
    return tuple(a for a in w if a in keep)


def initial_permutation(w: Sequence[int]) -> Word:
    if not w:
        raise ValueError("initial permutation of the empty word")
    return tuple(dict.fromkeys(w))


def final_permutation(w: Sequence[int]) -> Word:
    if not w:
        raise ValueError("final permutation of the empty word")
    return tuple(reversed(dict.fromkeys(reversed(w))))


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def count_pattern11(w: Sequence[int], x: int, y: int) -> int:
    """Adjacent equal pairs in the subword induced by {x, y} ("xxx" counts 2)."""
    if x == y:
        raise ValueError("count_pattern11 needs two distinct letters")
    count = 0
    prev = None
    for a in w:
        if a == x or a == y:
            if a == prev:
                count += 1
            prev = a
    return count


def multiplicities(w: Sequence[int]) -> Counter:
    return Counter(w)


def is_uniform(w: Sequence[int]) -> int | None:
    """Return t if every letter of `w` occurs exactly t times, else None."""
    if not w:
        raise ValueError("uniformity of the empty word")
    counts = set(Counter(w).values())
    return counts.pop() if len(counts) == 1 else None


def cyclic_shift(w: Sequence[int], split: int) -> Word:
    if not 0 <= split <= len(w):
        raise IndexError(f"split {split} out of range for word of length {len(w)}")
    return tuple(w[split:]) + tuple(w[:split])


def is_permutational(w: Sequence[int]) -> int | None:
    """Number of consecutive blocks when `w` is a concatenation of
    permutations of its alphabet, else None."""
    if not w:
        raise ValueError("empty word")
    sigma = set(w)
    n = len(sigma)
    if len(w) % n:
        return None
    for i in range(0, len(w), n):
        if len(set(w[i:i + n])) != n:
            return None
    return len(w) // n


def blocks(w: Sequence[int]) -> list[Word]:
    """Split a permutational word into its permutation blocks."""
    t = is_permutational(w)
    if t is None:
        raise ValueError("word is not a concatenation of permutations")
    n = len(w) // t
    return [tuple(w[i:i + n]) for i in range(0, len(w), n)]


def relabel(w: Sequence[int], mapping: dict[int, int]) -> Word:
    return tuple(mapping[a] for a in w)


def compact(w: Sequence[int]) -> tuple[Word, dict[int, int]]:
    """Relabel the alphabet of `w` onto 1..n in increasing order.

    Returns the relabeled word and the map new id -> old id.
    """
    old = sorted(set(w))
    fwd = {a: i for i, a in enumerate(old, start=1)}
    return relabel(w, fwd), {i: a for a, i in fwd.items()}
