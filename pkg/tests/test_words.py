from __future__ import annotations

from itertools import groupby

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import digits, uniform_words, words
from wordrep.words import (
    alphabet,
    compact,
    count_pattern11,
    cyclic_shift,
    final_permutation,
    format_word,
    initial_permutation,
    is_permutational,
    is_uniform,
    multiplicities,
    parse_word,
    relabel,
    restrict,
    reverse,
)

W = digits("2535214421")


def runs_oracle(w, x, y) -> int:
    sub = [a for a in w if a in (x, y)]
    return len(sub) - len([k for k, _ in groupby(sub)])


def test_permutations_of_sample_word():
    assert initial_permutation(W) == (2, 5, 3, 1, 4)
    assert final_permutation(W) == (3, 5, 4, 2, 1)
    assert initial_permutation(digits("1122")) == (1, 2)
    assert final_permutation(digits("1122")) == (1, 2)


def test_reverse_and_restrict():
    assert reverse(digits("22431")) == digits("13422")
    assert restrict(W, {2, 5}) == digits("25522")


def test_counts():
    assert count_pattern11(W, 2, 5) == 2
    assert count_pattern11(digits("14213243"), 2, 4) == 1
    assert count_pattern11((1, 1, 1), 1, 2) == 2
    assert count_pattern11((1, 2) * 5, 1, 2) == 0
    with pytest.raises(ValueError):
        count_pattern11(W, 3, 3)


def test_uniform_and_permutational():
    assert is_uniform(digits("1521324354")) == 2
    assert is_uniform((1, 2, 1)) is None
    assert is_uniform(digits("123123123")) == 3
    assert is_permutational(digits("12 21 12 12")) == 4
    assert is_permutational((3, 1, 2)) == 1
    assert is_permutational(digits("1121")) is None


def test_cyclic_shift():
    assert cyclic_shift((1, 2, 3, 1, 2, 3), 1) == (2, 3, 1, 2, 3, 1)
    assert cyclic_shift(W, 0) == W
    assert cyclic_shift(W, len(W)) == W
    with pytest.raises(IndexError):
        cyclic_shift(W, len(W) + 1)


def test_parse_and_format():
    assert parse_word("1 2 / 2 1") == (1, 2, 2, 1)
    assert parse_word("10 11 10") == (10, 11, 10)
    assert format_word((1, 2, 2, 1), block=2) == "1 2 / 2 1"
    for bad in ("1 x 2", "1 -2", "0 1"):
        with pytest.raises(ValueError):
            parse_word(bad)


def test_empty_initial_permutation_rejected():
    with pytest.raises(ValueError):
        initial_permutation(())
    assert restrict((1, 2), {3}) == ()


def test_compact_and_relabel():
    w, back = compact((7, 3, 7, 9))
    assert sorted(set(w)) == [1, 2, 3]
    assert relabel(w, back) == (7, 3, 7, 9)


@given(words(), st.sets(st.integers(1, 6)), st.sets(st.integers(1, 6)))
def test_restrict_composes(w, s, t):
    assert restrict(restrict(w, s), t) == restrict(w, s & t)


@given(words())
def test_initial_permutation_prefix_stable(w):
    assert initial_permutation(initial_permutation(w) + w) == initial_permutation(w)


@given(words(min_n=2), st.data())
def test_count_matches_run_oracle_symmetric_and_monotone(w, data):
    n = max(w)
    x, y = data.draw(st.sampled_from([(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]))
    c = count_pattern11(w, x, y)
    assert c == runs_oracle(w, x, y) == count_pattern11(w, y, x)
    a = data.draw(st.integers(1, n))
    assert count_pattern11(w + (a,), x, y) >= c
    assert count_pattern11((a,) + w, x, y) >= c


@given(words())
def test_length_is_sum_of_multiplicities(w):
    assert len(w) == sum(multiplicities(w).values())
    assert alphabet(w) == frozenset(range(1, max(w) + 1))


@given(uniform_words())
def test_uniform_length(w):
    t = is_uniform(w)
    assert t is not None and len(w) == t * len(set(w))


@given(words())
def test_format_round_trip(w):
    assert parse_word(format_word(w)) == w
    assert parse_word(format_word(w, block=3)) == w
