from __future__ import annotations

from itertools import permutations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import digits, uniform_words, words
from wordrep import graphs as gr
from wordrep.graphs import Graph
from wordrep.represent import (
    ReprClaim,
    double,
    extend_level,
    graph_of_word,
    pair_counts,
    pad_occurrences,
    verify,
    with_endpoints,
)
from wordrep.words import compact, count_pattern11, cyclic_shift, is_uniform, multiplicities, restrict

U = digits("4325161521324354")


def test_c4_word():
    assert graph_of_word(digits("14213243"), 0) == gr.cycle(4)


def test_rim_cycle_words():
    rim = gr.cycle(5)
    assert graph_of_word(digits("1521324354"), 0) == rim
    assert graph_of_word(digits("432511521324354"), 1) == rim
    assert extend_level(digits("1521324354")) == digits("432511521324354")


def test_wheel_words():
    w5 = gr.wheel(5)
    assert verify(U, w5, 1)
    assert verify((6,) + U + (6,), w5, 1)
    assert is_uniform((6,) + U + (6,)) == 3
    assert not verify(U, w5, 0)


def test_complete_and_empty():
    for p in permutations(range(1, 5)):
        assert graph_of_word(p, 0) == gr.complete(4)
    assert graph_of_word(digits("112233"), 0) == gr.empty(3)
    assert graph_of_word((1,), 0) == Graph(1, frozenset())


def test_alphabet_contract():
    with pytest.raises(ValueError):
        graph_of_word((1, 3, 1), 0)
    with pytest.raises(ValueError):
        graph_of_word((), 0)
    with pytest.raises(ValueError):
        verify((1, 2), gr.complete(3), 0)
    with pytest.raises(ValueError):
        ReprClaim((1, 2), -1)


def test_verdict_lists_every_bad_pair():
    v = verify(digits("1122"), gr.complete(2), 0)
    assert not v
    assert [(x.pair, x.count, x.expected_edge) for x in v.violations] == [((1, 2), 2, True)]
    assert str(v).splitlines() == ["FAIL", "1 2: count 2, expected edge"]
    assert str(verify((1, 2), gr.complete(2), 0)) == "PASS"


def test_claim():
    c = ReprClaim(U, 1)
    assert c.graph == gr.wheel(5)
    assert c.count(2, 5) == count_pattern11(U, 2, 5)
    assert c.uniformity is None


@given(words(max_n=7, max_extra=20))
def test_pair_counts_match_scalar(w):
    n = max(w)
    m = pair_counts(w, n)
    assert m.shape == (n, n) and (m == m.T).all() and not np.diag(m).any()
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            assert m[x - 1, y - 1] == count_pattern11(w, x, y)


@given(words(), st.integers(0, 3), st.sampled_from(["left", "right"]))
def test_extend_level(w, k, side):
    w2 = extend_level(w, side)
    assert graph_of_word(w2, k + 1) == graph_of_word(w, k)
    assert (pair_counts(w2) == pair_counts(w) + 1 - np.eye(max(w), dtype=int)).all()


@given(words())
def test_doubling(w):
    assert graph_of_word(double(w), 1) == graph_of_word(w, 0)


@given(words(min_n=2), st.data())
def test_with_endpoints(w, data):
    i = data.draw(st.integers(1, max(w)))
    j = data.draw(st.integers(1, max(w)))
    out = with_endpoints(w, i, j)
    assert out[0] == i and out[-1] == j
    assert (pair_counts(out) == pair_counts(w)).all()


@given(words(), st.integers(1, 6))
def test_pad_occurrences(w, m):
    out = pad_occurrences(w, m)
    assert min(multiplicities(out).values()) >= m
    assert (pair_counts(out) == pair_counts(w)).all()


@given(words(min_n=2), st.data(), st.integers(0, 2))
def test_hereditary(w, data, k):
    keep = data.draw(st.sets(st.integers(1, max(w)), min_size=1))
    sub, back = compact(restrict(w, keep))
    induced, _ = gr.induced(graph_of_word(w, k), sorted(back.values()))
    assert graph_of_word(sub, k) == induced


@given(uniform_words(), st.data())
def test_uniform_cyclic_shift(w, data):
    i = data.draw(st.integers(0, len(w)))
    assert graph_of_word(cyclic_shift(w, i), 0) == graph_of_word(w, 0)


def test_cyclic_shift_law_is_level_zero_only():
    # uniformity is needed, and above level 0 a rotation can add an 11
    assert graph_of_word((1, 2, 1), 0) != graph_of_word(cyclic_shift((1, 2, 1), 1), 0)
    assert graph_of_word((1, 2, 2, 1), 1) != graph_of_word(cyclic_shift((1, 2, 2, 1), 1), 1)
