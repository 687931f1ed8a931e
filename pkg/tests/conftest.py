from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wordrep.graphs import Graph

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@st.composite
def words(draw, min_n: int = 1, max_n: int = 6, max_extra: int = 14):
    """Words whose alphabet is exactly 1..n."""
    n = draw(st.integers(min_n, max_n))
    extra = draw(st.lists(st.integers(1, n), max_size=max_extra))
    return tuple(draw(st.permutations(list(range(1, n + 1)) + extra)))


@st.composite
def uniform_words(draw, min_n: int = 1, max_n: int = 6, max_t: int = 3):
    n = draw(st.integers(min_n, max_n))
    t = draw(st.integers(1, max_t))
    return tuple(draw(st.permutations(list(range(1, n + 1)) * t)))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


def random_word(rng: random.Random, n: int, length: int) -> tuple[int, ...]:
    letters = list(range(1, n + 1)) + [rng.randint(1, n) for _ in range(max(0, length - n))]
    rng.shuffle(letters)
    return tuple(letters)


def random_uniform_word(rng: random.Random, n: int, t: int) -> tuple[int, ...]:
    letters = list(range(1, n + 1)) * t
    rng.shuffle(letters)
    return tuple(letters)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def digits(text: str) -> tuple[int, ...]:
    """Compact single-digit notation: "14213243" or "12 21 12 12"."""
    return tuple(int(c) for c in text if c.isdigit())


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
