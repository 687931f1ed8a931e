"""Acceptance criteria, one test each.

Every test records a PASS or FAIL line; conftest prints them at the end of
the session. Run alone with `pytest tests/test_acceptance.py -v`.
"""
from __future__ import annotations

import random
import time
from contextlib import contextmanager
from itertools import combinations, product

from construction_cases import CASES
from conftest import digits, random_uniform_word, random_word
from test_models import geometric_crossings
from wordrep import graphs as gr
from wordrep.graphs import Graph
from wordrep.models import (
    Coloring,
    IntervalModel,
    chord_crossings,
    interval_to_word,
    intervals_to_runiform,
    m_intersection_graph,
    runiform_to_intervals,
    word_to_intervals,
)
from wordrep.represent import double, extend_level, graph_of_word, verify
from wordrep.search import SearchBudget, find_representant
from wordrep.universal import f_connected, f_general, represent2, represent2_connected
from wordrep.words import compact, cyclic_shift, is_permutational, is_uniform, restrict

RESULTS: list[str] = []
SEED = 20240601


@contextmanager
def criterion(label: str, limit: float | None = None):
    start = time.perf_counter()
    info: dict[str, str] = {}
    try:
        yield info
        took = time.perf_counter() - start
        if limit is not None:
            assert took < limit, f"took {took:.1f}s, limit {limit}s"
    except BaseException as exc:
        RESULTS.append(f"FAIL {label}: {exc}")
        raise
    extra = f" ({info['detail']})" if "detail" in info else ""
    RESULTS.append(f"PASS {label} [{time.perf_counter() - start:.2f}s]{extra}")


def rim5() -> Graph:
    return gr.cycle(5)


def test_1_golden_words():
    with criterion("1 golden words", limit=1.0):
        assert graph_of_word(digits("14213243"), 0) == gr.cycle(4)
        assert graph_of_word(digits("1521324354"), 0) == rim5()
        assert graph_of_word(digits("432511521324354"), 1) == rim5()
        u = digits("4325161521324354")
        w5 = gr.wheel(5)
        assert verify(u, w5, 1)
        wrapped = (6,) + u + (6,)
        assert verify(wrapped, w5, 1) and is_uniform(wrapped) == 3


def test_2_universal_sweep():
    with criterion("2 all graphs on 6 vertices at level 2", limit=120.0) as info:
        assert represent2(gr.complete(2)).word == digits("12 21 12 12")
        assert represent2(gr.empty(2)).word == digits("12 21 12 21")
        most = 0
        for g in gr.all_labeled_graphs(6):
            pw = represent2(g)
            assert verify(pw.word, g, 2)
            assert pw.condition_b()
            assert is_permutational(pw.word) == len(pw) <= f_general(6) == 32
            most = max(most, len(pw))
        info["detail"] = f"32768 graphs, max {most} blocks"


def test_3_connected_sweep():
    with criterion("3 connected graphs up to 6 vertices", limit=120.0) as info:
        count = dups = 0
        for n in range(2, 7):
            for g in gr.all_labeled_graphs(n):
                if not gr.is_connected(g):
                    continue
                pw = represent2_connected(g)
                assert verify(pw.word, g, 2)
                assert len(pw) <= f_connected(n) == n * n - 3 * n + 4
                count += 1
                dups += pw.duplications
        info["detail"] = f"{count} graphs, 0 fallbacks, {dups} duplicated blocks"


def test_4_wheel_not_circle():
    with criterion("4 W5 has no 2-uniform level-0 word", limit=30.0) as info:
        res = find_representant(gr.wheel(5), 0, SearchBudget(2, node_limit=None))
        assert res.status == "absent"
        info["detail"] = f"{res.nodes} nodes"


def test_5_constructions():
    with criterion("5 construction suites", limit=60.0) as info:
        rng = random.Random(SEED)
        for name in sorted(CASES):
            for _ in range(1000):
                CASES[name](rng)
        info["detail"] = f"{len(CASES)} operations x 1000"


def test_6_level_shift_laws():
    with criterion("6 level shift, hereditary and cyclic shift laws", limit=120.0) as info:
        rng = random.Random(SEED)
        uniform = 0
        for i in range(5000):
            n = rng.randint(1, 7)
            if i % 2:
                w = random_uniform_word(rng, n, rng.randint(1, 4))
            else:
                w = random_word(rng, n, rng.randint(n, 4 * n))
            for k in range(3):
                g = graph_of_word(w, k)
                assert graph_of_word(extend_level(w, "left"), k + 1) == g
                assert graph_of_word(extend_level(w, "right"), k + 1) == g
                keep = [v for v in g.vertices if rng.random() < 0.6] or [1]
                sub, back = compact(restrict(w, keep))
                assert graph_of_word(sub, k) == gr.induced(g, sorted(back.values()))[0]
            assert graph_of_word(double(w), 1) == graph_of_word(w, 0)
            if is_uniform(w):
                uniform += 1
                split = rng.randint(0, len(w))
                assert graph_of_word(cyclic_shift(w, split), 0) == graph_of_word(w, 0)
        info["detail"] = f"5000 words, {uniform} uniform"


def random_interval_model(rng: random.Random, n: int) -> IntervalModel:
    ends = rng.sample(range(4 * n), 2 * n)
    return IntervalModel({v: tuple(sorted(ends[2 * v - 2:2 * v])) for v in range(1, n + 1)})


def test_7_interval_equivalence():
    with criterion("7 interval models and r-uniform words", limit=120.0):
        rng = random.Random(SEED)
        for _ in range(1000):
            w = random_uniform_word(rng, rng.randint(1, 8), 2)
            model = word_to_intervals(w)
            assert model.graph() == graph_of_word(w, 1)
            assert graph_of_word(interval_to_word(model), 1) == model.graph()
        for _ in range(1000):
            model = random_interval_model(rng, rng.randint(1, 8))
            assert graph_of_word(interval_to_word(model), 1) == model.graph()
            assert word_to_intervals(interval_to_word(model)).graph() == model.graph()
        for r in (3, 4):
            for _ in range(500):
                model = random_interval_model(rng, rng.randint(1, 7))
                for seed in range(3):
                    w = intervals_to_runiform(model, r, random.Random(seed))
                    assert is_uniform(w) == r
                    assert graph_of_word(w, 2 * r - 3) == model.graph()
                    assert runiform_to_intervals(w, r).graph() == model.graph()
                w = random_uniform_word(rng, rng.randint(1, 6), r)
                assert runiform_to_intervals(w, r).graph() == graph_of_word(w, 2 * r - 3)


def check_coloring(seq: tuple[int, ...], n: int, r: int) -> None:
    c = Coloring(r, n, seq)
    for i, j in combinations(range(1, n + 1), 2):
        cr = chord_crossings(c.ranks(i), c.ranks(j))
        assert cr == geometric_crossings(seq, i, j) <= 2 * r - 3
    for m in range(1, 2 * r - 2):
        assert m_intersection_graph(c, m) == graph_of_word(seq, 2 * r - 3 - m)


def test_8_geometry_equivalence():
    with criterion("8 curve intersection graphs", limit=300.0) as info:
        exhaustive = 0
        for n, r in ((2, 2), (2, 3), (3, 2)):
            for seq in product(range(1, n + 1), repeat=n * r):
                if all(seq.count(a) == r for a in range(1, n + 1)):
                    check_coloring(seq, n, r)
                    exhaustive += 1
        rng = random.Random(SEED)
        for _ in range(10_000):
            n, r = rng.randint(2, 6), rng.randint(2, 4)
            check_coloring(random_uniform_word(rng, n, r), n, r)
        info["detail"] = f"{exhaustive} exhaustive + 10000 random colorings"
