"""
Intervals and convex curves
===========================

Two-copy words read as interval endpoints, and r-copy words read as
colourings of points on a convex arc. The pictures go to ./demo_svg.
"""
from __future__ import annotations

import random
from pathlib import Path

import numpy as np

from wordrep.models import (
    Coloring,
    IntervalModel,
    emit_svg,
    interval_to_word,
    intervals_to_runiform,
    m_intersection_graph,
    serialize_interval_model,
    word_to_intervals,
)
from wordrep.represent import graph_of_word, pair_counts
from wordrep.words import format_word

out = Path("demo_svg")
out.mkdir(exist_ok=True)

model = IntervalModel({1: (0, 3), 2: (1, 5), 3: (4, 7), 4: (2, 6)})
w = interval_to_word(model)
print(format_word(w), sorted(model.graph().edges))
assert graph_of_word(w, 1) == model.graph()
print(serialize_interval_model(word_to_intervals(w)), end="")
(out / "intervals.svg").write_text(emit_svg("intervals", model))

# more copies per letter, same graph, at a higher level
rng = random.Random(1)
for r in (3, 4):
    wr = intervals_to_runiform(model, r, rng)
    print(r, format_word(wr), graph_of_word(wr, 2 * r - 3) == model.graph())

# curves: crossing counts fall out of the pair counts
c = Coloring.from_word((1, 2, 3, 1, 3, 2, 2, 1, 3))
iu = np.triu_indices(c.n, 1)
counts = pair_counts(c.word)[iu]
for i, j, x in zip(iu[0] + 1, iu[1] + 1, 2 * c.r - 3 - counts):
    print(f"curves {i},{j} cross {x} times")
for m in range(1, 2 * c.r - 2):
    print(m, sorted(m_intersection_graph(c, m).edges))
(out / "curves.svg").write_text(emit_svg("curves", c))
print(np.count_nonzero(counts == 0), "pairs alternate")
