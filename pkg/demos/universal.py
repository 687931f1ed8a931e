"""
Every graph at level 2
======================

Concatenated permutations suffice once two repeated neighbours per pair
are allowed. Here we tally how many permutations the insertion scheme
actually uses against its worst-case bound.
"""
from __future__ import annotations

from collections import Counter

import numpy as np

from wordrep import graphs as gr
from wordrep.universal import f_connected, f_general, represent2, represent2_connected

print(represent2(gr.complete(3)))
print(represent2_connected(gr.path(4)))

for n in range(3, 7):
    sizes = np.array([len(represent2(g)) for g in gr.all_labeled_graphs(n)])
    print(f"n={n}: bound {f_general(n)}, mean {sizes.mean():.2f}, max {sizes.max()}")

# connected graphs get a tighter bound, and block duplication shows up
# when no earlier block can host the new vertex
for n in range(3, 7):
    dups = Counter()
    for g in gr.all_labeled_graphs(n):
        if gr.is_connected(g):
            pw = represent2_connected(g)
            dups[pw.duplications] += 1
    print(f"n={n}: bound {f_connected(n)}, duplications {dict(sorted(dups.items()))}")
