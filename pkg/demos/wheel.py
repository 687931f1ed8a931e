"""
The wheel on six vertices
=========================

A 5-cycle with a hub joined to every rim vertex. No word alternates
exactly along its edges, but allowing one repeated neighbour per pair
is enough.
"""
from __future__ import annotations

from wordrep import graphs as gr
from wordrep.represent import graph_of_word, pair_counts, verify
from wordrep.search import SearchBudget, find_representant, min_level
from wordrep.words import format_word, parse_word

w5 = gr.wheel(5)
print("edges:", sorted(w5.edges))

# the rim alone is an ordinary alternation graph
rim = parse_word("1 5 2 1 3 2 4 3 5 4")
print("rim at level 0:", sorted(graph_of_word(rim, 0).edges))

# a hand-built word that works once one 11 per pair is tolerated
u = parse_word("4 3 2 5 1 6 1 5 2 1 3 2 4 3 5 4")
print(verify(u, w5, 1))
print(pair_counts(u))

# chord diagrams are 2-uniform words, and none of them fits
res = find_representant(w5, 0, SearchBudget(2, node_limit=None))
print(res.status, "after", res.nodes, "nodes in", res.family)

# three copies per letter at level 1 do work
res = find_representant(w5, 1, SearchBudget(3))
print("found:", format_word(res.word))

r = min_level(w5)
print(f"level {r.qualifier} {r.k} via {r.family}")
