"""Interval models, chord/curve models on a convex arc, and SVG output.

Points on a strictly convex curve are handled purely by their order: two
straight segments between such points cross exactly when their endpoint
ranks interleave, so no coordinates are ever stored.
"""
from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .graphs import Graph
from .words import Word, as_word, is_uniform


# -- interval models -----------------------------------------------------------

@dataclass(frozen=True)
class IntervalModel:
    intervals: Mapping[int, tuple[Fraction, Fraction]]

    def __post_init__(self) -> None:
        clean = {}
        for v, (lo, hi) in self.intervals.items():
            lo, hi = Fraction(lo), Fraction(hi)
            if not lo < hi:
                raise ValueError(f"interval of {v} must satisfy lo < hi")
            clean[int(v)] = (lo, hi)
        ends = [e for pair in clean.values() for e in pair]
        if len(set(ends)) != len(ends):
            raise ValueError("interval endpoints must be pairwise distinct")
        if sorted(clean) != list(range(1, len(clean) + 1)):
            raise ValueError("interval vertices must be 1..n")
        object.__setattr__(self, "intervals", dict(sorted(clean.items())))

    @property
    def n(self) -> int:
        return len(self.intervals)

    def graph(self) -> Graph:
        """Intersection graph; overlaps of positive length only."""
        iv = self.intervals
        edges = [
            (u, v) for u, v in combinations(iv, 2)
            if max(iv[u][0], iv[v][0]) < min(iv[u][1], iv[v][1])
        ]
        return Graph.from_edges(self.n, edges)


def interval_to_word(model: IntervalModel) -> Word:
    """2-uniform word listing endpoint labels from left to right."""
    ends = sorted((e, v) for v, pair in model.intervals.items() for e in pair)
    return tuple(v for _, v in ends)


def _positions(w: Sequence[int]) -> dict[int, list[int]]:
    pos: dict[int, list[int]] = {}
    for i, a in enumerate(w, start=1):
        pos.setdefault(a, []).append(i)
    return pos


def word_to_intervals(w: Sequence[int]) -> IntervalModel:
    if is_uniform(w) != 2:
        raise ValueError("word is not 2-uniform")
    return runiform_to_intervals(w, 2)


def runiform_to_intervals(w: Sequence[int], r: int) -> IntervalModel:
    """Interval of each letter from its leftmost to its rightmost position."""
    if r < 2 or is_uniform(w) != r:
        raise ValueError(f"word is not {r}-uniform (r >= 2)")
    return IntervalModel({a: (Fraction(p[0]), Fraction(p[-1])) for a, p in _positions(w).items()})


def intervals_to_runiform(model: IntervalModel, r: int, rng: random.Random | None = None) -> Word:
    """Endpoint word with r - 2 extra copies of each letter between its two
    endpoints: right after the first copy, or at random slots when `rng` is
    given."""
    if r < 2:
        raise ValueError("r must be at least 2")
    base = list(interval_to_word(model))
    extra: dict[int, list[int]] = {}
    pos = _positions(base)
    for v, (first, last) in pos.items():
        slots = [first] * (r - 2) if rng is None else [rng.randint(first, last - 1) for _ in range(r - 2)]
        for s in slots:
            extra.setdefault(s, []).append(v)
    out: list[int] = []
    for i, a in enumerate(base, start=1):
        out.append(a)
        out.extend(extra.get(i, ()))
    return tuple(out)


def parse_interval_model(text: str) -> IntervalModel:
    iv = {}
    for ln in text.strip().splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"bad interval line {ln!r}")
        v = int(parts[0])
        if v in iv:
            raise ValueError(f"duplicate vertex {v}")
        iv[v] = (Fraction(parts[1]), Fraction(parts[2]))
    return IntervalModel(iv)


def _fmt_fraction(x: Fraction) -> str:
    d = x.denominator
    while d % 2 == 0:
        d //= 2
    while d % 5 == 0:
        d //= 5
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    digits = 0
    while (x * 10 ** digits).denominator != 1:
        digits += 1
    return f"{float(x):.{digits}f}" if digits else str(x.numerator)


def serialize_interval_model(model: IntervalModel) -> str:
    return "".join(f"{v} {_fmt_fraction(lo)} {_fmt_fraction(hi)}\n" for v, (lo, hi) in model.intervals.items())


# -- colorings and convex curves -------------------------------------------------

@dataclass(frozen=True)
class Coloring:
    """n*r ordered points on a convex arc, each labeled by one of 1..n."""

    r: int
    n: int
    sequence: Word

    def __post_init__(self) -> None:
        seq = as_word(self.sequence)
        object.__setattr__(self, "sequence", seq)
        counts = Counter(seq)
        if set(counts) != set(range(1, self.n + 1)):
            raise ValueError(f"labels must be exactly 1..{self.n}")
        if any(c != self.r for c in counts.values()):
            raise ValueError(f"each label must occur exactly {self.r} times")

    @classmethod
    def from_word(cls, w: Sequence[int]) -> "Coloring":
        r = is_uniform(w)
        if r is None:
            raise ValueError("a coloring comes from a uniform word")
        return cls(r, len(set(w)), tuple(w))

    @property
    def word(self) -> Word:
        return self.sequence

    def ranks(self, label: int) -> list[int]:
        return [i for i, a in enumerate(self.sequence) if a == label]


def parse_coloring(text: str, r: int | None = None) -> Coloring:
    seq = tuple(int(t) for t in text.split())
    c = Coloring.from_word(seq)
    if r is not None and c.r != r:
        raise ValueError(f"coloring has {c.r} copies per label, expected {r}")
    return c


def chord_crossings(pos_i: Sequence[int], pos_j: Sequence[int]) -> int:
    """Crossings between two polylines through points in convex position.

    Each list holds the sorted ranks of one polyline's vertices; consecutive
    ranks are joined by a segment. Segments (a, b) and (c, d) cross iff
    a < c < b < d or c < a < d < b.
    """
    if set(pos_i) & set(pos_j):
        raise ValueError("the two polylines share a point")
    if list(pos_i) != sorted(pos_i) or list(pos_j) != sorted(pos_j):
        raise ValueError("ranks must be sorted")
    count = 0
    for a, b in zip(pos_i, pos_i[1:]):
        for c, d in zip(pos_j, pos_j[1:]):
            if a < c < b < d or c < a < d < b:
                count += 1
    return count


def m_intersection_graph(c: Coloring, m: int) -> Graph:
    """Edge ij iff the polylines of i and j meet in at least m points."""
    if not 1 <= m <= 2 * c.r - 3:
        raise ValueError(f"m must lie in 1..{2 * c.r - 3}")
    ranks = {i: c.ranks(i) for i in range(1, c.n + 1)}
    edges = [(i, j) for i, j in combinations(ranks, 2) if chord_crossings(ranks[i], ranks[j]) >= m]
    return Graph.from_edges(c.n, edges)


# -- SVG ---------------------------------------------------------------------------

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _f(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _svg(width: int, height: int, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f'<rect width="{width}" height="{height}" fill="white"/>\n'
    )
    return head + "".join(line + "\n" for line in body) + "</svg>\n"


def _arc_points(count: int, closed: bool, cx: float, cy: float, rad: float) -> list[tuple[float, float]]:
    pts = []
    for i in range(count):
        if closed:
            theta = math.pi / 2 - 2 * math.pi * i / count
        else:
            theta = math.pi - math.pi * (i + 0.5) / count
        pts.append((cx + rad * math.cos(theta), cy - rad * math.sin(theta)))
    return pts


def _polyline_svg(seq: Word, closed: bool) -> str:
    size = 400
    cx, cy, rad = size / 2, (size / 2 if closed else size * 0.8), size * 0.4
    pts = _arc_points(len(seq), closed, cx, cy, rad)
    body = []
    if closed:
        body.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(rad)}" fill="none" stroke="#cccccc"/>')
    else:
        body.append(
            f'<path d="M {_f(cx - rad)} {_f(cy)} A {_f(rad)} {_f(rad)} 0 0 1 {_f(cx + rad)} {_f(cy)}" '
            'fill="none" stroke="#cccccc"/>'
        )
    for label in sorted(set(seq)):
        idx = [i for i, a in enumerate(seq) if a == label]
        colour = PALETTE[(label - 1) % len(PALETTE)]
        coords = " ".join(f"{_f(pts[i][0])},{_f(pts[i][1])}" for i in idx)
        body.append(f'<polyline points="{coords}" fill="none" stroke="{colour}" stroke-width="2"/>')
    for i, (x, y) in enumerate(pts):
        colour = PALETTE[(seq[i] - 1) % len(PALETTE)]
        body.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="4" fill="{colour}"/>')
        lx, ly = cx + (x - cx) * 1.12, cy + (y - cy) * 1.12
        body.append(
            f'<text x="{_f(lx)}" y="{_f(ly)}" font-size="12" text-anchor="middle" '
            f'dominant-baseline="middle">{seq[i]}</text>'
        )
    return _svg(size, size, body)


def _intervals_svg(model: IntervalModel) -> str:
    ends = [e for pair in model.intervals.values() for e in pair]
    lo, hi = min(ends), max(ends)
    span = float(hi - lo) or 1.0
    width, row = 480, 24
    height = row * (model.n + 1)
    body = []
    for v, (a, b) in model.intervals.items():
        x0 = 40 + 400 * float(a - lo) / span
        x1 = 40 + 400 * float(b - lo) / span
        y = row * v
        colour = PALETTE[(v - 1) % len(PALETTE)]
        body.append(f'<line x1="{_f(x0)}" y1="{y}" x2="{_f(x1)}" y2="{y}" stroke="{colour}" stroke-width="6"/>')
        body.append(f'<text x="20" y="{y}" font-size="12" dominant-baseline="middle">{v}</text>')
    return _svg(width, height, body)


def emit_svg(kind: str, data) -> str:
    """Standalone SVG text; byte-identical for identical input.

    kind "chords": a uniform word drawn on a circle (each letter's points
    joined in order). kind "curves": a Coloring or uniform word drawn on an
    open convex arc. kind "intervals": an IntervalModel.
    """
    if kind == "chords":
        return _polyline_svg(Coloring.from_word(tuple(data)).word, closed=True)
    if kind == "curves":
        c = data if isinstance(data, Coloring) else Coloring.from_word(tuple(data))
        return _polyline_svg(c.word, closed=False)
    if kind == "intervals":
        return _intervals_svg(data)
    raise ValueError(f"unknown diagram kind {kind!r}")
