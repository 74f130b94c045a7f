"""Exact harmonic centrality and centralization.

All values are `fractions.Fraction` end to end; nothing is rounded until
a caller explicitly asks for a decimal rendering.  Distances are plain
breadth-first search on the adjacency lists; the all-pairs driver
aggregates per-source distance histograms (identical histograms share
one rational summation, which is what makes large regular graphs cheap)
and can fan the per-source searches out to worker processes.
"""
from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph

Rational = Fraction

# Below this order a process pool costs more than it saves.
_PARALLEL_MIN_ORDER = 256


@dataclass(frozen=True)
class DistanceRow:
    """Geodesic distances from one source; None marks unreachable vertices."""

    source: int
    dist: tuple[int | None, ...]


@dataclass(frozen=True)
class CentralityReport:
    """Per-vertex harmonic centralities plus the graph-level summary.

    `centralization` is None when the graph has fewer than 3 vertices
    (the normalizing denominator (m-2)/2 vanishes there).
    """

    order: int
    size: int
    centralities: tuple[Fraction, ...]
    max_value: Fraction
    argmax: tuple[int, ...]
    centralization: Fraction | None


def bfs_distances(g: Graph, source: int) -> DistanceRow:
    """Exact unweighted shortest-path distances from `source`."""
    if not 0 <= source < g.order:
        raise ValueError(f"source {source} out of range [0, {g.order})")
    adj = g.adjacency()
    dist: list[int | None] = [None] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] is None:
                dist[v] = du
                queue.append(v)
    return DistanceRow(source, tuple(dist))


def reciprocal_sum(g: Graph, u: int) -> Fraction:
    """Sum of 1/d(x, u) over all other vertices x, 0 for unreachable x."""
    row = bfs_distances(g, u)
    return sum(
        (Fraction(1, d) for d in row.dist if d), start=Fraction(0)
    )


def harmonic_centrality(g: Graph, u: int) -> Fraction:
    """Reciprocal-distance sum of u normalized by order - 1."""
    if g.order < 2:
        raise ValueError("harmonic centrality needs at least 2 vertices")
    return reciprocal_sum(g, u) / (g.order - 1)


_HARMONIC_CACHE = [Fraction(0)]


def harmonic_number(n: int) -> Fraction:
    """n-th harmonic number 1 + 1/2 + ... + 1/n, exactly; zero for n = 0."""
    if n < 0:
        raise ValueError(f"harmonic number undefined for n = {n}")
    cache = _HARMONIC_CACHE
    while len(cache) <= n:
        cache.append(cache[-1] + Fraction(1, len(cache)))
    return cache[n]


def centralization_denominator(m: int) -> Fraction:
    """Largest possible centrality-gap sum among graphs of order m.

    Attained by the star graph, where it reduces to (m - 2)/2; defined
    only for m > 2.
    """
    if m <= 2:
        raise ValueError(f"centralization denominator needs order > 2, got {m}")
    return Fraction(m - 2, 2)


def _distance_histograms(
    adj: tuple[tuple[int, ...], ...], sources
) -> list[tuple[int, ...]]:
    """Per-source histogram: entry d-1 counts vertices at distance d."""
    n = len(adj)
    out = []
    for s in sources:
        seen = bytearray(n)
        seen[s] = 1
        frontier = [s]
        hist = []
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if not seen[v]:
                        seen[v] = 1
                        nxt.append(v)
            if nxt:
                hist.append(len(nxt))
            frontier = nxt
        out.append(tuple(hist))
    return out


def _histogram_chunk(args) -> list[tuple[int, ...]]:
    adj, sources = args
    return _distance_histograms(adj, sources)


def _parallel_histograms(adj, n: int, workers: int) -> list[tuple[int, ...]]:
    chunk = -(-n // (workers * 4))
    pieces = [(adj, list(range(i, min(i + chunk, n)))) for i in range(0, n, chunk)]
    try:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_histogram_chunk, pieces))
    except OSError:
        # No process support in this environment; the sequential kernel
        # produces the same histograms.
        return _distance_histograms(adj, range(n))
    return [hist for part in parts for hist in part]


def all_reciprocal_sums(g: Graph, threads: int | None = 1) -> list[Fraction]:
    """Reciprocal-distance sum of every vertex, in vertex order.

    `threads` > 1 distributes the per-source searches over worker
    processes; results are merged by source index, so the output is
    identical for any thread count.  None means one worker per CPU.
    """
    if threads is None:
        threads = os.cpu_count() or 1
    adj = g.adjacency()
    n = g.order
    if threads > 1 and n >= _PARALLEL_MIN_ORDER:
        hists = _parallel_histograms(adj, n, threads)
    else:
        hists = _distance_histograms(adj, range(n))
    cache: dict[tuple[int, ...], Fraction] = {}
    sums = []
    for hist in hists:
        value = cache.get(hist)
        if value is None:
            value = sum(
                (Fraction(c, d) for d, c in enumerate(hist, 1)), start=Fraction(0)
            )
            cache[hist] = value
        sums.append(value)
    return sums


def centralization(g: Graph, threads: int | None = 1) -> Fraction:
    """Freeman centralization of harmonic centrality, exactly.

    Sum of (max centrality - vertex centrality) over all vertices,
    normalized by the star-graph value (m - 2)/2.  Needs order > 2.
    """
    denominator = centralization_denominator(g.order)
    centralities = [r / (g.order - 1) for r in all_reciprocal_sums(g, threads)]
    top = max(centralities)
    gap_sum = sum((top - c for c in centralities), start=Fraction(0))
    return gap_sum / denominator


def full_report(g: Graph, threads: int | None = 1) -> CentralityReport:
    """Centralities, exact argmax set and (when defined) centralization."""
    if g.order < 2:
        raise ValueError("centrality report needs at least 2 vertices")
    m = g.order
    centralities = tuple(r / (m - 1) for r in all_reciprocal_sums(g, threads))
    top = max(centralities)
    argmax = tuple(v for v, c in enumerate(centralities) if c == top)
    central = None
    if m > 2:
        gap_sum = sum((top - c for c in centralities), start=Fraction(0))
        central = gap_sum / centralization_denominator(m)
    return CentralityReport(
        order=m,
        size=g.size(),
        centralities=centralities,
        max_value=top,
        argmax=argmax,
        centralization=central,
    )


def format_rational(value: Fraction) -> str:
    """Canonical 'p/q' rendering, plain 'p' for integers."""
    return str(value)


def format_decimal(value: Fraction, digits: int) -> str:
    """Fixed-point decimal rendering with round-half-even."""
    if digits < 0:
        raise ValueError("digits must be >= 0")
    n, d = value.numerator, value.denominator
    sign = "-" if n < 0 else ""
    whole, rem = divmod(abs(n) * 10**digits, d)
    if 2 * rem > d or (2 * rem == d and whole % 2 == 1):
        whole += 1
    text = str(whole)
    if digits == 0:
        return sign + text
    text = text.rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"
