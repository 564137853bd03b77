"""Total domination polynomials by exhaustive enumeration, plus reductions.

``brute_force_tdp`` is the ground truth for everything else in the package.
Two enumeration routes are provided:

* ``"recursive"`` walks vertices in order carrying the running union of open
  neighbourhoods, prunes a branch as soon as the union together with every
  remaining neighbourhood can no longer cover ``V``, and credits a whole
  binomial row once the union is already full.
* ``"table"`` (numpy) splits the vertex set into a low block of up to
  ``TABLE_BITS`` vertices whose subset unions are tabulated once, and a high
  block enumerated in Python.  Each high prefix leaves a residual target that
  the low block must cover; the popcount histogram of covering low subsets is
  computed vectorised and cached per residual.

The high prefixes partition the subset space, so work can be split across
worker processes and merged by exact integer addition.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Literal, Optional, Sequence

import numpy as np

from .graph import CapacityError, Graph, support_vertices
from .polynomial import ONE, X, ZERO, Polynomial

MAX_BRUTE_FORCE = 40
TABLE_BITS = 20
RECURSIVE_CUTOFF = 14

Method = Literal["auto", "recursive", "table"]


def is_total_dominating(g: Graph, s: int) -> bool:
    """True iff ``N(s) = V``."""
    return g.nbhd_of_set(s) == g.full_mask


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _count_recursive(adj: Sequence[int], n: int) -> list[int]:
    full = (1 << n) - 1
    counts = [0] * (n + 1)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | adj[i]
    if suffix[0] != full:
        return counts
    binom = [[comb(r, j) for j in range(r + 1)] for r in range(n + 1)]

    def walk(i: int, cur: int, k: int) -> None:
        if cur == full:
            row = binom[n - i]
            for j, c in enumerate(row):
                counts[k + j] += c
            return
        if i == n or (cur | suffix[i]) != full:
            return
        walk(i + 1, cur | adj[i], k + 1)
        walk(i + 1, cur, k)

    walk(0, 0, 0)
    return counts


def _low_table(adj: Sequence[int], lo: int) -> tuple[np.ndarray, np.ndarray]:
    """Union of neighbourhoods and popcount for every subset of vertices ``0..lo-1``."""
    union = np.zeros(1 << lo, dtype=np.uint64)
    size = np.zeros(1 << lo, dtype=np.uint8)
    for i in range(lo):
        half = 1 << i
        union[half:2 * half] = union[:half] | np.uint64(adj[i])
        size[half:2 * half] = size[:half] + 1
    return union, size


def _high_prefixes(adj: Sequence[int], n: int, lo: int, need_low: int) -> list[tuple[int, int]]:
    """``(union, size)`` of every subset of vertices ``lo..n-1`` that can still be completed.

    ``need_low`` is the union of all low-block neighbourhoods; a prefix whose
    union together with it misses a vertex is dropped.
    """
    full = (1 << n) - 1
    out = [(0, 0)]
    for i in range(lo, n):
        out += [(u | adj[i], k + 1) for u, k in out]
    return [(u, k) for u, k in out if (u | need_low) == full]


def _count_table_chunk(adj: tuple[int, ...], n: int, lo: int, prefixes: list[tuple[int, int]]) -> list[int]:
    union, size = _low_table(adj, lo)
    full = (1 << n) - 1
    counts = [0] * (n + 1)
    cache: dict[int, list[int]] = {}
    for u, k in prefixes:
        residual = full & ~u
        hist = cache.get(residual)
        if hist is None:
            r = np.uint64(residual)
            hit = size[(union & r) == r]
            hist = np.bincount(hit, minlength=lo + 1).tolist()
            cache[residual] = hist
        for j, c in enumerate(hist):
            if c:
                counts[k + j] += c
    return counts


def _count_table(adj: tuple[int, ...], n: int, threads: int) -> list[int]:
    lo = min(n, TABLE_BITS)
    need_low = 0
    for i in range(lo):
        need_low |= adj[i]
    prefixes = _high_prefixes(adj, n, lo, need_low)
    # sort by residual so cached histograms are reused within a chunk
    prefixes.sort(key=lambda p: (~p[0], p[1]))
    if threads <= 1 or len(prefixes) < 2:
        return _count_table_chunk(adj, n, lo, prefixes)
    workers = min(threads, len(prefixes))
    chunks = [prefixes[i::workers] for i in range(workers)]
    counts = [0] * (n + 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_count_table_chunk, [adj] * workers, [n] * workers, [lo] * workers, chunks):
            for i, c in enumerate(part):
                counts[i] += c
    return counts


def resolve_threads(threads: int) -> int:
    """``0`` means one worker per available CPU."""
    if threads < 0:
        raise ValueError("threads must be >= 0")
    if threads == 0:
        return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
    return threads


def brute_force_tdp(g: Graph, method: Method = "auto", threads: int = 1) -> Polynomial:
    """D_t(G, x): coefficient ``i`` counts the ``i``-subsets ``S`` with ``N(S) = V``.

    The null graph gives the constant 1; any isolated vertex gives 0.
    ``threads`` only affects the table route.
    """
    n = g.n
    if n > MAX_BRUTE_FORCE:
        raise CapacityError(f"order {n} exceeds the enumeration limit {MAX_BRUTE_FORCE}")
    if n == 0:
        return ONE
    if any(nb == 0 for nb in g.adj):
        return ZERO
    if method == "auto":
        method = "recursive" if n <= RECURSIVE_CUTOFF else "table"
    if method == "recursive":
        counts = _count_recursive(g.adj, n)
    elif method == "table":
        counts = _count_table(g.adj, n, resolve_threads(threads))
    else:
        raise ValueError(f"unknown method {method!r}")
    return Polynomial(counts)


def total_domination_number(g: Graph) -> Optional[int]:
    """γ_t(G), or ``None`` when no total dominating set exists."""
    if g.n == 0:
        return None
    return brute_force_tdp(g).low_degree()


# ---------------------------------------------------------------------------
# identities from vertex and edge elimination
# ---------------------------------------------------------------------------


def star_of_vertex(g: Graph, v: int) -> Graph:
    """G ⊙ v: delete every edge with both endpoints in N(v)."""
    return g.remove_edges_within(g.adj[v])


def vertex_decomposition_terms(g: Graph, v: int) -> tuple[Polynomial, Polynomial, Polynomial]:
    """``(D_t(G∖v), D_t(G⊙v), D_t(G⊛v))`` where ``G⊛v = (G⊙v)∖v``."""
    dot = star_of_vertex(g, v)
    return brute_force_tdp(g.remove_vertex(v)), brute_force_tdp(dot), brute_force_tdp(dot.remove_vertex(v))


def vertex_decomposition_check(g: Graph, v: int) -> bool:
    """Whether ``D_t(G) = D_t(G∖v) + D_t(G⊙v) - D_t(G⊛v)`` holds exactly."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph of order {g.n}")
    a, b, c = vertex_decomposition_terms(g, v)
    return brute_force_tdp(g) == a + b - c


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    return g.has_edge(u, v) and g.closed_nbhd(u) == g.closed_nbhd(v)


def twin_edge_reduction(g: Graph, u: int, v: int) -> Polynomial:
    """``D_t(G∖e) + x² D_t(G∖N[u])`` for an edge ``e = uv`` with ``N[u] = N[v]``."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    if g.closed_nbhd(u) != g.closed_nbhd(v):
        raise ValueError(f"vertices {u} and {v} are not true twins")
    rest = g.remove_vertices(g.closed_nbhd(u))
    return brute_force_tdp(g.remove_edge(u, v)) + (brute_force_tdp(rest)).shift(2)


def dominating_vertex_reduction(g: Graph, v: int) -> Polynomial:
    """``D_t(G∖v) + x(x+1)^(n-1) - x`` for a vertex adjacent to all others."""
    n = g.n
    if n < 2 or g.degree(v) != n - 1:
        raise ValueError(f"vertex {v} is not adjacent to every other vertex")
    return brute_force_tdp(g.remove_vertex(v)) + X * (X + 1) ** (n - 1) - X


# ---------------------------------------------------------------------------
# irrelevant edges
# ---------------------------------------------------------------------------

SUPPORT_ADJACENT = "THM_SUPPORT_ADJACENT"
TWIN_DOMINATED = "THM_TWIN_DOMINATED"
TWIN_EDGE_SPLIT = "TWIN_EDGE_SPLIT"
DOMINATING_VERTEX = "DOMINATING_VERTEX"


def _support_adjacent(g: Graph, support: int, u: int, v: int, literal: bool) -> bool:
    if literal:
        return bool(g.adj[u] & support) and bool(g.adj[v] & support)
    # The support vertex must reach each endpoint through an edge other than uv.
    return bool(g.adj[u] & support & ~(1 << v)) and bool(g.adj[v] & support & ~(1 << u))


def _twin_dominated(g: Graph, u: int, v: int) -> bool:
    if g.closed_nbhd(u) != g.closed_nbhd(v):
        return False
    # Any w with N(w) ⊆ N(u) other than u, v cannot be adjacent to u (else
    # u ∈ N(w) ⊆ N(u)), so w is isolated in G∖N[u].
    nu = g.adj[u]
    return any(g.adj[w] & ~nu == 0 for w in range(g.n) if w != u and w != v)


def irrelevant_edge_candidates(g: Graph, literal_support_rule: bool = False) -> list[tuple[tuple[int, int], str]]:
    """Edges whose deletion provably keeps D_t, tagged with the rule that applies.

    Support rule: each endpoint has a support-vertex neighbour other than the
    opposite endpoint.  Twin rule: ``N[u] = N[v]`` and some ``w ∉ {u, v}`` has
    ``N(w) ⊆ N(u)``.  Rule-1 hits are listed first, each group in
    lexicographic edge order; an edge matching both is listed once, under rule 1.

    ``literal_support_rule`` drops the "other than the opposite endpoint"
    condition.  That reading is unsound (the middle edge of ``P_4`` qualifies)
    and exists only so the difference can be exhibited.
    """
    support = support_vertices(g)
    first, second = [], []
    for u, v in g.edges():
        if _support_adjacent(g, support, u, v, literal_support_rule):
            first.append(((u, v), SUPPORT_ADJACENT))
        elif _twin_dominated(g, u, v):
            second.append(((u, v), TWIN_DOMINATED))
    return first + second


def certify_irrelevant(g: Graph, u: int, v: int) -> bool:
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    return brute_force_tdp(g) == brute_force_tdp(g.remove_edge(u, v))


@dataclass(frozen=True)
class ReductionStep:
    rule: str
    target: tuple[int, int] | int
    certified: bool = False


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)

    def replay(self, g: Graph) -> Graph:
        for step in self.steps:
            if isinstance(step.target, tuple):
                g = g.remove_edge(*step.target)
            else:
                g = g.remove_vertex(step.target)
        return g

    def __len__(self) -> int:
        return len(self.steps)


def simplify(g: Graph, certify: bool = False, certify_limit: int = 16) -> tuple[Graph, ReductionTrace]:
    """Delete irrelevant edges one at a time until no rule applies.

    Each round removes the first candidate reported by
    :func:`irrelevant_edge_candidates` and recomputes.  With ``certify`` the
    deletion is checked against the oracle whenever ``g.n <= certify_limit``;
    a failed certification raises ``AssertionError``.
    """
    trace = ReductionTrace()
    while True:
        cands = irrelevant_edge_candidates(g)
        if not cands:
            return g, trace
        (u, v), rule = cands[0]
        ok = False
        if certify and g.n <= certify_limit:
            ok = certify_irrelevant(g, u, v)
            if not ok:
                raise AssertionError(f"edge ({u}, {v}) flagged by {rule} changes D_t")
        trace.steps.append(ReductionStep(rule, (u, v), ok))
        g = g.remove_edge(u, v)


def reduced_tdp(g: Graph, method: Method = "auto", threads: int = 1) -> Polynomial:
    """D_t via :func:`simplify` followed by enumeration of the reduced graph."""
    h, _ = simplify(g)
    return brute_force_tdp(h, method=method, threads=threads)
