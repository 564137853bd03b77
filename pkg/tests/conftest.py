from itertools import combinations

import networkx as nx
import pytest

from totdom.equivalence import bundled_catalog
from totdom.graph import Graph, parse_graph6


def naive_tdp(n, edges):
    """Coefficient list of D_t by checking every subset with Python sets.

    Shares no code with the bitmask engine; used as the independent oracle.
    """
    nbr = {v: set() for v in range(n)}
    for u, v in edges:
        nbr[u].add(v)
        nbr[v].add(u)
    counts = [0] * (n + 1)
    everything = set(range(n))
    for k in range(n + 1):
        for s in combinations(range(n), k):
            covered = set()
            for v in s:
                covered |= nbr[v]
            if covered == everything:
                counts[k] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@pytest.fixture(scope="session")
def connected_catalogs():
    """order -> list of (graph6, Graph) for connected graphs of order 1..7."""
    return {n: [(s, parse_graph6(s)) for s in bundled_catalog(n)] for n in range(1, 8)}
