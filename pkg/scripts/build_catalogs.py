#!/usr/bin/env python3
"""Regenerate the bundled graph6 catalogs from the networkx graph atlas.

The atlas lists every graph on 0..7 vertices up to isomorphism.  Writes
``connected{n}.g6`` and ``all{n}.g6`` for n = 1..7 into src/totdom/data.

Usage: python3 scripts/build_catalogs.py
"""

from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from totdom.graph import from_edge_list, write_graph6

OUT = Path(__file__).resolve().parent.parent / "src" / "totdom" / "data"


def main() -> None:
    by_order: dict[int, list] = {}
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if n:
            by_order.setdefault(n, []).append(G)
    for n, graphs in sorted(by_order.items()):
        every, conn = [], []
        for G in graphs:
            s = write_graph6(from_edge_list(n, G.edges()))
            every.append(s)
            if nx.is_connected(G):
                conn.append(s)
        (OUT / f"all{n}.g6").write_text("\n".join(every) + "\n")
        (OUT / f"connected{n}.g6").write_text("\n".join(conn) + "\n")
        print(f"order {n}: {len(every)} graphs, {len(conn)} connected")


if __name__ == "__main__":
    main()
