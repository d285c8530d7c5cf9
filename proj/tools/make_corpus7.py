#!/usr/bin/env python3
"""Write every connected graph on 7 vertices (up to isomorphism) as graph6.

Uses the networkx graph atlas, which lists all 1253 graphs on at most
seven vertices. Equivalent to `geng -c 7` from nauty, up to line order.

    python3 tools/make_corpus7.py > data/connected7.g6
"""
import sys

import networkx as nx


def main() -> None:
    count = 0
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 7 and nx.is_connected(g):
            sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode())
            count += 1
    print(f"{count} graphs", file=sys.stderr)


if __name__ == "__main__":
    main()
