#!/usr/bin/env python3
"""Write every connected graph on 2..7 vertices (up to isomorphism) as graph6.

Source is the networkx graph atlas, which lists all 1253 graphs with at most
seven vertices. Output feeds the cover-identity, bounds and cover-optimality
acceptance criteria.
"""
import sys

import networkx as nx


def main(path):
    graphs = [g for g in nx.graph_atlas_g()
              if 2 <= g.number_of_nodes() <= 7 and nx.is_connected(g)]
    with open(path, "w") as out:
        for g in graphs:
            out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
    print(f"wrote {len(graphs)} graphs to {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_2_7.g6")
