#!/usr/bin/env python3
"""Write every 2-connected graph on at most 7 vertices, one per line.

Line format: `n u-v u-v ...`. Source: the networkx graph atlas, which lists all
graphs up to 7 vertices up to isomorphism.
"""
import sys

import networkx as nx


def main(path):
    count = 0
    with open(path, "w") as out:
        out.write("# 2-connected graphs on <= 7 vertices, up to isomorphism\n")
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() < 3 or not nx.is_biconnected(g):
                continue
            edges = " ".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
            out.write(f"{g.number_of_nodes()} {edges}\n")
            count += 1
    print(f"{count} graphs written to {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/biconnected_le7.txt")
