"""Regenerate fixtures/atlas7.g6: every graph on at most 7 vertices (one
per isomorphism class, networkx atlas order), one graph6 line each, with a
trailing planarity flag."""
import sys

import networkx as nx


def main(path):
    with open(path, "w") as f:
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == 0:
                continue
            token = nx.to_graph6_bytes(g, header=False).decode().strip()
            planar, _ = nx.check_planarity(g)
            f.write(f"{token} {int(planar)}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures/atlas7.g6")
