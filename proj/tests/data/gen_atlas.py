"""Writes graph6 fixtures from networkx's graph atlas (all graphs up to 7 vertices).

Used as an independent generator when cross-checking enumeration and the graph6 codec.
"""
import networkx as nx

for n in range(1, 8):
    with open(f"atlas_n{n}.g6", "w") as out:
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == n:
                out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
