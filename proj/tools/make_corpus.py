#!/usr/bin/env python3
"""Write graph6 corpora of connected graphs, one graph per line.

  make_corpus.py --max-n 7 out.g6      connected graphs on 1..7 vertices (graph atlas)
  make_corpus.py --exact-n 8 out.g6    connected graphs on exactly 8 vertices

Graphs on 8 vertices are produced by extending every graph on 7 vertices by one
vertex and removing isomorphic duplicates (Weisfeiler-Lehman buckets, then an
exact isomorphism test inside each bucket).
"""
import argparse
import itertools
import sys

import networkx as nx


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def atlas(max_n):
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= max_n and nx.is_connected(g):
            yield g


def order8():
    base = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7]
    buckets = {}
    for g in base:
        for k in range(1, 8):
            for nbrs in itertools.combinations(range(7), k):
                h = g.copy()
                h.add_node(7)
                h.add_edges_from((7, u) for u in nbrs)
                if not nx.is_connected(h):
                    continue
                key = (tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(h, o) for o in bucket):
                    bucket.append(h)
    out = [h for b in buckets.values() for h in b]
    out.sort(key=lambda h: (h.number_of_edges(), g6(h)))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int)
    ap.add_argument("--exact-n", type=int)
    ap.add_argument("out")
    a = ap.parse_args()
    if a.max_n:
        graphs = list(atlas(a.max_n))
    elif a.exact_n == 8:
        graphs = order8()
    else:
        sys.exit("supported: --max-n <= 7 or --exact-n 8")
    with open(a.out, "w") as f:
        for g in graphs:
            f.write(g6(g) + "\n")
    print(f"{len(graphs)} graphs", file=sys.stderr)


if __name__ == "__main__":
    main()
