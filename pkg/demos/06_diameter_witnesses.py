#!/usr/bin/env python3
"""Long shortest paths force CP-rank above the edge clique cover number.

For any connected pattern graph holding two vertices at distance >= 3,
the witness matrix (zeros on edges and the diagonal, 1 at the far pair,
2 elsewhere) has CP-rank strictly above cc.  Graphs whose matrices all
reach the cc lower bound must therefore have diameter at most 2.  This
sweeps every connected graph on up to five vertices with diameter >= 3.
"""

import itertools

from tropcp import (
    PatternGraph,
    cp_rank_exact,
    diameter,
    diameter_witness_matrix,
    distance,
    edge_clique_cover_number,
)


def canonical(n, edges):
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(
            sorted((min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in edges)
        )
        if best is None or key < best:
            best = key
    return best


seen = set()
graphs = []
for n in range(2, 6):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
        G = PatternGraph(n, edges)
        d = diameter(G)
        if d == float("inf") or d < 3:
            continue
        key = (n, canonical(n, edges))
        if key not in seen:
            seen.add(key)
            graphs.append(G)

print(f"connected graphs with diameter >= 3 on up to 5 vertices: {len(graphs)}")
print()
for G in graphs:
    u, v = next(
        (a, b)
        for a in range(G.n)
        for b in range(a + 1, G.n)
        if distance(G, a, b) >= 3
    )
    W = diameter_witness_matrix(G, u, v)
    cc, _ = edge_clique_cover_number(G)
    rank, _ = cp_rank_exact(W)
    edges = sorted((a + 1, b + 1) for a, b in G.edges)
    print(
        f"n={G.n} edges={edges} far pair=({u + 1},{v + 1}) "
        f"cc={cc} witness rank={rank}  ->  rank > cc: {rank > cc}"
    )
