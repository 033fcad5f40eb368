"""Combinatorial model of the edge polytope: vertex coordinates, 1-skeleton and dimension.

The polytope is never built geometrically. Two vertices ``rho(e)`` and
``rho(f)`` span a polytope edge exactly when ``e`` and ``f`` are not
cycle-compatible, and the dimension is ``d - r - 1`` with ``r`` the number of
bipartite connected components.
"""
from __future__ import annotations

from .errors import InputError
from .graph import Edge, Graph, _compatible_bits, bipartition, connected_components, induced_subgraph


def rho(e: Edge, d: int) -> tuple[int, ...]:
    """Lattice point ``e_i + e_j`` for the edge ``(i, j)``."""
    i, j = e
    if not (1 <= i <= d and 1 <= j <= d) or i == j:
        raise InputError(f"edge {tuple(e)} is not a pair of distinct vertices in 1..{d}")
    out = [0] * d
    out[i - 1] = 1
    out[j - 1] = 1
    return tuple(out)


def skeleton_edges(G: Graph) -> list[tuple[Edge, Edge]]:
    """Pairs of graph edges whose images are joined by an edge of the polytope."""
    adj = G.adjacency
    edges = G.edges
    out = []
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if not _compatible_bits(adj, edges[a], edges[b]):
                out.append((edges[a], edges[b]))
    return out


def bipartite_component_count(G: Graph) -> int:
    r = 0
    for comp in connected_components(G):
        H, _ = induced_subgraph(G, comp)
        if bipartition(H) is not None:
            r += 1
    return r


def dimension(G: Graph) -> int:
    isolated = G.isolated_vertices()
    if isolated:
        raise InputError(f"dimension is undefined here: isolated vertices {isolated}")
    return G.d - bipartite_component_count(G) - 1
