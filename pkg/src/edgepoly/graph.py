"""Labeled simple graphs on vertices ``1..d``.

Adjacency is kept as one integer bitset per vertex (bit ``v - 1`` set when
``v`` is a neighbor), so that the 4-cycle test behind cycle-compatibility is a
handful of bit operations. Python integers are unbounded, so the same code
path serves graphs with more than 64 vertices.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from typing import Optional

from .errors import InputError

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertex set ``{1, ..., d}``."""

    __slots__ = ("d", "edges", "adjacency", "_edge_index")

    def __init__(self, d: int, edges: Iterable[Edge]):
        if d < 0:
            raise InputError(f"vertex count must be non-negative, got {d}")
        adj = [0] * (d + 1)
        canon = set()
        for u, v in edges:
            if not (1 <= u <= d and 1 <= v <= d):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 1..{d}")
            if u == v:
                raise InputError(f"loop at vertex {u} is not allowed")
            canon.add(canonical_edge(u, v))
        ordered = tuple(sorted(canon))
        for u, v in ordered:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        self.d = d
        self.edges: tuple[Edge, ...] = ordered
        # index 0 is unused so that adjacency[v] reads naturally
        self.adjacency: tuple[int, ...] = tuple(adj)
        self._edge_index = {e: k for k, e in enumerate(ordered)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.d + 1)

    def has_edge(self, u: int, v: int) -> bool:
        if not (1 <= u <= self.d and 1 <= v <= self.d):
            return False
        return bool(self.adjacency[u] >> (v - 1) & 1)

    def edge_index(self, e: Edge) -> int:
        try:
            return self._edge_index[canonical_edge(*e)]
        except KeyError:
            raise InputError(f"{e} is not an edge of the graph") from None

    def neighbors(self, v: int) -> frozenset[int]:
        bits = self.adjacency[v]
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length())
            bits ^= low
        return frozenset(out)

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices() if not self.adjacency[v]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.d == other.d and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.d, self.edges))

    def __repr__(self) -> str:
        return f"Graph(d={self.d}, edges={list(self.edges)})"


def from_edge_list(d: int, pairs: Iterable[Sequence[int]]) -> Graph:
    if d < 1:
        raise InputError(f"a graph needs at least one vertex, got d={d}")
    return Graph(d, (tuple(p) for p in pairs))


def connected_components(G: Graph, drop_isolated: bool = False) -> list[frozenset[int]]:
    """Components in order of their smallest vertex."""
    seen = 0
    comps = []
    for s in G.vertices():
        if seen >> (s - 1) & 1:
            continue
        if drop_isolated and not G.adjacency[s]:
            continue
        comp = frontier = 1 << (s - 1)
        while frontier:
            nxt = 0
            bits = frontier
            while bits:
                low = bits & -bits
                nxt |= G.adjacency[low.bit_length()]
                bits ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(frozenset(v for v in G.vertices() if comp >> (v - 1) & 1))
    return comps


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) == 1


def bipartition(G: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two-color every component by BFS; ``None`` if some component has an odd cycle.

    The smallest vertex of each component goes to the first part.
    """
    color = [0] * (G.d + 1)
    for s in G.vertices():
        if color[s]:
            continue
        color[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if not color[w]:
                    color[w] = -color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    a = frozenset(v for v in G.vertices() if color[v] == 1)
    b = frozenset(v for v in G.vertices() if color[v] == -1)
    return a, b


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def _compatible_bits(adj: Sequence[int], e: Edge, f: Edge) -> bool:
    i, j = e
    k, l = f
    if len({i, j, k, l}) < 4:
        return False
    # with e and f present, a 4-cycle on {i,j,k,l} must use both of them plus
    # two disjoint cross edges: (j-k and i-l) or (j-l and i-k)
    return bool(
        (adj[j] >> (k - 1) & 1 and adj[i] >> (l - 1) & 1)
        or (adj[j] >> (l - 1) & 1 and adj[i] >> (k - 1) & 1)
    )


def cycle_compatible(G: Graph, e: Edge, f: Edge) -> bool:
    """True iff ``e`` and ``f`` are vertex-disjoint and lie on a common 4-cycle."""
    for x in (e, f):
        if not G.has_edge(*x):
            raise InputError(f"{tuple(x)} is not an edge of the graph")
    return _compatible_bits(G.adjacency, tuple(e), tuple(f))


def compatibility_masks(G: Graph) -> list[int]:
    """For each edge index, the bitmask of edge indices it is cycle-compatible with."""
    adj = G.adjacency
    edges = G.edges
    masks = [0] * len(edges)
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if _compatible_bits(adj, edges[a], edges[b]):
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return masks


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabeled to ``1..k`` in increasing vertex order.

    Returns the subgraph and ``labels`` with ``labels[i - 1]`` the original
    name of new vertex ``i``.
    """
    labels = sorted(set(vertices))
    for v in labels:
        if not 1 <= v <= G.d:
            raise InputError(f"vertex {v} outside 1..{G.d}")
    new = {v: i + 1 for i, v in enumerate(labels)}
    edges = [(new[u], new[v]) for u, v in G.edges if u in new and v in new]
    return Graph(len(labels), edges), labels


def relabel(G: Graph, perm: Sequence[int] | dict[int, int]) -> Graph:
    """Apply ``v -> perm(v)``; a sequence is read as ``perm[v - 1]``."""
    if isinstance(perm, dict):
        mapping = dict(perm)
    else:
        mapping = {v: perm[v - 1] for v in range(1, len(perm) + 1)}
    if sorted(mapping) != list(G.vertices()) or sorted(mapping.values()) != list(G.vertices()):
        raise InputError("relabeling must be a bijection on 1..d")
    return Graph(G.d, ((mapping[u], mapping[v]) for u, v in G.edges))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges)
        offset += H.d
    return Graph(offset, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``d m`` header plus ``m`` lines of ``u v`` (``#`` comments allowed)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise InputError("empty input: missing 'd m' header")
    lineno, header = rows[0]
    if len(header) != 2:
        raise InputError(f"line {lineno}: expected header 'd m', got {' '.join(header)!r}")
    try:
        d, m = int(header[0]), int(header[1])
    except ValueError:
        raise InputError(f"line {lineno}: header must be two integers") from None
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges but {len(body)} edge lines follow")
    pairs = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v'")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"line {lineno}: vertices must be integers") from None
    try:
        return from_edge_list(d, pairs)
    except InputError as exc:
        raise InputError(f"invalid graph: {exc}") from None


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.d} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(G: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(G))
