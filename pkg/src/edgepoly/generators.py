"""Graph families: complete, complete multipartite, cycles, paths, joined
tri-pans and 4-cycle attachment, plus exhaustive labeled enumeration."""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import combinations

from . import kernels
from .errors import InputError
from .graph import Edge, Graph

DEFAULT_ENUM_CAP = 7
_CHUNK = 1 << 15


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InputError(msg)


def complete(d: int) -> Graph:
    _require(d >= 1, "complete graph needs d >= 1")
    return Graph(d, combinations(range(1, d + 1), 2))


def complete_multipartite(*sizes: int) -> Graph:
    _require(len(sizes) >= 1 and all(s >= 1 for s in sizes), "part sizes must be >= 1")
    part = []
    for p, s in enumerate(sizes):
        part.extend([p] * s)
    d = len(part)
    edges = [(u + 1, v + 1) for u, v in combinations(range(d), 2) if part[u] != part[v]]
    return Graph(d, edges)


def cycle(n: int) -> Graph:
    _require(n >= 3, "a simple cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def tri_pan_labels(n: int) -> dict[str, int]:
    """Vertex numbering used by :func:`tri_pan`: apex ``x`` is 1, spoke ``i`` is
    ``i + 1`` and base vertex ``y_j`` is ``n + 2 + j``."""
    labels = {"x": 1}
    labels.update({str(i): i + 1 for i in range(1, n + 1)})
    labels.update({f"y{j}": n + 2 + j for j in range(n + 1)})
    return labels


def tri_pan(n: int) -> Graph:
    """The n-joined tri-pan: ``2n + 2`` vertices and ``4n`` edges."""
    _require(n >= 1, "tri-pan needs n >= 1")
    x = 1
    y = lambda j: n + 2 + j  # noqa: E731
    edges = []
    for i in range(1, n + 1):
        s = i + 1
        edges += [(x, s), (s, y(i - 1)), (s, y(i)), (y(i - 1), y(i))]
    return Graph(2 * n + 2, edges)


def attach_four_cycle(G: Graph, e: Sequence[int]) -> Graph:
    """Join a path ``i - x1 - x2 - j`` through two fresh vertices onto edge ``(i, j)``.

    ``x1 = d + 1`` hangs off the first endpoint as given, ``x2 = d + 2`` off the second.
    """
    i, j = e
    _require(G.has_edge(i, j), f"({i}, {j}) is not an edge of the base graph")
    x1, x2 = G.d + 1, G.d + 2
    return Graph(G.d + 2, list(G.edges) + [(i, x1), (x1, x2), (x2, j)])


FAMILIES = ("complete", "multipartite", "cycle", "path", "tripan", "attach")


def generate_family(family: str, *params, base: Graph | None = None, edge: Edge | None = None) -> Graph:
    if family == "complete":
        _require(len(params) == 1, "complete takes one size")
        return complete(int(params[0]))
    if family in ("multipartite", "complete_multipartite"):
        _require(len(params) >= 1, "multipartite takes one or more part sizes")
        return complete_multipartite(*(int(p) for p in params))
    if family == "cycle":
        _require(len(params) == 1, "cycle takes one size")
        return cycle(int(params[0]))
    if family == "path":
        _require(len(params) == 1, "path takes one size")
        return path(int(params[0]))
    if family in ("tripan", "tri_pan"):
        _require(len(params) == 1, "tripan takes one size")
        return tri_pan(int(params[0]))
    if family in ("attach", "attach_four_cycle"):
        _require(base is not None and edge is not None, "attach needs a base graph and an edge")
        return attach_four_cycle(base, edge)
    raise InputError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def pair_list(n: int) -> list[Edge]:
    """Bit ``k`` of an enumeration mask stands for ``pair_list(n)[k]``."""
    return [(i + 1, j + 1) for i, j in combinations(range(n), 2)]


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = pair_list(n)
    return Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def connected_masks(n: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[int]:
    if not 1 <= n <= cap:
        raise InputError(f"enumeration size must lie in 1..{cap}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    for lo in range(0, total, _CHUNK):
        yield from kernels.connected_masks(n, lo, min(total, lo + _CHUNK))


def enumerate_connected_graphs(n: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Graph]:
    """Every labeled connected simple graph on ``n`` vertices, once each, in mask order."""
    for mask in connected_masks(n, cap):
        yield graph_from_mask(n, mask)
