"""Vertex-partition views of certificates, bipartite conversions and the
component structure of the zero subgraph."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Optional

from .decompose import TYPE_I, TYPE_II, Certificate, Weighting, is_separating, make_certificate, sign_classes
from .errors import InputError
from .graph import Graph, _compatible_bits, bipartition, connected_components, induced_subgraph, is_connected

_CELL_NAMES = {TYPE_I: ("V+", "V-"), TYPE_II: ("V1", "V2", "V3", "V4", "V5")}


@dataclass(frozen=True)
class PartitionView:
    """``(V+, V-)`` for type I, ``(V1, ..., V5)`` for type II."""

    pattern: str
    cells: tuple[frozenset[int], ...]

    def __post_init__(self):
        expected = len(_CELL_NAMES[self.pattern])
        if len(self.cells) != expected:
            raise InputError(f"type {self.pattern} partition needs {expected} cells, got {len(self.cells)}")
        object.__setattr__(self, "cells", tuple(frozenset(c) for c in self.cells))

    def relabel(self, labels: Sequence[int]) -> "PartitionView":
        return PartitionView(self.pattern, tuple(frozenset(labels[v - 1] for v in c) for c in self.cells))

    def weights(self, d: int) -> Weighting:
        """The induced weighting: ``V+``/``V1`` -> +1, ``V-``/``V2`` -> -1, rest 0."""
        a = [0] * d
        for v in self.cells[0]:
            a[v - 1] = 1
        for v in self.cells[1]:
            a[v - 1] = -1
        return tuple(a)

    def to_json(self) -> dict:
        out = {"pattern": self.pattern}
        for name, cell in zip(_CELL_NAMES[self.pattern], self.cells):
            out[name] = sorted(cell)
        return out


def _validated(G: Graph, c: Certificate) -> Certificate:
    if len(c.weights) != G.d or is_separating(G, c.weights) != c.pattern:
        raise InputError("certificate is not valid for this graph")
    return c


def _neighborhood(G: Graph, vertices) -> set[int]:
    out = set()
    for v in vertices:
        out |= G.neighbors(v)
    return out


def partition_view(G: Graph, c: Certificate) -> PartitionView:
    _validated(G, c)
    a = c.weights
    plus = frozenset(v for v in G.vertices() if a[v - 1] == 1)
    minus = frozenset(v for v in G.vertices() if a[v - 1] == -1)
    if c.pattern == TYPE_I:
        return PartitionView(TYPE_I, (plus, minus))
    zero = frozenset(G.vertices()) - plus - minus
    v4 = frozenset(_neighborhood(G, plus) & zero)
    v3 = frozenset(_neighborhood(G, minus) & zero)
    # a zero vertex next to both signs carries a positive and a negative edge
    if v3 & v4:
        raise InputError(f"zero vertices {sorted(v3 & v4)} touch both signs; certificate cannot be valid")
    return PartitionView(TYPE_II, (plus, minus, v3, v4, zero - v3 - v4))


def _check_partition(G: Graph, p: PartitionView | Sequence, pattern: str) -> PartitionView:
    if not isinstance(p, PartitionView):
        p = PartitionView(pattern, tuple(p))
    if p.pattern != pattern:
        raise InputError(f"expected a type {pattern} partition, got type {p.pattern}")
    seen: set[int] = set()
    for cell in p.cells:
        if seen & cell:
            raise InputError("partition cells overlap")
        seen |= cell
    if seen != set(G.vertices()):
        raise InputError("partition cells do not cover the vertex set exactly")
    return p


def _edges_between(G: Graph, a: frozenset[int], b: frozenset[int]) -> list:
    return [(u, v) for u, v in G.edges if (u in a and v in b) or (u in b and v in a)]


def _all_compatible(G: Graph, es, fs) -> bool:
    adj = G.adjacency
    return all(_compatible_bits(adj, e, f) for e in es for f in fs)


def verify_partition_I(G: Graph, p: PartitionView | Sequence) -> bool:
    vp, vm = _check_partition(G, p, TYPE_I).cells
    plus_edges = _edges_between(G, vp, vp)
    minus_edges = _edges_between(G, vm, vm)
    return bool(plus_edges and minus_edges) and _all_compatible(G, plus_edges, minus_edges)


def verify_partition_II(G: Graph, p: PartitionView | Sequence) -> bool:
    v1, v2, v3, v4, v5 = _check_partition(G, p, TYPE_II).cells
    if _edges_between(G, v1, v1) or _edges_between(G, v2, v2):
        return False
    for a, b in ((v1, v3), (v1, v5), (v2, v4), (v2, v5)):
        if _edges_between(G, a, b):
            return False
    e14 = _edges_between(G, v1, v4)
    e23 = _edges_between(G, v2, v3)
    return bool(e14 and e23) and _all_compatible(G, e14, e23)


def bipartite_zero_weighting(G: Graph) -> Optional[Weighting]:
    """All-nonzero weighting making every edge a zero edge, or None for non-bipartite G."""
    parts = bipartition(G)
    if parts is None:
        return None
    a = tuple(1 if v in parts[0] else -1 for v in G.vertices())
    assert all(a[u - 1] + a[v - 1] == 0 for u, v in G.edges)
    return a


def convert_type_I_to_II(G: Graph, bip: tuple, c: Certificate) -> Certificate:
    """Zero out ``+1`` vertices on the left side and ``-1`` vertices on the right."""
    left, right = (frozenset(x) for x in bip)
    if left & right or left | right != frozenset(G.vertices()):
        raise InputError("bipartition must split the vertex set into two disjoint parts")
    if any((u in left) == (v in left) for u, v in G.edges):
        raise InputError("not a bipartition of the graph: some edge stays inside one part")
    if not is_connected(G):
        raise InputError("conversion expects a connected bipartite graph")
    if c.pattern != TYPE_I:
        raise InputError("conversion starts from a type I certificate")
    _validated(G, c)
    return make_certificate(G, converted_weights((left, right), c.weights))


def converted_weights(bip: tuple, weights: Sequence[int]) -> Weighting:
    """Zero out ``+1`` on the left part and ``-1`` on the right part; other weights stay."""
    left, right = (frozenset(x) for x in bip)
    return tuple(
        0 if (v in left and x == 1) or (v in right and x == -1) else x for v, x in enumerate(weights, 1)
    )


def zero_subgraph(G: Graph, c: Certificate) -> Graph:
    """The graph of zero edges, on the same vertex labels.

    Vertices not touched by a zero edge are isolated here and do not belong to
    the zero subgraph; use ``connected_components(..., drop_isolated=True)``.
    """
    _, _, zero = sign_classes(G, c.weights)
    return Graph(G.d, zero)


@dataclass
class StructureResult:
    clause: Optional[str]
    passed: bool
    components: list[list[int]] = field(default_factory=list)
    bipartite: list[bool] = field(default_factory=list)
    empty: bool = False
    message: str = ""

    def relabel(self, labels: Sequence[int]) -> "StructureResult":
        comps = [sorted(labels[v - 1] for v in comp) for comp in self.components]
        return StructureResult(self.clause, self.passed, comps, list(self.bipartite), self.empty, self.message)

    def to_json(self) -> dict:
        return {
            "clause": self.clause,
            "passed": self.passed,
            "components": self.components,
            "bipartite": self.bipartite,
            "empty": self.empty,
            "message": self.message,
        }


def structure_check(G: Graph, c: Certificate) -> StructureResult:
    """Check the component shape of the zero subgraph required by the pair
    (bipartiteness of G, certificate pattern).

    * non-bipartite, type I: one component, bipartite (clause ``a``)
    * non-bipartite, type II: two components, one bipartite, one not (``b``)
    * bipartite, type I: exactly two components (``c``)

    Bipartite graphs with a type II certificate are not constrained.
    """
    if not is_connected(G):
        raise InputError("structure check expects a connected graph")
    _validated(G, c)
    G0 = zero_subgraph(G, c)
    comps = connected_components(G0, drop_isolated=True)
    flags = [bipartition(induced_subgraph(G0, comp)[0]) is not None for comp in comps]
    result = StructureResult(None, True, [sorted(comp) for comp in comps], flags, empty=not comps)
    g_bip = bipartition(G) is not None
    if not g_bip and c.pattern == TYPE_I:
        result.clause = "a"
        result.passed = len(comps) == 1 and flags[0]
        result.message = "zero subgraph must be connected and bipartite"
    elif not g_bip and c.pattern == TYPE_II:
        result.clause = "b"
        result.passed = len(comps) == 2 and sorted(flags) == [False, True]
        result.message = "zero subgraph must have one bipartite and one non-bipartite component"
    elif c.pattern == TYPE_I:
        result.clause = "c"
        result.passed = len(comps) == 2
        result.message = "zero subgraph must have exactly two components"
    else:
        result.message = "no constraint for bipartite graphs with a type II certificate"
    if result.empty:
        result.message += " (no zero edges)"
    return result
