"""Separating weightings of edge polytopes.

A weighting ``a`` in ``{-1, 0, 1}^d`` stands for the hyperplane
``sum(a_i * x_i) = 0``. Edge ``(i, j)`` is positive, negative or zero by the
sign of ``a_i + a_j``. The weighting separates when there is at least one
positive and one negative edge and every (positive, negative) pair of edges is
cycle-compatible.

Searches report one canonical certificate per pattern: the first nonzero
weight is ``+1`` and, among the remaining choices, the greatest weighting in
vertex order (``+1`` preferred over ``0`` over ``-1``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from . import kernels
from .errors import InputError, ResourceError
from .graph import Edge, Graph, _compatible_bits, compatibility_masks, induced_subgraph, is_connected

TYPE_I = "I"
TYPE_II = "II"
GENERAL = "general"

SEARCH_CAP = 64
BRUTE_FORCE_CAP = 14

_CODES = {0: GENERAL, 1: TYPE_I, 2: TYPE_II}

Weighting = tuple[int, ...]


class EdgeSign(NamedTuple):
    edge: Edge
    sign: int
    signature: tuple[int, int]


@dataclass(frozen=True)
class Certificate:
    """A validated separating weighting together with its edge sign classes."""

    weights: Weighting
    pattern: str
    positive: tuple[Edge, ...]
    negative: tuple[Edge, ...]
    zero: tuple[Edge, ...]
    # vertices of the witnessing component when the graph is disconnected
    component: Optional[tuple[int, ...]] = None

    def negated(self) -> "Certificate":
        return Certificate(
            tuple(-x for x in self.weights), self.pattern, self.negative, self.positive, self.zero, self.component
        )

    def to_json(self) -> dict:
        out = {
            "weights": list(self.weights),
            "pattern": self.pattern,
            "positive": [list(e) for e in self.positive],
            "negative": [list(e) for e in self.negative],
            "zero": [list(e) for e in self.zero],
        }
        if self.component is not None:
            out["component"] = list(self.component)
        return out


def check_weighting(G: Graph, a: Sequence[int]) -> Weighting:
    a = tuple(int(x) for x in a)
    if len(a) != G.d:
        raise InputError(f"weighting has {len(a)} entries, graph has {G.d} vertices")
    bad = [x for x in a if x not in (-1, 0, 1)]
    if bad:
        raise InputError(f"weights must lie in {{-1, 0, 1}}, got {bad[0]}")
    return a


def edge_signs(G: Graph, a: Sequence[int]) -> list[EdgeSign]:
    a = check_weighting(G, a)
    out = []
    for u, v in G.edges:
        s = a[u - 1] + a[v - 1]
        out.append(EdgeSign((u, v), (s > 0) - (s < 0), tuple(sorted((a[u - 1], a[v - 1])))))
    return out


def sign_classes(G: Graph, a: Sequence[int]) -> tuple[list[Edge], list[Edge], list[Edge]]:
    pos, neg, zero = [], [], []
    for es in edge_signs(G, a):
        (pos if es.sign > 0 else neg if es.sign < 0 else zero).append(es.edge)
    return pos, neg, zero


def incompatible_pairs(G: Graph, a: Sequence[int]) -> list[tuple[Edge, Edge]]:
    """(positive, negative) edge pairs that are not cycle-compatible."""
    pos, neg, _ = sign_classes(G, a)
    adj = G.adjacency
    return [(e, f) for e in pos for f in neg if not _compatible_bits(adj, e, f)]


def is_general_valid(G: Graph, a: Sequence[int]) -> bool:
    """Separating without regard to pattern; works on disconnected graphs too."""
    pos, neg, _ = sign_classes(G, a)
    return bool(pos and neg) and not incompatible_pairs(G, a)


def weight_pattern(G: Graph, a: Sequence[int]) -> Optional[str]:
    """Pattern of the weights alone, ignoring separation."""
    a = check_weighting(G, a)
    if 0 not in a:
        return TYPE_I
    if any(a[u - 1] and a[u - 1] == a[v - 1] for u, v in G.edges):
        return None
    return TYPE_II


def is_separating(G: Graph, a: Sequence[int]) -> Optional[str]:
    """Pattern ``"I"`` or ``"II"`` when ``a`` is a patterned separating weighting, else None."""
    a = check_weighting(G, a)
    if not is_connected(G):
        raise InputError("is_separating needs a connected graph; reduce to components first")
    if not is_general_valid(G, a):
        return None
    return weight_pattern(G, a)


def make_certificate(G: Graph, a: Sequence[int], component: Optional[Sequence[int]] = None) -> Certificate:
    """Build a certificate for a connected graph, or for a zero-extended component
    weighting of a disconnected one (``component`` names the witness)."""
    a = check_weighting(G, a)
    if component is None:
        pattern = is_separating(G, a)
    else:
        H, labels = induced_subgraph(G, component)
        inside = set(labels)
        if any(a[v - 1] for v in G.vertices() if v not in inside):
            raise InputError("weights outside the witnessing component must be zero")
        pattern = is_separating(H, [a[v - 1] for v in labels]) if is_general_valid(G, a) else None
    if pattern is None:
        raise InputError(f"{list(a)} is not a separating weighting of the graph")
    pos, neg, zero = sign_classes(G, a)
    return Certificate(a, pattern, tuple(pos), tuple(neg), tuple(zero), tuple(component) if component else None)


def _kernel_args(G: Graph):
    eu = [u - 1 for u, _ in G.edges]
    ev = [v - 1 for _, v in G.edges]
    return G.d, eu, ev, compatibility_masks(G)


def _search_pre(G: Graph, cap: int) -> None:
    if G.d > cap:
        raise ResourceError(f"backtracking search is capped at d <= {cap}, got d={G.d}")
    if G.isolated_vertices():
        raise InputError("graph has isolated vertices")
    if not is_connected(G):
        raise InputError("search needs a connected graph; use component_reduce")


def _search(G: Graph, pattern: str, cap: int) -> Optional[Certificate]:
    _search_pre(G, cap)
    w = kernels.search(*_kernel_args(G), 1 if pattern == TYPE_I else 2)
    if w is None:
        return None
    cert = make_certificate(G, w)
    assert cert.pattern == pattern
    return cert


def search_type_I(G: Graph, cap: int = SEARCH_CAP) -> Optional[Certificate]:
    """Canonical type I certificate (all weights nonzero), or None."""
    return _search(G, TYPE_I, cap)


def search_type_II(G: Graph, cap: int = SEARCH_CAP) -> Optional[Certificate]:
    """Canonical type II certificate (some zero weight, no ``{1,1}``/``{-1,-1}`` edge), or None."""
    return _search(G, TYPE_II, cap)


def brute_force_certificates(G: Graph, cap: int = BRUTE_FORCE_CAP) -> list[tuple[Weighting, str]]:
    """All ``3^d`` weightings checked; returns every separating one with its
    pattern (``"I"``, ``"II"`` or ``"general"``)."""
    if G.d > cap:
        raise ResourceError(f"brute force is capped at d <= {cap}, got d={G.d}")
    if not is_connected(G):
        raise InputError("brute force needs a connected graph")
    return [(w, _CODES[code]) for w, code in kernels.brute_force(*_kernel_args(G))]


def canonical_key(w: Sequence[int]) -> tuple[int, ...]:
    """Sort key under which the canonical certificate is the minimum."""
    return tuple(-x for x in w)


def is_canonical_sign(w: Sequence[int]) -> bool:
    return next((x for x in w if x), 0) == 1
