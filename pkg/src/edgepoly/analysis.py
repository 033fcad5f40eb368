"""Per-graph analysis: run both searches, reduce disconnected graphs to their
components, attach partition views and structure checks, and optionally
cross-check everything against the exhaustive oracle."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .decompose import (
    BRUTE_FORCE_CAP,
    GENERAL,
    SEARCH_CAP,
    TYPE_I,
    TYPE_II,
    Certificate,
    brute_force_certificates,
    canonical_key,
    is_canonical_sign,
    make_certificate,
    search_type_I,
    search_type_II,
)
from .errors import InputError
from .graph import Graph, connected_components, induced_subgraph, is_bipartite
from .polytope import dimension
from .structure import PartitionView, StructureResult, partition_view, structure_check


@dataclass
class AnalysisReport:
    decomposable: bool
    type_i: Optional[Certificate] = None
    type_ii: Optional[Certificate] = None
    partitions: dict[str, PartitionView] = field(default_factory=dict)
    structure: dict[str, StructureResult] = field(default_factory=dict)
    graph: dict = field(default_factory=dict)
    components: list[dict] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    oracle: Optional[dict] = None

    @property
    def patterns(self) -> tuple[bool, bool]:
        return self.type_i is not None, self.type_ii is not None

    def to_json(self) -> dict:
        out = {
            "decomposable": self.decomposable,
            "graph": self.graph,
            "type_i": self.type_i.to_json() if self.type_i else None,
            "type_ii": self.type_ii.to_json() if self.type_ii else None,
            "partitions": {k: v.to_json() for k, v in self.partitions.items()},
            "structure": {k: v.to_json() for k, v in self.structure.items()},
            "timings": {k: round(v, 6) for k, v in self.timings.items()},
        }
        if self.components:
            out["components"] = self.components
        if self.oracle is not None:
            out["oracle"] = self.oracle
        return out


def _check_input(G: Graph) -> None:
    if G.m == 0:
        raise InputError("graph has no edges")
    isolated = G.isolated_vertices()
    if isolated:
        raise InputError(f"graph has isolated vertices {isolated}")


def _graph_info(G: Graph) -> dict:
    comps = connected_components(G)
    return {
        "d": G.d,
        "m": G.m,
        "connected": len(comps) == 1,
        "bipartite": is_bipartite(G),
        "dimension": dimension(G),
        "components": [sorted(c) for c in comps],
    }


def _analyze_connected(G: Graph, cap: int) -> AnalysisReport:
    report = AnalysisReport(False)
    t0 = time.perf_counter()
    report.type_i = search_type_I(G, cap)
    t1 = time.perf_counter()
    report.type_ii = search_type_II(G, cap)
    t2 = time.perf_counter()
    report.timings.update(search_type_i=t1 - t0, search_type_ii=t2 - t1)
    for cert in (report.type_i, report.type_ii):
        if cert is not None:
            report.partitions[cert.pattern] = partition_view(G, cert)
            report.structure[cert.pattern] = structure_check(G, cert)
    report.timings["structure"] = time.perf_counter() - t2
    report.decomposable = report.type_i is not None or report.type_ii is not None
    return report


def decide(G: Graph, cap: int = SEARCH_CAP) -> AnalysisReport:
    """Decomposability verdict with canonical certificates for each pattern."""
    _check_input(G)
    start = time.perf_counter()
    if len(connected_components(G)) > 1:
        report = component_reduce(G, cap)
    else:
        report = _analyze_connected(G, cap)
    report.graph = _graph_info(G)
    report.timings["total"] = time.perf_counter() - start
    return report


def component_reduce(G: Graph, cap: int = SEARCH_CAP) -> AnalysisReport:
    """Decide each component; the graph is decomposable iff some component is.

    Each reported certificate is the first witnessing component's certificate
    (components ordered by smallest vertex), extended by zero weights.
    """
    _check_input(G)
    report = AnalysisReport(False)
    for comp in connected_components(G):
        H, labels = induced_subgraph(G, comp)
        sub = _analyze_connected(H, cap)
        report.components.append(
            {"vertices": labels, "type_i": sub.type_i is not None, "type_ii": sub.type_ii is not None}
        )
        for name, val in sub.timings.items():
            report.timings[name] = report.timings.get(name, 0.0) + val
        for pattern, cert in ((TYPE_I, sub.type_i), (TYPE_II, sub.type_ii)):
            if cert is None or pattern in report.partitions:
                continue
            a = [0] * G.d
            for i, v in enumerate(labels):
                a[v - 1] = cert.weights[i]
            ext = make_certificate(G, a, component=labels)
            if pattern == TYPE_I:
                report.type_i = ext
            else:
                report.type_ii = ext
            report.partitions[pattern] = sub.partitions[pattern].relabel(labels)
            report.structure[pattern] = sub.structure[pattern].relabel(labels)
    report.decomposable = any(c["type_i"] or c["type_ii"] for c in report.components)
    return report


def _oracle_connected(H: Graph, sub: AnalysisReport, cap: int) -> dict:
    found = brute_force_certificates(H, cap)
    by_pattern = {TYPE_I: [], TYPE_II: [], GENERAL: []}
    for w, pattern in found:
        by_pattern[pattern].append(w)
    out = {
        "d": H.d,
        "general_valid": len(found),
        "type_i": len(by_pattern[TYPE_I]),
        "type_ii": len(by_pattern[TYPE_II]),
        "unpatterned": len(by_pattern[GENERAL]),
        "discrepancies": [],
    }
    for pattern, cert in ((TYPE_I, sub.type_i), (TYPE_II, sub.type_ii)):
        candidates = [w for w in by_pattern[pattern] if is_canonical_sign(w)]
        if bool(candidates) != (cert is not None):
            out["discrepancies"].append(f"type {pattern}: search={cert is not None} oracle={bool(candidates)}")
        elif cert is not None and min(candidates, key=canonical_key) != cert.weights:
            out["discrepancies"].append(f"type {pattern}: search certificate is not the canonical one")
    if found and not (by_pattern[TYPE_I] or by_pattern[TYPE_II]):
        out["discrepancies"].append("separating weighting exists but none is patterned")
    return out


def oracle_check(G: Graph, report: AnalysisReport, cap: int = BRUTE_FORCE_CAP) -> dict:
    """Brute-force every component and compare with the searches in ``report``."""
    comps = connected_components(G)
    if len(comps) == 1:
        result = _oracle_connected(G, report, cap)
        result["agrees"] = not result["discrepancies"]
        return result
    parts = []
    for comp in comps:
        H, _ = induced_subgraph(G, comp)
        parts.append(_oracle_connected(H, _analyze_connected(H, SEARCH_CAP), cap))
    oracle_decomposable = any(p["type_i"] or p["type_ii"] for p in parts)
    discrepancies = [msg for p in parts for msg in p["discrepancies"]]
    if oracle_decomposable != report.decomposable:
        discrepancies.append("component verdict disagrees with oracle")
    return {"components": parts, "discrepancies": discrepancies, "agrees": not discrepancies}
