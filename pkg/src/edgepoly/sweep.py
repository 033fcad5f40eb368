"""Exhaustive sweep over labeled connected graphs, checking every structural claim
against the searches and, optionally, against brute force."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

from . import kernels
from .analysis import decide
from .decompose import (
    BRUTE_FORCE_CAP,
    GENERAL,
    TYPE_I,
    TYPE_II,
    Certificate,
    brute_force_certificates,
    canonical_key,
    edge_signs,
    is_canonical_sign,
    is_separating,
    make_certificate,
)
from .errors import InputError
from .generators import DEFAULT_ENUM_CAP, connected_masks, graph_from_mask
from .graph import Graph, bipartition
from .structure import convert_type_I_to_II, partition_view, structure_check, verify_partition_I, verify_partition_II

CATEGORIES = ("both", "type_i_only", "type_ii_only", "neither")


def category(has_i: bool, has_ii: bool) -> str:
    if has_i and has_ii:
        return "both"
    if has_i:
        return "type_i_only"
    if has_ii:
        return "type_ii_only"
    return "neither"


def _round_trip(G: Graph, cert: Certificate) -> list[str]:
    out = []
    view = partition_view(G, cert)
    verify = verify_partition_I if cert.pattern == TYPE_I else verify_partition_II
    if not verify(G, view):
        out.append(f"partition view of type {cert.pattern} certificate fails verification")
    if is_separating(G, view.weights(G.d)) != cert.pattern:
        out.append(f"type {cert.pattern} partition does not induce a separating weighting")
    return out


def check_graph(G: Graph, oracle: bool = False, oracle_cap: int = BRUTE_FORCE_CAP) -> dict:
    """Run every claim check on one connected graph with at least one edge.

    ``violations`` are failures of checks on search certificates; ``findings``
    are structure-check failures on other separating weightings found by the
    oracle.
    """
    report = decide(G)
    has_i, has_ii = report.patterns
    violations: list[str] = []
    findings: list[str] = []
    certs = [c for c in (report.type_i, report.type_ii) if c is not None]
    if report.decomposable != bool(certs):
        violations.append("verdict disagrees with certificates")

    for cert in certs:
        violations.extend(_round_trip(G, cert))
        if not structure_check(G, cert).passed:
            violations.append(f"structure check fails for search certificate {cert.weights}")

    bip = bipartition(G)
    if bip is not None:
        if has_i != has_ii:
            violations.append(f"bipartite graph with type I={has_i} but type II={has_ii}")
        if report.type_i is not None:
            conv = convert_type_I_to_II(G, bip, report.type_i)
            if [s.sign for s in edge_signs(G, conv.weights)] != [s.sign for s in edge_signs(G, report.type_i.weights)]:
                violations.append("type I to II conversion changed an edge sign")

    if oracle:
        found = brute_force_certificates(G, oracle_cap)
        table = dict(found)
        for pattern, cert in ((TYPE_I, report.type_i), (TYPE_II, report.type_ii)):
            cands = [w for w, p in found if p == pattern and is_canonical_sign(w)]
            if bool(cands) != (cert is not None):
                violations.append(f"oracle discrepancy on type {pattern}")
            elif cert is not None and min(cands, key=canonical_key) != cert.weights:
                violations.append(f"type {pattern} certificate is not canonical")
        if found and not any(p != GENERAL for _, p in found):
            violations.append("pattern reduction fails: only unpatterned separating weightings")
        for w, p in found:
            if table.get(tuple(-x for x in w)) != p:
                violations.append(f"sign flip of {w} is not equally valid")
            if p == GENERAL or not is_canonical_sign(w):
                continue
            cert = make_certificate(G, w)
            for msg in _round_trip(G, cert):
                violations.append(f"{msg} ({w})")
            if not structure_check(G, cert).passed:
                findings.append(f"structure check fails for {w}")
    return {"category": category(has_i, has_ii), "violations": violations, "findings": findings}


def _check_mask(n: int, mask: int, oracle: bool, oracle_cap: int) -> tuple[str, list[str], list[str]]:
    G = graph_from_mask(n, mask)
    if G.m == 0:
        return "skipped", [], []
    res = check_graph(G, oracle, oracle_cap)
    tag = f"n={n} edges={list(G.edges)}"
    return (
        res["category"],
        [f"{tag}: {v}" for v in res["violations"]],
        [f"{tag}: {f}" for f in res["findings"]],
    )


def sweep(
    max_n: int,
    oracle: bool = False,
    jobs: int = 1,
    oracle_cap: int = BRUTE_FORCE_CAP,
    max_sweep_n: int = DEFAULT_ENUM_CAP,
    min_n: int = 1,
) -> dict:
    """Enumerate connected graphs on ``min_n..max_n`` vertices and aggregate results
    in enumeration order (independent of ``jobs``)."""
    if not 1 <= max_n <= max_sweep_n:
        raise InputError(f"sweep size must lie in 1..{max_sweep_n}, got {max_n}")
    if oracle and max_n > oracle_cap:
        raise InputError(f"oracle is capped at d <= {oracle_cap}")
    per_n = {}
    violations: list[str] = []
    findings: list[str] = []
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for n in range(min_n, max_n + 1):
            masks = list(connected_masks(n, max_sweep_n))
            args = (repeat(n), masks, repeat(oracle), repeat(oracle_cap))
            if pool is None:
                results = map(_check_mask, *args)
            else:
                results = pool.map(_check_mask, *args, chunksize=256)
            counts = dict.fromkeys(("graphs", "skipped", *CATEGORIES), 0)
            for cat, viol, find in results:
                counts["graphs"] += 1
                counts[cat] += 1
                violations.extend(viol)
                findings.extend(find)
            counts["decomposable"] = counts["both"] + counts["type_i_only"] + counts["type_ii_only"]
            per_n[str(n)] = counts
    finally:
        if pool is not None:
            pool.shutdown()
    totals = {k: sum(c[k] for c in per_n.values()) for k in ("graphs", "skipped", "decomposable", *CATEGORIES)}
    return {
        "max_n": max_n,
        "oracle": oracle,
        "backend": kernels.BACKEND,
        "totals": totals,
        "per_n": per_n,
        "violations": violations,
        "findings": findings,
    }
