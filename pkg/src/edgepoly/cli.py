"""Command-line front end.

JSON goes to stdout; human-readable notes go to stderr. Exit codes:
``analyze`` 0 decomposable / 1 indecomposable, ``verify`` 0 valid / 1 invalid,
``sweep`` 0 no violations / 1 violations, and 2 for any usage or input error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .analysis import decide, oracle_check
from .decompose import BRUTE_FORCE_CAP, SEARCH_CAP, edge_signs, incompatible_pairs, is_general_valid, weight_pattern
from .errors import InputError, ResourceError
from .generators import DEFAULT_ENUM_CAP, FAMILIES, generate_family
from .graph import format_edge_list, read_edge_list
from .sweep import sweep

EXIT_ERROR = 2
_WEIGHT_LIST = re.compile(r"^-\d+(,-?\d+)*$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _parse_edge(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"edge must look like 'u,v', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"edge must look like 'u,v', got {text!r}") from None


def _parse_weights(text: str) -> list[int]:
    try:
        weights = [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"weights must be a comma-separated list of -1, 0, 1: {text!r}") from None
    if any(x not in (-1, 0, 1) for x in weights):
        raise InputError(f"weights must lie in {{-1, 0, 1}}: {text!r}")
    return weights


def cmd_analyze(args) -> int:
    G = read_edge_list(args.file)
    report = decide(G, args.max_search_d)
    if args.oracle:
        report.oracle = oracle_check(G, report, args.max_oracle_d)
        if not report.oracle["agrees"]:
            _note("oracle discrepancy: " + "; ".join(report.oracle["discrepancies"]))
    _emit(report.to_json())
    verdict = "decomposable" if report.decomposable else "indecomposable"
    kinds = [p for p, c in (("I", report.type_i), ("II", report.type_ii)) if c is not None]
    _note(f"{args.file}: {verdict}" + (f" (type {', '.join(kinds)})" if kinds else ""))
    return 0 if report.decomposable else 1


def cmd_generate(args) -> int:
    if args.family == "attach":
        if len(args.params) != 1 or args.edge is None:
            raise InputError("usage: generate attach BASE_FILE --edge u,v")
        G = generate_family("attach", base=read_edge_list(args.params[0]), edge=_parse_edge(args.edge))
    else:
        try:
            params = [int(p) for p in args.params]
        except ValueError:
            raise InputError(f"{args.family} parameters must be integers") from None
        G = generate_family(args.family, *params)
    text = format_edge_list(G)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        _note(f"wrote {args.out}: {G.d} vertices, {G.m} edges")
    return 0


def cmd_verify(args) -> int:
    text = args.weights_opt if args.weights_opt is not None else args.weights
    if text is None:
        raise InputError("verify needs a weight list, e.g. --weights=-1,0,1")
    weights = _parse_weights(text)
    G = read_edge_list(args.file)
    signs = edge_signs(G, weights)
    valid = is_general_valid(G, weights)
    pattern = weight_pattern(G, weights) if valid else None
    failures = incompatible_pairs(G, weights)
    npos = sum(s.sign > 0 for s in signs)
    nneg = sum(s.sign < 0 for s in signs)
    reasons = []
    if not npos:
        reasons.append("no positive edge")
    if not nneg:
        reasons.append("no negative edge")
    if failures:
        reasons.append(f"{len(failures)} positive/negative pairs not cycle-compatible")
    _emit(
        {
            "valid": valid,
            "pattern": pattern,
            "weights": weights,
            "signs": [{"edge": list(s.edge), "sign": s.sign, "signature": list(s.signature)} for s in signs],
            "incompatible": [[list(e), list(f)] for e, f in failures],
            "reasons": reasons,
        }
    )
    for s in signs:
        _note(f"  {s.edge[0]:>3} {s.edge[1]:>3}  {'+0-'[1 - s.sign]}  {{{s.signature[0]}, {s.signature[1]}}}")
    _note("valid" + (f", type {pattern}" if pattern else ", no pattern") if valid else "invalid: " + "; ".join(reasons))
    return 0 if valid else 1


def cmd_sweep(args) -> int:
    summary = sweep(
        args.max_n,
        oracle=args.oracle,
        jobs=args.jobs,
        oracle_cap=args.max_oracle_d,
        max_sweep_n=args.max_sweep_n,
    )
    _emit(summary)
    t = summary["totals"]
    _note(
        f"{t['graphs']} graphs ({t['skipped']} skipped): {t['both']} both, {t['type_i_only']} type I only, "
        f"{t['type_ii_only']} type II only, {t['neither']} neither; {len(summary['violations'])} violations"
    )
    return 0 if not summary["violations"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="edgepoly", description="Decomposability of edge polytopes of simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=["json"], default="json", help="machine output format")

    p = sub.add_parser("analyze", help="decide decomposability of a graph file")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("--max-oracle-d", type=int, default=BRUTE_FORCE_CAP)
    p.add_argument("--max-search-d", type=int, default=SEARCH_CAP)
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="write a graph family as an edge list")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", help="sizes, or BASE_FILE for attach")
    p.add_argument("--edge", help="edge u,v for attach")
    p.add_argument("-o", "--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a proposed weighting")
    p.add_argument("file")
    p.add_argument("weights", nargs="?", help="comma list such as 1,0,-1")
    p.add_argument("--weights", dest="weights_opt", metavar="LIST")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="check all claims on every connected graph up to max_n")
    p.add_argument("max_n", type=int)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-oracle-d", type=int, default=BRUTE_FORCE_CAP)
    p.add_argument("--max-sweep-n", type=int, default=DEFAULT_ENUM_CAP)
    common(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def _protect_weights(argv: list[str]) -> list[str]:
    # "-1,0,1" would otherwise be taken for an option
    return [f"--weights={a}" if _WEIGHT_LIST.match(a) else a for a in argv]


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv[:1] == ["verify"]:
        argv = _protect_weights(argv)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ResourceError, OSError) as exc:
        _note(f"error: {exc}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
