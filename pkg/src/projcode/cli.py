"""Command-line interface.

    projcode verify <claim> [params] [--json out.json] [--seed N]
    projcode graph build n k q [--predicate P] [--dot out.dot] [--json out.json]
    projcode construct <name> [params]
    projcode code profile <matrix-file>

Exit codes: 0 all pass/skip, 1 some check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .codes import code_profile
from .constructions import (fixture_binary_15_4, fixture_ternary_13_3,
                            lemma14_pair, remark1_pair,
                            simplex_generator_matrix)
from .errors import GuardExceeded, NotCovered
from .graphs import build_graph, graph_to_dot, graph_to_json
from .linalg import canonicalize, format_matrix, parse_matrix
from . import verify as V

_CLAIMS = ("theorem1", "theorem2", "grassmann", "corollary1", "corollary2",
           "lemma11", "lemma12", "lemma13", "cex-binary", "cex-ternary",
           "constructions", "all")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="projcode",
                                  description=__doc__.splitlines()[0])
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a named claim check")
    v.add_argument("claim", choices=_CLAIMS)
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--m", type=int, help="meet-gap parameter for lemma13")
    v.add_argument("--u-dim", type=int, default=0, help="inner dimension for lemma12")
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", metavar="PATH", help="write report(s) as JSON")
    v.add_argument("--max-vertices", type=int, default=V.MAX_VERTICES_DEFAULT)
    v.add_argument("--max-scan", type=int, default=V.MAX_SCAN_DEFAULT)
    v.add_argument("--profile", default="desk", choices=["desk"],
                   help="parameter battery used by 'verify all'")

    g = sub.add_parser("graph", help="build and export a code graph")
    gsub = g.add_subparsers(dest="graph_command", required=True)
    gb = gsub.add_parser("build")
    gb.add_argument("n", type=int)
    gb.add_argument("k", type=int)
    gb.add_argument("q", type=int)
    gb.add_argument("--predicate", default="projective",
                    choices=["all", "projective", "simplex"])
    gb.add_argument("--dot", metavar="PATH")
    gb.add_argument("--json", metavar="PATH")
    gb.add_argument("--max-vertices", type=int, default=V.MAX_VERTICES_DEFAULT)

    c = sub.add_parser("construct", help="emit a construction as matrix text")
    c.add_argument("name", choices=["simplex", "lemma14", "remark1",
                                    "binary-15-4", "ternary-13-3"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--with-candidates", action="store_true",
                   help="for ternary-13-3, also emit the 16 candidates")

    p = sub.add_parser("code", help="inspect a code given by a matrix file")
    psub = p.add_subparsers(dest="code_command", required=True)
    pp = psub.add_parser("profile")
    pp.add_argument("matrix_file")
    return top


def _require(args, *names) -> list[int]:
    vals = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise SystemExit(f"projcode: --{name} is required for this claim")
        vals.append(v)
    return vals


def _run_verify(args) -> int:
    claim = args.claim
    seed = args.seed
    if claim == "all":
        reports = V.run_all(args.max_vertices, args.max_scan, seed)
    elif claim == "theorem1":
        n, k, q = _require(args, "n", "k", "q")
        reports = [V.check_theorem1(n, k, q, args.max_vertices, seed=seed)]
    elif claim == "theorem2":
        q, k = _require(args, "q", "k")
        reports = [V.check_theorem2(q, k, args.max_scan, seed=seed)]
    elif claim == "grassmann":
        n, k, q = _require(args, "n", "k", "q")
        reports = [V.check_grassmann(n, k, q, args.max_vertices, seed=seed)]
    elif claim == "corollary1":
        q, k = _require(args, "q", "k")
        reports = [V.check_corollary1(q, k, args.max_vertices, seed=seed)]
    elif claim == "corollary2":
        reports = [V.check_corollary2(seed=seed)]
    elif claim == "lemma11":
        n, k, q = _require(args, "n", "k", "q")
        reports = [V.check_lemma11(n, k, q, args.trials or 100, seed=seed)]
    elif claim == "lemma12":
        n, k, q = _require(args, "n", "k", "q")
        reports = [V.check_lemma12(n, k, q, args.u_dim, args.trials or 100, seed=seed)]
    elif claim == "lemma13":
        n, k, q = _require(args, "n", "k", "q")
        reports = [V.check_lemma13(n, k, q, args.m or 2, args.trials or 25, seed=seed)]
    elif claim == "cex-binary":
        reports = [V.check_counterexample("binary-15-4", seed=seed)]
    elif claim == "cex-ternary":
        reports = [V.check_counterexample("ternary-13-3", seed=seed)]
    elif claim == "constructions":
        reports = [V.check_constructions(seed=seed)]
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit(2)

    for r in reports:
        summary = ", ".join(f"{k2}={v2}" for k2, v2 in list(r.counts.items())[:4])
        print(f"{r.claim} {json.dumps(r.params)}: {r.status.upper()} ({summary}) "
              f"[{r.wall_time:.2f}s]")
    if args.json:
        payload = ([r.to_dict() for r in reports] if len(reports) > 1
                   else reports[0].to_dict())
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
    return 1 if any(r.status == V.FAIL for r in reports) else 0


def _run_graph(args) -> int:
    g = build_graph(args.n, args.k, args.q, args.predicate,
                    max_vertices=args.max_vertices)
    print(f"graph({args.n},{args.k},{args.q},{args.predicate}): "
          f"{g.order} vertices, {g.num_edges} edges")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(graph_to_dot(g))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(graph_to_json(g), fh, indent=2)
    return 0


def _run_construct(args) -> int:
    if args.name == "simplex":
        q, k = _require(args, "q", "k")
        sys.stdout.write(format_matrix(simplex_generator_matrix(q, k)))
        return 0
    if args.name == "lemma14":
        n, k, q = _require(args, "n", "k", "q")
        pair = lemma14_pair(n, k, q)
    elif args.name == "remark1":
        n, k, q = _require(args, "n", "k", "q")
        pair = remark1_pair(n, k, q)
    elif args.name == "binary-15-4":
        pair = fixture_binary_15_4()
    else:
        pair, candidates = fixture_ternary_13_3()
        sys.stdout.write(format_matrix(pair.generators[0]))
        sys.stdout.write("\n")
        sys.stdout.write(format_matrix(pair.generators[1]))
        if args.with_candidates:
            for cand in candidates:
                sys.stdout.write("\n")
                sys.stdout.write(cand.to_text())
        return 0
    sys.stdout.write(format_matrix(pair.generators[0]))
    sys.stdout.write("\n")
    sys.stdout.write(format_matrix(pair.generators[1]))
    return 0


def _run_code(args) -> int:
    with open(args.matrix_file) as fh:
        mat = parse_matrix(fh.read())
    profile = code_profile(canonicalize(mat))
    print(json.dumps(profile.to_dict(), indent=2, sort_keys=True))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "graph":
            return _run_graph(args)
        if args.command == "construct":
            return _run_construct(args)
        if args.command == "code":
            return _run_code(args)
    except (GuardExceeded, NotCovered, ValueError, OSError) as exc:
        print(f"projcode: {exc}", file=sys.stderr)
        return 2
    return 2  # pragma: no cover


if __name__ == "__main__":
    raise SystemExit(main())
