"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 property failure
(including engine assertions tripping mid-run), 3 exploration truncated
before closure when --require-closure was given.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .checks import CANARY_MODES, run_full_suite
from .explore import BudgetExceededError, explore
from .intmat import SignSkewSymmetryError
from .io import MatrixFormatError, load_matrix_source, principal_base, seed_payload
from .laurent import DivisionFailureError
from .modseed import EvaluationDeadEnd
from .seeds import SeedInvariantError, TermBudgetError, mutate_seed, new_principal_seed

# invariant breakage mid-run is a property failure (exit 2); leaving the
# sign-skew-symmetric class is an input problem and routes to exit 1
_ENGINE_ERRORS = (SeedInvariantError, DivisionFailureError)


def _parse_path(text: str, n: int) -> list[int]:
    if not text:
        return []
    try:
        path = [int(p) for p in text.split(",")]
    except ValueError:
        raise MatrixFormatError(f"mutation path must be comma-separated integers: {text!r}")
    for k in path:
        if not 1 <= k <= n:
            raise MatrixFormatError(f"direction {k} outside 1..{n}")
    return path


def _matrix_lines(name: str, rows: list[list[int]]) -> list[str]:
    widths = [max(len(str(rows[i][j])) for i in range(len(rows)))
              for j in range(len(rows[0]))]
    out = [f"{name} ="]
    for r in rows:
        out.append("  [" + "  ".join(str(v).rjust(w) for v, w in zip(r, widths)) + "]")
    return out


def _print_payload(payload: dict, path: list[int]) -> None:
    where = ",".join(map(str, path)) if path else "(origin)"
    print(f"seed after path {where}")
    for i, v in enumerate(payload["variables"], start=1):
        print(f"  x{i} = {v}")
    for i, f in enumerate(payload["f_polynomials"], start=1):
        print(f"  F{i} = {f}")
    for i, g in enumerate(payload["g_vectors"], start=1):
        print(f"  g{i} = ({', '.join(map(str, g))})")
    for name in ("Bt", "C", "G"):
        for line in _matrix_lines(name, payload[name]):
            print(line)
    print("sign-coherent columns:", payload["sign_coherent"])
    if payload["symmetrizer"] is not None:
        print("symmetrizer:", payload["symmetrizer"],
              "duality:", "ok" if payload["duality_ok"] else "VIOLATED")
    else:
        print("symmetrizer: none")


def cmd_mutate(args) -> int:
    B0 = principal_base(load_matrix_source(args.matrix))
    seed = new_principal_seed(B0, check=not args.no_assert)
    path = _parse_path(args.path, B0.rows)
    done: list[int] = []
    try:
        for k in path:
            seed = mutate_seed(seed, k, check=not args.no_assert)
            done.append(k)
    except _ENGINE_ERRORS as e:
        print(f"engine assertion failed after path {','.join(map(str, done + [k]))}: {e}",
              file=sys.stderr)
        return 2
    payload = seed_payload(seed)
    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
    else:
        _print_payload(payload, path)
    return 0


def cmd_explore(args) -> int:
    B0 = principal_base(load_matrix_source(args.matrix))
    atlas = explore(B0, args.depth, max_seeds=args.max_seeds,
                    check=not args.no_assert, workers=args.workers)
    summary = {
        "v": 1,
        "seeds": len(atlas),
        "distinct_variables": atlas.distinct_variables(),
        "closure": atlas.closed,
        "layer_sizes": atlas.layer_sizes,
        "entries": [{"path": list(e.path), "fingerprint": e.seed.fingerprint()}
                    for e in atlas.entries],
    }
    if args.json:
        Path(args.json).write_text(json.dumps(summary, indent=2) + "\n")
    print(f"seeds: {summary['seeds']}  distinct variables: {summary['distinct_variables']}")
    print(f"layers: {summary['layer_sizes']}  closure: {summary['closure']}")
    if args.require_closure and not atlas.closed:
        print("exploration truncated before closure", file=sys.stderr)
        return 3
    return 0


def cmd_verify(args) -> int:
    B0 = principal_base(load_matrix_source(args.matrix))
    try:
        atlas, report = run_full_suite(
            B0, args.depth, max_seeds=args.max_seeds,
            check_assertions=not args.no_assert, workers=args.workers,
            canary=args.canary, certified_depth=args.certified_depth)
    except _ENGINE_ERRORS as e:
        # mutation-time invariant broke before the checks could run
        print(f"engine assertion failed during exploration: {e}", file=sys.stderr)
        return 2
    for r in report.results:
        line = f"{r.check:24s} {r.status}"
        if r.status == "FAIL" and r.witness_path is not None:
            line += f"  witness path {','.join(map(str, r.witness_path))}"
        print(line)
    print(f"seeds: {report.seed_count}  closure: {report.closed}  "
          f"failures: {report.failures}")
    if args.json:
        Path(args.json).write_text(report.to_json(indent=2) + "\n")
    if args.report_dir:
        from .report import write_report
        for p in write_report(report, args.report_dir, atlas):
            print(f"wrote {p}")
    return report.exit_code(require_closure=args.require_closure)


def cmd_serve(args) -> int:
    import uvicorn

    from .service import build_app
    app = build_app(snapshot_path=args.snapshot)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def _add_common(p: argparse.ArgumentParser, depth_default: int) -> None:
    p.add_argument("--depth", type=int, default=depth_default,
                   help="mutation-distance bound for the search")
    p.add_argument("--max-seeds", type=int, default=100_000,
                   help="abort if the atlas would exceed this many seeds")
    p.add_argument("--require-closure", action="store_true",
                   help="exit 3 if the search is truncated before the graph closes")
    p.add_argument("--workers", type=int, default=1,
                   help="threads for seed expansion (result is identical)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="clusterlab",
        description="exact seed mutation, exchange-graph search and property checks")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="apply a mutation path and print the seed")
    p.add_argument("matrix", help="JSON matrix literal or a file containing one")
    p.add_argument("--path", default="", help='comma-separated directions, e.g. "1,2,1"')
    p.add_argument("--json", help="write the seed payload to this file")
    p.add_argument("--no-assert", action="store_true",
                   help="skip positivity/homogeneity assertions")
    p.set_defaults(fn=cmd_mutate)

    p = sub.add_parser("explore", help="breadth-first search of the exchange graph")
    p.add_argument("matrix")
    _add_common(p, depth_default=4)
    p.add_argument("--json", help="write the atlas summary to this file")
    p.add_argument("--no-assert", action="store_true")
    p.set_defaults(fn=cmd_explore)

    p = sub.add_parser("verify", help="run the full property suite")
    p.add_argument("matrix")
    _add_common(p, depth_default=4)
    p.add_argument("--json", help="write the report JSON to this file")
    p.add_argument("--report-dir", help="also write report.json/report.csv/figures here")
    p.add_argument("--canary", choices=sorted(CANARY_MODES),
                   help="corrupt the atlas first; the run must then fail")
    p.add_argument("--certified-depth", type=int, default=None, metavar="D",
                   help="also hunt (G,C,B) collisions on evaluation-certified "
                        "states to depth D (works where variables are too big)")
    p.add_argument("--no-assert", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--snapshot", help="file for state snapshot on shutdown/reload on start")
    p.set_defaults(fn=cmd_serve)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (MatrixFormatError, SignSkewSymmetryError, BudgetExceededError,
            TermBudgetError, EvaluationDeadEnd) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
