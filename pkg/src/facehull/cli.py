"""Command-line front end; a thin client over the service-layer handlers.

All domain work happens in the handler functions shared with the HTTP
service, so CLI and HTTP responses carry the same payloads.  Output on
stdout is byte-deterministic for identical flags and seed (timing only
appears in report files written via --output); progress goes to stderr.

Exit codes: 0 success / inside / zero failures, 2 usage error, 3 outside
the hull, 4 verification failures, 5 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .formats import ParseError, load_complex_text
from .service import (
    GraphPayload,
    HullCheckRequest,
    TuranRequest,
    VerifyRequest,
    compute_cliques,
    compute_hull_check,
    compute_turan,
    run_verification,
)
from .vectors import IntVector
from .verify import CapExceeded

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_OUTSIDE = 3
EXIT_FAILURES = 4
EXIT_PARSE = 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facehull",
        description="Exact clique/face-vector computations, hull-membership "
        "certificates, and exhaustive verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("turan", help="clique vector (and optionally edges) of T(n,r)")
    p.add_argument("-n", type=int, required=True, help="number of vertices")
    p.add_argument("-r", type=int, required=True, help="number of parts")
    p.add_argument("--graph", action="store_true", help="also print the edge list")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("check", help="hull-membership certificate for a vector")
    p.add_argument("-f", help="comma-separated candidate vector, e.g. '3,2,1'")
    p.add_argument("--f-file", help="file containing the candidate vector literal")
    p.add_argument(
        "--complex",
        dest="complex_path",
        help="complex file ('-' for stdin); its face vector becomes f",
    )
    p.add_argument("-g", help="comma-separated generator vector")
    p.add_argument("-n", type=int, help="use the Turan vector t(n,r) as generator")
    p.add_argument("-r", type=int, help="see -n")
    p.add_argument(
        "--method", choices=("both", "inequalities", "coefficients"), default="both"
    )
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("cliques", help="clique vector and clique number of a graph")
    p.add_argument("input", help="graph file ('-' for stdin)")
    p.add_argument(
        "--input-format", choices=("auto", "graph6", "edgelist", "json"), default="auto"
    )
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("theorem", choices=("thm11", "thm31", "zykov", "section5"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-k", type=int, help="chain index for section5 (default 2)")
    p.add_argument("--samples", type=int, default=200, help="sample count for section5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--long-run", action="store_true", help="lift the default size caps")
    p.add_argument("--workers", type=int, default=1, help="parallel sweep processes")
    p.add_argument("--output", help="write the full JSON report (with timing) here")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--no-progress", action="store_true", help="suppress stderr progress")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _parse_vector(text: str, what: str) -> IntVector:
    try:
        return IntVector.parse(text)
    except ValueError as exc:
        raise ParseError(f"{what}: {exc}") from None


def cmd_turan(args) -> int:
    resp = compute_turan(
        TuranRequest(n=args.n, r=args.r, include_graph=args.graph)
    )
    if args.format == "json":
        print(json.dumps(resp.model_dump(exclude_none=True), indent=2))
    elif args.format == "csv":
        print("n,r,k,count")
        for k, count in enumerate(resp.vector, start=1):
            print(f"{resp.n},{resp.r},{k},{count}")
    else:
        print(IntVector(resp.vector).to_text())
        if resp.edges is not None:
            for u, v in resp.edges:
                print(f"{u} {v}")
    return EXIT_OK


def cmd_check(args) -> int:
    given = [args.f is not None, args.f_file is not None, args.complex_path is not None]
    if sum(given) != 1:
        raise ValueError("provide exactly one of -f, --f-file, --complex")
    if args.f is not None:
        f = _parse_vector(args.f, "candidate vector")
    elif args.f_file is not None:
        f = _parse_vector(_read_input(args.f_file), "candidate vector file")
    else:
        f = load_complex_text(_read_input(args.complex_path)).face_vector()

    if args.g is not None:
        if args.n is not None or args.r is not None:
            raise ValueError("provide -g or (-n and -r), not both")
        gv = _parse_vector(args.g, "generator vector")
        req = HullCheckRequest(f=f.to_list(), g=gv.to_list(), method=args.method)
    elif args.n is not None and args.r is not None:
        req = HullCheckRequest(f=f.to_list(), n=args.n, r=args.r, method=args.method)
    else:
        raise ValueError("provide a generator: -g or both -n and -r")

    try:
        resp = compute_hull_check(req)
    except ValueError as exc:
        # malformed generators (internal zeros) are input defects, not usage
        raise ParseError(str(exc)) from None

    if args.format == "json":
        print(json.dumps(resp.model_dump(), indent=2))
    elif args.format == "csv":
        print("verdict,method,detail")
        for cert in resp.certificates:
            detail = ""
            if cert.get("violation"):
                v = cert["violation"]
                detail = f"{v['kind']}:i={v['i']}:j={v['j']}"
            print(f"{resp.verdict},{cert['method']},{detail}")
    else:
        print(resp.verdict)
        for cert in resp.certificates:
            if cert.get("coefficients") is not None and resp.verdict == "inside":
                parts = [
                    str(c["num"]) if c["den"] == 1 else f"{c['num']}/{c['den']}"
                    for c in cert["coefficients"]
                ]
                print(f"{cert['method']}: c = ({', '.join(parts)})")
            if cert.get("violation"):
                v = cert["violation"]
                if v["kind"] == "pair":
                    print(
                        f"{cert['method']}: violated pair (i={v['i']}, j={v['j']}): "
                        f"f_{v['i']}*g_{v['j']} = {v['lhs']} > f_{v['j']}*g_{v['i']} = {v['rhs']}"
                    )
                elif v["kind"] == "first_coordinate":
                    print(f"{cert['method']}: violated f_1 = {v['lhs']} > g_1 = {v['rhs']}")
                else:
                    print(
                        f"{cert['method']}: support violation: f_{v['i']} = {v['lhs']} > 0 "
                        f"beyond the generator support {v['j']}"
                    )
    return EXIT_OK if resp.verdict == "inside" else EXIT_OUTSIDE


def cmd_cliques(args) -> int:
    text = _read_input(args.input)
    resp = compute_cliques(GraphPayload(text=text, format=args.input_format))
    if args.format == "json":
        print(json.dumps(resp.model_dump(), indent=2))
    elif args.format == "csv":
        print("k,count")
        for k, count in enumerate(resp.vector, start=1):
            print(f"{k},{count}")
    else:
        print(IntVector(resp.vector).to_text())
        print(f"omega={resp.clique_number}")
    return EXIT_OK


def cmd_verify(args) -> int:
    req = VerifyRequest(
        theorem=args.theorem,
        n=args.n,
        r=args.r,
        k=args.k,
        samples=args.samples,
        seed=args.seed,
        long_run=args.long_run,
        workers=args.workers,
    )

    progress = None
    if not args.no_progress and sys.stderr.isatty():
        def progress(done, total):
            print(f"\r[facehull] {args.theorem}: {done}/{total} chunks", end="", file=sys.stderr)

    report = run_verification(req, progress=progress)
    if progress:
        print(file=sys.stderr)
    print(
        f"[facehull] {args.theorem}: {report.instances_checked} instances, "
        f"{len(report.failures)} failures, {report.skipped} skipped "
        f"({report.wall_time_s:.2f}s)",
        file=sys.stderr,
    )
    if args.output:
        Path(args.output).write_text(
            json.dumps(report.to_json_dict(include_timing=True), indent=2) + "\n"
        )
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    elif args.format == "csv":
        print(report.csv_summary(), end="")
    else:
        status = "ok" if report.ok else "FAILED"
        print(
            f"{report.theorem} n={args.n} r={args.r}: "
            f"instances={report.instances_checked} failures={len(report.failures)} "
            f"skipped={report.skipped} {status}"
        )
    return EXIT_OK if report.ok else EXIT_FAILURES


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_HANDLERS = {
    "turan": cmd_turan,
    "check": cmd_check,
    "cliques": cmd_cliques,
    "verify": cmd_verify,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"facehull: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"facehull: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"facehull: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"facehull: invalid arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
