"""clab: scriptable front end of the workbench.

Every invocation prints exactly one JSON report document to stdout; human
notes go to stderr.  Exit codes: 0 verified/ok/feasible, 1 refuted/infeasible
(for witness search: proved_choosable), 2 inconclusive or budget exhausted,
3 input error.  By default the CLI calls the service handlers in process;
--server URL sends the same request to a running instance instead.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from pydantic import BaseModel, ValidationError

from .graphs import GraphError
from .service import handlers
from .service.schemas import (ArithmeticRequest, ChiFRequest, DotRequest,
                              EncodeRequest, GadgetRequest, GraphModel,
                              LemmaRequest, Report, SolveRequest,
                              TheoremRequest, WitnessRequest)

_EXIT_OK = 0
_EXIT_REFUTED = 1
_EXIT_INCONCLUSIVE = 2
_EXIT_INPUT = 3

_VERDICT_EXIT = {
    "ok": _EXIT_OK,
    "verified": _EXIT_OK,
    "feasible": _EXIT_OK,
    "witness": _EXIT_OK,
    "refuted": _EXIT_REFUTED,
    "infeasible": _EXIT_REFUTED,
    "proved_choosable": _EXIT_REFUTED,
    "inconclusive": _EXIT_INCONCLUSIVE,
    "exhausted": _EXIT_INCONCLUSIVE,
}

_ROUTES = {
    "gadget": ("/gadget", handlers.handle_gadget),
    "solve": ("/solve", handlers.handle_solve),
    "encode": ("/encode", handlers.handle_encode),
    "verify lemma": ("/verify/lemma", handlers.handle_verify_lemma),
    "verify theorem": ("/verify/theorem", handlers.handle_verify_theorem),
    "verify arithmetic": ("/verify/arithmetic", handlers.handle_verify_arithmetic),
    "witness": ("/witness", handlers.handle_witness),
    "chif": ("/chif", handlers.handle_chif),
    "export-dot": ("/export-dot", handlers.handle_export_dot),
}


def _load_graph_model(path: str) -> GraphModel:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path} is not valid JSON: {exc}") from exc
    return GraphModel.model_validate(doc)


def _budget_args(parser: argparse.ArgumentParser,
                 default_nodes: int = 100_000_000) -> None:
    parser.add_argument("--max-nodes", type=int, default=default_nodes,
                        help=f"search node budget per solve (default {default_nodes})")
    parser.add_argument("--max-seconds", type=float, default=300.0,
                        help="wall-clock budget per solve in seconds (default 300)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clab",
        description="Exact multiple list colouring workbench")
    parser.add_argument("--server", metavar="URL", default=None,
                        help="send the request to a running service instead "
                             "of computing in process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gadget", help="emit the built-in gadget G(m) with its lists")
    p.add_argument("--m", type=int, required=True, help="fold parameter, m >= 1")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", metavar="FILE", default=None,
                   help="also write the graph document / DOT text to FILE")

    p = sub.add_parser("solve", help="decide b-fold list colourability of a graph file")
    p.add_argument("--input", required=True, metavar="FILE", help="JSON graph file")
    p.add_argument("--b", type=int, default=None, help="fold (overrides the file)")
    p.add_argument("--palette", type=int, default=None,
                   help="ignore file lists and use the constant palette {0..A-1}")
    _budget_args(p)

    p = sub.add_parser("encode", help="export the instance as DIMACS CNF")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--out", metavar="FILE.cnf", default=None,
                   help="also write the DIMACS text to FILE.cnf")

    p = sub.add_parser("verify", help="verification commands")
    vsub = p.add_subparsers(dest="verify_what", required=True)

    p = vsub.add_parser("lemma", help="verify that G(m) admits no m-fold colouring")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=["dfs", "replay", "both"], default="both")
    p.add_argument("--parallel", type=int, default=1,
                   help="worker processes for the replay branches (default 1)")
    p.add_argument("--trace-limit", type=int, default=8,
                   help="recorded branch traces in the report (default 8)")
    _budget_args(p)

    p = vsub.add_parser("theorem",
                        help="verify that every u,u' pair is blocked in H(m)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--whole-graph", action="store_true",
                   help="solve the materialized H(m) instead of per-copy checks")
    p.add_argument("--parallel", type=int, default=1,
                   help="worker processes over the copies (default 1)")
    p.add_argument("--cap", type=int, default=10_000,
                   help="vertex cap for materializing H (default 10000)")
    _budget_args(p)

    p = vsub.add_parser("arithmetic", help="check the parameter inequalities")
    p.add_argument("--max-m", type=int, required=True)

    p = sub.add_parser("witness",
                       help="search for an a-list assignment with no b-fold colouring")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--universe", type=int, default=None,
                   help="colour universe size (default a*|V|, enough for completeness)")
    p.add_argument("--budget", type=int, default=1_000_000,
                   help="maximum assignments to test (default 1000000)")
    p.add_argument("--max-seconds", type=float, default=300.0)

    p = sub.add_parser("chif", help="fractional chromatic number by exact search")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--max-b", type=int, default=3,
                   help="largest denominator searched (default 3)")

    p = sub.add_parser("export-dot", help="render a graph file as DOT text")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--out", metavar="FILE", default=None)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _build_request(args: argparse.Namespace) -> tuple[str, BaseModel]:
    cmd = args.command
    if cmd == "verify":
        cmd = f"verify {args.verify_what}"
    if cmd == "gadget":
        return cmd, GadgetRequest(m=args.m, format=args.format)
    if cmd == "solve":
        return cmd, SolveRequest(
            graph=_load_graph_model(args.input), b=args.b, palette=args.palette,
            budget={"max_nodes": args.max_nodes, "max_seconds": args.max_seconds})
    if cmd == "encode":
        return cmd, EncodeRequest(graph=_load_graph_model(args.input), b=args.b)
    if cmd == "verify lemma":
        return cmd, LemmaRequest(
            m=args.m, method=args.method, parallel=args.parallel,
            trace_limit=args.trace_limit,
            budget={"max_nodes": args.max_nodes, "max_seconds": args.max_seconds})
    if cmd == "verify theorem":
        return cmd, TheoremRequest(
            m=args.m, whole_graph=args.whole_graph, parallel=args.parallel,
            cap=args.cap,
            budget={"max_nodes": args.max_nodes, "max_seconds": args.max_seconds})
    if cmd == "verify arithmetic":
        return cmd, ArithmeticRequest(max_m=args.max_m)
    if cmd == "witness":
        return cmd, WitnessRequest(
            graph=_load_graph_model(args.input), a=args.a, b=args.b,
            universe=args.universe,
            budget={"max_nodes": args.budget, "max_seconds": args.max_seconds})
    if cmd == "chif":
        return cmd, ChiFRequest(graph=_load_graph_model(args.input), max_b=args.max_b)
    if cmd == "export-dot":
        return cmd, DotRequest(graph=_load_graph_model(args.input))
    raise GraphError(f"unknown command {cmd!r}")


def _dispatch(cmd: str, request: BaseModel, server: str | None) -> Report:
    path, handler = _ROUTES[cmd]
    if server is None:
        return handler(request)
    import httpx

    resp = httpx.post(server.rstrip("/") + path,
                      json=request.model_dump(), timeout=None)
    if resp.status_code != 200:
        raise GraphError(f"server error {resp.status_code}: {resp.text}")
    return Report.model_validate(resp.json())


def _emit_error(command: str, message: str) -> None:
    doc = {"command": command, "error": {"message": message}}
    print(json.dumps(doc))
    print(f"error: {message}", file=sys.stderr)


def _maybe_write_out(args: argparse.Namespace, report: Report) -> None:
    out = getattr(args, "out", None)
    if not out:
        return
    details: dict[str, Any] = report.details
    if "dot" in details:
        text = details["dot"]
    elif "dimacs" in details:
        text = details["dimacs"]
    elif "graph" in details:
        text = json.dumps(details["graph"], indent=2) + "\n"
    else:
        text = json.dumps(report.model_dump(), indent=2) + "\n"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {out}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:   # --help
            return _EXIT_OK
        _emit_error("parse", "unrecognized or malformed arguments")
        return _EXIT_INPUT

    if args.command == "serve":
        import uvicorn

        from .service.app import app
        uvicorn.run(app, host=args.host, port=args.port)
        return _EXIT_OK

    command = args.command if args.command != "verify" else f"verify {args.verify_what}"
    try:
        cmd, request = _build_request(args)
        report = _dispatch(cmd, request, args.server)
    except (ValidationError, ValueError) as exc:
        _emit_error(command, str(exc))
        return _EXIT_INPUT

    print(json.dumps(report.model_dump()))
    print(f"{command}: {report.verdict} "
          f"({report.timing.get('seconds', 0.0):.3f}s)", file=sys.stderr)
    _maybe_write_out(args, report)
    return _VERDICT_EXIT.get(report.verdict, _EXIT_INCONCLUSIVE)


if __name__ == "__main__":
    sys.exit(main())
