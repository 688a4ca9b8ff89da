"""Request handlers: one per endpoint, shared between the app and the CLI."""
from __future__ import annotations

import time

from .. import search as search_mod
from ..cnf import build_cnf
from ..gadget import build_G
from ..graphs import export_dot, graph_to_json_dict
from ..solver import Budget, decide
from ..verifier import (INCONCLUSIVE, REFUTED, VERIFIED, verify_arithmetic,
                        verify_lemma_dfs, verify_lemma_replay, verify_theorem)
from .schemas import (ArithmeticRequest, BudgetModel, ChiFRequest, DotRequest,
                      EncodeRequest, GadgetRequest, LemmaRequest, Report,
                      SolveRequest, TheoremRequest, WitnessRequest)


def _budget(model: BudgetModel) -> Budget:
    return Budget(max_nodes=model.max_nodes, max_seconds=model.max_seconds)


def _report(command: str, inputs: dict, verdict: str, details: dict,
            started: float) -> Report:
    return Report(command=command, inputs=inputs, verdict=verdict,
                  details=details, timing={"seconds": round(time.perf_counter() - started, 6)})


def handle_gadget(req: GadgetRequest) -> Report:
    started = time.perf_counter()
    inst = build_G(req.m)
    details: dict = {"params": inst.params.to_dict(),
                     "blocks": inst.blocks.to_dict()}
    if req.format == "dot":
        details["dot"] = export_dot(inst.graph, inst.lists)
    else:
        details["graph"] = graph_to_json_dict(inst.graph, inst.lists, b=req.m)
    return _report("gadget", {"m": req.m, "format": req.format}, "ok",
                   details, started)


def _solve_inputs(req: SolveRequest) -> tuple:
    g = req.graph.to_graph()
    lists = req.graph.colour_lists()
    if req.palette is not None:
        lists = {v: frozenset(range(req.palette)) for v in g.vertices}
    if lists is None:
        raise ValueError("no lists: provide 'lists' in the graph document "
                         "or a palette size")
    missing = [v for v in g.vertices if v not in lists]
    if missing:
        raise ValueError(f"lists missing vertices: {missing}")
    b = req.b if req.b is not None else req.graph.b
    if b is None:
        raise ValueError("no fold: provide 'b' in the request or the document")
    return g, lists, b


def handle_solve(req: SolveRequest) -> Report:
    started = time.perf_counter()
    g, lists, b = _solve_inputs(req)
    outcome = decide(g, lists, b, _budget(req.budget))
    return _report(
        "solve",
        {"graph": g.name, "vertices": len(g.vertices), "b": b},
        outcome.status, outcome.to_dict(), started)


def handle_encode(req: EncodeRequest) -> Report:
    started = time.perf_counter()
    solve_req = SolveRequest(graph=req.graph, b=req.b)
    g, lists, b = _solve_inputs(solve_req)
    inst = build_cnf(g, lists, b)
    details = {
        "dimacs": inst.to_dimacs(g.name, b),
        "variables": inst.num_vars,
        "primary_variables": inst.num_primary,
        "clauses": len(inst.clauses),
    }
    return _report("encode", {"graph": g.name, "b": b}, "ok", details, started)


def handle_verify_lemma(req: LemmaRequest) -> Report:
    started = time.perf_counter()
    details: dict = {}
    verdicts = []
    if req.method in ("dfs", "both"):
        rep = verify_lemma_dfs(req.m, _budget(req.budget))
        details["dfs"] = rep.to_dict()
        verdicts.append(rep.verdict)
    if req.method in ("replay", "both"):
        rep = verify_lemma_replay(req.m, trace_limit=req.trace_limit,
                                  parallel=req.parallel)
        details["replay"] = rep.to_dict()
        verdicts.append(rep.verdict)
    if REFUTED in verdicts:
        verdict = REFUTED
    elif all(v == VERIFIED for v in verdicts):
        verdict = VERIFIED
    else:
        verdict = INCONCLUSIVE
    return _report("verify lemma", {"m": req.m, "method": req.method},
                   verdict, details, started)


def handle_verify_theorem(req: TheoremRequest) -> Report:
    started = time.perf_counter()
    rep = verify_theorem(req.m, budget=_budget(req.budget),
                         whole_graph=req.whole_graph, parallel=req.parallel,
                         cap=req.cap)
    return _report("verify theorem",
                   {"m": req.m, "whole_graph": req.whole_graph},
                   rep.verdict, rep.to_dict(), started)


def handle_verify_arithmetic(req: ArithmeticRequest) -> Report:
    started = time.perf_counter()
    rep = verify_arithmetic(req.max_m)
    return _report("verify arithmetic", {"max_m": req.max_m},
                   rep.verdict, rep.to_dict(), started)


def handle_witness(req: WitnessRequest) -> Report:
    started = time.perf_counter()
    g = req.graph.to_graph()
    result = search_mod.search_witness(g, req.a, req.b, req.universe,
                                       _budget(req.budget))
    universe = req.universe if req.universe is not None else req.a * len(g.vertices)
    return _report(
        "witness",
        {"graph": g.name, "a": req.a, "b": req.b, "universe": universe},
        result.status, result.to_dict(), started)


def handle_chif(req: ChiFRequest) -> Report:
    started = time.perf_counter()
    g = req.graph.to_graph()
    result = search_mod.chi_f(g, req.max_b)
    return _report("chif", {"graph": g.name, "max_b": req.max_b},
                   "ok", result.to_dict(), started)


def handle_export_dot(req: DotRequest) -> Report:
    started = time.perf_counter()
    g = req.graph.to_graph()
    lists = req.graph.colour_lists()
    return _report("export-dot", {"graph": g.name}, "ok",
                   {"dot": export_dot(g, lists)}, started)
