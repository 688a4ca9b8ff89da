"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines while the suite runs.
"""
import random
import sys
import time
from fractions import Fraction

import pytest

import suites
from clab.gadget import build_G
from clab.search import chi_f, search_witness
from clab.solver import brute_force, decide
from clab.cnf import encode_cnf
from clab.verifier import (VERIFIED, verify_lemma_dfs, verify_lemma_replay,
                           verify_theorem, replay_branch_count)
from conftest import complete, cycle
from oracles import cnf_satisfiable, random_instance


def _announce(criterion: int, ok: bool, detail: str) -> None:
    line = f"[criterion {criterion:2d}] {'PASS' if ok else 'FAIL'} - {detail}"
    print(line, file=sys.stderr, flush=True)
    assert ok, line


def test_criterion_01_lemma_m1_both_methods(capsys):
    import json

    from clab.cli import main
    t0 = time.perf_counter()
    code = main(["verify", "lemma", "--m", "1", "--method", "both"])
    report = json.loads(capsys.readouterr().out)
    inst = build_G(1)
    oracle = brute_force(inst.graph, inst.lists, 1, force=True)
    elapsed = time.perf_counter() - t0
    ok = (code == 0
          and report["details"]["dfs"]["verdict"] == VERIFIED
          and report["details"]["replay"]["verdict"] == VERIFIED
          and oracle.infeasible and oracle.count == 0 and elapsed < 10)
    with capsys.disabled():
        _announce(1, ok, f"lemma m=1 dfs+replay via CLI, brute-force "
                         f"cross-check, in {elapsed:.2f}s")


def test_criterion_02_lemma_m2():
    t0 = time.perf_counter()
    replay = verify_lemma_replay(2)
    dfs = verify_lemma_dfs(2)
    elapsed = time.perf_counter() - t0
    ok = (replay.verdict == VERIFIED
          and replay.branches_checked == replay_branch_count(2)
          and dfs.verdict == VERIFIED and elapsed < 120)
    _announce(2, ok, f"lemma m=2 replay ({replay.branches_checked} branches) "
                     f"and dfs verified in {elapsed:.2f}s")


@pytest.mark.parametrize("m", [3, 4, 5])
def test_criterion_03_lemma_replay_m3_to_m5(m):
    t0 = time.perf_counter()
    replay = verify_lemma_replay(m)
    elapsed = time.perf_counter() - t0
    expected = replay_branch_count(m)
    ok = (replay.verdict == VERIFIED and replay.branches_checked == expected
          and expected <= 10 ** 5 and elapsed < 60)
    _announce(3, ok, f"lemma m={m} replay exhausted {expected} branches "
                     f"in {elapsed:.2f}s")


def test_criterion_04_theorem_m1():
    t0 = time.perf_counter()
    per_copy = verify_theorem(1)
    whole = verify_theorem(1, whole_graph=True)
    elapsed = time.perf_counter() - t0
    ok = (per_copy.verdict == VERIFIED
          and per_copy.details["copies_verified"] == 12
          and whole.verdict == VERIFIED
          and whole.details["vertices"] == 194
          and elapsed < 300)
    _announce(4, ok, f"theorem m=1: 12/12 copies and whole-graph dfs "
                     f"verified in {elapsed:.2f}s")


def test_criterion_05_theorem_m2_parallel():
    t0 = time.perf_counter()
    rep = verify_theorem(2, parallel=2)
    elapsed = time.perf_counter() - t0
    ok = (rep.verdict == VERIFIED and rep.details["copies_total"] == 420
          and rep.details["copies_verified"] == 420 and elapsed < 600)
    _announce(5, ok, f"theorem m=2: 420/420 copies verified with "
                     f"--parallel in {elapsed:.2f}s")


def test_criterion_06_arithmetic(capsys):
    import json

    from clab.cli import main
    t0 = time.perf_counter()
    code = main(["verify", "arithmetic", "--max-m", "1000000"])
    report = json.loads(capsys.readouterr().out)
    elapsed = time.perf_counter() - t0
    ok = (code == 0 and report["verdict"] == VERIFIED
          and report["details"]["details"]["a1"] == 5 and elapsed < 5)
    with capsys.disabled():
        _announce(6, ok, f"arithmetic to 10^6 via CLI with a(1)=5 endpoint "
                         f"in {elapsed:.2f}s")


def test_criterion_07_positive_controls():
    g1 = build_G(1)
    four = {v: frozenset(range(4)) for v in g1.graph.vertices}
    ok = decide(g1.graph, four, 1).feasible
    for m in (1, 2):
        inst = build_G(m)
        lists = {v: frozenset(range(5 * m)) for v in inst.graph.vertices}
        ok = ok and decide(inst.graph, lists, m).feasible
    _announce(7, ok, "constant-palette controls feasible: "
                     "G(1) with 4 colours, G(1), G(2) with 5m colours b=m")


def test_criterion_08_oracle_suite():
    rng = random.Random(20240809)
    agree = 0
    cnf_agree = 0
    total = 500
    for _ in range(total):
        g, lists, b = random_instance(rng)
        verdict = decide(g, lists, b)
        oracle = brute_force(g, lists, b)
        if verdict.status == oracle.status:
            agree += 1
        if cnf_satisfiable(encode_cnf(g, lists, b)) == verdict.feasible:
            cnf_agree += 1
    ok = agree == total == cnf_agree
    _announce(8, ok, f"oracle suite: decide==brute_force on {agree}/{total}, "
                     f"CNF agreement on {cnf_agree}/{total}")


def test_criterion_09_invariant_suites():
    results = {name: fn(cases=200) for name, fn in suites.ALL_SUITES.items()}
    ok = all(n == 200 for n in results.values())
    _announce(9, ok, "invariant suites at 200 cases each: "
                     + ", ".join(sorted(results)))


def test_criterion_10_search_tools():
    t0 = time.perf_counter()
    k3, c4 = complete(3), cycle(4)
    w = search_witness(k3, 2, 1, universe=6)
    ok = w.status == "witness"
    ok = ok and search_witness(c4, 2, 1, universe=8).status == "proved_choosable"
    ok = ok and chi_f(cycle(5), 2).value == Fraction(5, 2)
    ok = ok and chi_f(complete(4), 3).value == Fraction(4)
    ok = ok and chi_f(cycle(7), 3).value == Fraction(7, 3)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 60
    _announce(10, ok, f"witness + choosability + chi_f trio in {elapsed:.2f}s")
