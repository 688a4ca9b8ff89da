import random

from clab.cnf import build_cnf, encode_cnf
from clab.graphs import build_graph
from clab.solver import decide

from oracles import (cnf_satisfiable, count_primary_models, dpll,
                     parse_dimacs, random_instance)


def test_k2_variable_and_conflict_counts(k2):
    lists = {v: frozenset({0, 1}) for v in k2.vertices}
    inst = build_cnf(k2, lists, 1)
    assert inst.num_primary == 4
    conflict = [c for c in inst.clauses
                if len(c) == 2 and all(l < 0 and abs(l) <= 4 for l in c)]
    assert len(conflict) == 2


def test_single_vertex_three_models():
    g = build_graph(["v"], [])
    lists = {"v": frozenset({0, 1, 2})}
    text = encode_cnf(g, lists, 2)
    _, _, mapping = parse_dimacs(text)
    primaries = sorted(mapping.values())
    assert len(primaries) == 3
    assert cnf_satisfiable(text)
    assert count_primary_models(text, primaries) == 3


def test_k3_two_colours_unsat(k3):
    lists = {v: frozenset({0, 1}) for v in k3.vertices}
    text = encode_cnf(k3, lists, 1)
    _, _, mapping = parse_dimacs(text)
    assert not cnf_satisfiable(text)
    assert count_primary_models(text, sorted(mapping.values())) == 0


def test_header_records_variable_map(k2):
    lists = {"v0": frozenset({0, 2}), "v1": frozenset({1})}
    text = encode_cnf(k2, lists, 1)
    assert "c map v0 0 1" in text
    assert "c map v0 2 2" in text
    assert "c map v1 1 3" in text


def test_list_smaller_than_fold_is_unsat():
    g = build_graph(["v"], [])
    text = encode_cnf(g, {"v": frozenset({0})}, 2)
    assert not cnf_satisfiable(text)


def test_clause_count_matches_header(k3):
    lists = {v: frozenset(range(4)) for v in k3.vertices}
    text = encode_cnf(k3, lists, 2)
    num_vars, clauses, _ = parse_dimacs(text)
    assert all(abs(l) <= num_vars for c in clauses for l in c)


def test_model_decodes_to_proper_colouring(c5):
    from clab.colours import is_proper
    lists = {v: frozenset(range(5)) for v in c5.vertices}
    text = encode_cnf(c5, lists, 2)
    _, clauses, mapping = parse_dimacs(text)
    model = dpll(clauses)
    assert model is not None
    phi = {v: frozenset(c for (w, c), var in mapping.items()
                        if w == v and model.get(var, False))
           for v in c5.vertices}
    assert is_proper(c5, lists, phi, 2).ok


def test_agreement_with_decide_sample():
    rng = random.Random(551)
    for _ in range(60):
        g, lists, b = random_instance(rng, max_n=5)
        text = encode_cnf(g, lists, b)
        assert cnf_satisfiable(text) == decide(g, lists, b).feasible
