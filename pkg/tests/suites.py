"""Reusable randomized property suites (shared by the unit and acceptance runs).

Each function runs `cases` independent seeded cases and raises AssertionError
on the first violation.
"""
from __future__ import annotations

import random
from itertools import combinations

from clab.colours import is_proper, permute_assignment
from clab.graphs import build_graph, glue, is_isomorphic, trace_faces
from clab.solver import decide

from oracles import random_instance


def run_list_monotonicity(cases: int = 200, seed: int = 101) -> int:
    """Enlarging lists never destroys feasibility."""
    rng = random.Random(seed)
    checked = 0
    while checked < cases:
        g, lists, b = random_instance(rng)
        if not decide(g, lists, b).feasible:
            continue
        bigger = {}
        for v in g.vertices:
            extra = {c for c in range(8) if rng.random() < 0.4}
            bigger[v] = lists[v] | frozenset(extra)
        assert decide(g, bigger, b).feasible, (g.name, lists, bigger, b)
        checked += 1
    return checked


def run_edge_monotonicity(cases: int = 200, seed: int = 202) -> int:
    """Adding edges never creates feasibility."""
    rng = random.Random(seed)
    checked = 0
    while checked < cases:
        g, lists, b = random_instance(rng, max_list=3)
        if not decide(g, lists, b).infeasible:
            continue
        verts = list(g.vertices)
        candidates = [(u, v) for u, v in combinations(verts, 2)
                      if not g.has_edge(u, v)]
        rng.shuffle(candidates)
        extra = candidates[:rng.randint(0, len(candidates))]
        g2 = build_graph(verts, list(g.edges) + extra, name=g.name + "+")
        assert decide(g2, lists, b).infeasible, (g.name, lists, b, extra)
        checked += 1
    return checked


def run_permutation_equivariance(cases: int = 200, seed: int = 303) -> int:
    """Permuting the colour universe preserves the verdict, and a permuted
    witness stays proper for the permuted lists."""
    rng = random.Random(seed)
    for _ in range(cases):
        g, lists, b = random_instance(rng)
        universe = list(range(8))
        shuffled = universe[:]
        rng.shuffle(shuffled)
        pi = dict(zip(universe, shuffled))
        permuted = permute_assignment(lists, pi)
        out = decide(g, lists, b)
        out_pi = decide(g, permuted, b)
        assert out.status == out_pi.status, (g.name, lists, pi)
        if out.feasible:
            phi_pi = permute_assignment(out.colouring, pi)
            assert is_proper(g, permuted, phi_pi, b).ok
    return cases


def _random_part(rng: random.Random, name: str):
    n = rng.randint(2, 5)
    verts = [f"{name}v{i}" for i in range(n)]
    edges = [(verts[i], verts[j]) for i, j in combinations(range(n), 2)
             if rng.random() < 0.5]
    return build_graph(verts, edges, name=name)


def run_glue_associativity(cases: int = 200, seed: int = 404) -> int:
    """Nesting glue calls yields a graph isomorphic to gluing all at once."""
    rng = random.Random(seed)
    checked = 0
    while checked < cases:
        parts = [_random_part(rng, f"P{i}") for i in range(3)]
        identify = {}
        for p in parts:
            # map one random vertex of each part onto a shared hub
            v = rng.choice(p.vertices)
            identify[(p.name, v)] = "hub"
            if rng.random() < 0.5:
                w = rng.choice(p.vertices)
                if w != v:
                    identify[(p.name, w)] = "hub2"
        try:
            flat = glue(parts, identify, name="flat")
            inner = glue(parts[:2],
                         {k: v for k, v in identify.items() if k[0] != "P2"},
                         name="inner")
            outer_identify = {("P2", k[1]): v for k, v in identify.items()
                              if k[0] == "P2"}
            # shared hubs of the inner graph keep their names
            for v in inner.vertices:
                if v in ("hub", "hub2"):
                    outer_identify[("inner", v)] = v
            nested = glue([inner, parts[2]], outer_identify, name="nested")
        except ValueError:
            continue  # identification collided; not a comparison case
        assert is_isomorphic(flat, nested), (identify,)
        checked += 1
    return checked


def run_euler_traversal(cases: int = 200, seed: int = 505) -> int:
    """Face tracing of any rotation system visits each directed edge once."""
    rng = random.Random(seed)
    checked = 0
    while checked < cases:
        n = rng.randint(2, 8)
        verts = [f"v{i}" for i in range(n)]
        edges = [(verts[i], verts[j]) for i, j in combinations(range(n), 2)
                 if rng.random() < 0.5]
        if not edges:
            continue
        g = build_graph(verts, edges)
        rot = {}
        for v in verts:
            cycle = list(g.neighbours[v])
            rng.shuffle(cycle)
            rot[v] = tuple(cycle)
        g = g.with_rotation(rot)
        faces = trace_faces(g)
        traversed = [e for face in faces for e in face]
        assert len(traversed) == 2 * len(edges)
        assert len(set(traversed)) == 2 * len(edges)
        checked += 1
    return checked


ALL_SUITES = {
    "list-monotonicity": run_list_monotonicity,
    "edge-monotonicity": run_edge_monotonicity,
    "colour-permutation": run_permutation_equivariance,
    "glue-associativity": run_glue_associativity,
    "euler-traversal": run_euler_traversal,
}
