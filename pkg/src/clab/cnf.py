"""DIMACS CNF export of b-fold list colouring instances.

Primary variables x_{v,c} (one per vertex/list-colour pair) come first,
numbered by canonical vertex order and ascending colour.  Cardinality
constraints ("exactly b colours per vertex") use the sequential-counter
encoding; at-least-b is encoded as at-most-(n-b) over negated literals.
The header records the variable map so external solvers' models can be
decoded.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .colours import ListAssignment
from .graphs import Graph


@dataclass(frozen=True)
class CnfInstance:
    num_vars: int
    num_primary: int
    clauses: tuple[tuple[int, ...], ...]
    var_of: Mapping[tuple[str, int], int]

    def to_dimacs(self, name: str, b: int) -> str:
        lines = [
            "c b-fold list-colouring encoding",
            f"c graph {name}",
            f"c fold {b}",
        ]
        for (v, c), x in sorted(self.var_of.items(), key=lambda kv: kv[1]):
            lines.append(f"c map {v} {c} {x}")
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        for clause in self.clauses:
            lines.append(" ".join(str(l) for l in clause + (0,)))
        return "\n".join(lines) + "\n"


def _at_most(lits: list[int], k: int, next_var: int,
             clauses: list[tuple[int, ...]]) -> int:
    """Sequential-counter at-most-k over the given literals.

    Returns the next free variable id.  k == 0 degenerates to unit clauses;
    k >= len(lits) needs no clauses at all.
    """
    n = len(lits)
    if k >= n:
        return next_var
    if k == 0:
        for l in lits:
            clauses.append((-l,))
        return next_var
    # registers s[i][j]: at least j+1 of lits[0..i] are true
    s = [[next_var + i * k + j for j in range(k)] for i in range(n - 1)]
    next_var += (n - 1) * k
    clauses.append((-lits[0], s[0][0]))
    for j in range(1, k):
        clauses.append((-s[0][j],))
    for i in range(1, n - 1):
        clauses.append((-lits[i], s[i][0]))
        clauses.append((-s[i - 1][0], s[i][0]))
        for j in range(1, k):
            clauses.append((-lits[i], -s[i - 1][j - 1], s[i][j]))
            clauses.append((-s[i - 1][j], s[i][j]))
        clauses.append((-lits[i], -s[i - 1][k - 1]))
    clauses.append((-lits[n - 1], -s[n - 2][k - 1]))
    return next_var


def build_cnf(g: Graph, lists: ListAssignment, b: int) -> CnfInstance:
    if b < 1:
        raise ValueError("b must be a positive integer")
    var_of: dict[tuple[str, int], int] = {}
    nv = 0
    for v in g.vertices:
        for c in sorted(lists[v]):
            nv += 1
            var_of[(v, c)] = nv
    num_primary = nv
    clauses: list[tuple[int, ...]] = []
    next_var = nv + 1
    for v in g.vertices:
        lits = [var_of[(v, c)] for c in sorted(lists[v])]
        n = len(lits)
        # at least b true
        if b > n:
            clauses.append(())  # empty clause: no b-subset exists
        elif b == n:
            for l in lits:
                clauses.append((l,))
        else:
            next_var = _at_most([-l for l in lits], n - b, next_var, clauses)
        # at most b true
        if b < n:
            next_var = _at_most(lits, b, next_var, clauses)
    for u, v in g.edges:
        for c in sorted(lists[u] & lists[v]):
            clauses.append((-var_of[(u, c)], -var_of[(v, c)]))
    return CnfInstance(next_var - 1, num_primary, tuple(clauses), var_of)


def encode_cnf(g: Graph, lists: ListAssignment, b: int) -> str:
    """DIMACS text, satisfiable exactly when decide() reports feasible."""
    return build_cnf(g, lists, b).to_dimacs(g.name, b)
