"""Exact decision procedure for b-fold list colouring, plus a brute-force oracle.

The main search is a deterministic depth-first search: the next vertex is the
uncoloured one minimizing |available| - b * (uncoloured neighbours), ties
broken by canonical vertex order; branches run over b-subsets of the
available colours in lexicographic order; chosen colours are deleted from
neighbours' available sets, and any uncoloured vertex dropping below b
available colours prunes the branch.  Vertices with exactly b available
colours are assigned immediately without branching.  When the uncoloured part
falls apart into disconnected pieces, the pieces are solved independently;
this changes no verdict and keeps amplified instances tractable.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .colours import ListAssignment, bits_of, mask_of
from .graphs import Graph

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
EXHAUSTED = "exhausted"


class InstanceTooLargeError(ValueError):
    """Brute force refuses large instances unless forced."""


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 100_000_000
    max_seconds: float = 300.0

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    max_depth: int = 0
    forced_assignments: int = 0

    def to_dict(self) -> dict:
        return {
            "nodes_expanded": self.nodes_expanded,
            "max_depth": self.max_depth,
            "forced_assignments": self.forced_assignments,
        }


@dataclass(frozen=True)
class Outcome:
    status: str
    colouring: dict[str, frozenset] | None
    stats: SearchStats
    trivial_vertex: str | None = None
    count: int | None = None

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    @property
    def infeasible(self) -> bool:
        return self.status == INFEASIBLE

    @property
    def exhausted(self) -> bool:
        return self.status == EXHAUSTED

    def to_dict(self) -> dict:
        d: dict = {"status": self.status}
        if self.colouring is not None:
            d["colouring"] = {v: sorted(s) for v, s in self.colouring.items()}
        if self.trivial_vertex is not None:
            d["trivial_vertex"] = self.trivial_vertex
        if self.count is not None:
            d["count"] = self.count
        d["stats"] = self.stats.to_dict()
        return d


class _Cutoff(Exception):
    pass


class _Search:
    __slots__ = ("b", "adj", "avail", "phi", "trail", "stats", "depth",
                 "max_nodes", "deadline")

    def __init__(self, g: Graph, lists: ListAssignment, b: int, budget: Budget):
        idx = g.index
        n = len(g.vertices)
        self.b = b
        self.adj: list[tuple[int, ...]] = [() for _ in range(n)]
        for v in g.vertices:
            self.adj[idx[v]] = tuple(idx[u] for u in g.neighbours[v])
        self.avail = [mask_of(lists[v]) for v in g.vertices]
        self.phi = [0] * n
        self.trail: list[tuple[int, int]] = []
        self.stats = SearchStats()
        self.depth = 0
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.max_seconds

    def _tick(self) -> None:
        self.stats.nodes_expanded += 1
        if self.stats.nodes_expanded > self.max_nodes:
            raise _Cutoff
        if (self.stats.nodes_expanded & 1023) == 0 and time.monotonic() > self.deadline:
            raise _Cutoff

    def _assign(self, v: int, mask: int) -> bool:
        """Colour v with mask, propagate to neighbours; False on a dead end."""
        self.phi[v] = mask
        self.depth += 1
        if self.depth > self.stats.max_depth:
            self.stats.max_depth = self.depth
        self.trail.append((v, -1))
        b = self.b
        ok = True
        for n in self.adj[v]:
            if not self.phi[n]:
                old = self.avail[n]
                new = old & ~mask
                if new != old:
                    self.avail[n] = new
                    self.trail.append((n, old))
                    if new.bit_count() < b:
                        ok = False
                        break
        return ok

    def _undo(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            n, x = trail.pop()
            if x == -1:
                self.phi[n] = 0
                self.depth -= 1
            else:
                self.avail[n] = x

    def _components(self, todo: list[int]) -> list[list[int]]:
        alive = set(todo)
        seen: set[int] = set()
        comps: list[list[int]] = []
        for v in todo:
            if v in seen:
                continue
            stack = [v]
            comp = []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for n in self.adj[x]:
                    if n in alive and n not in seen:
                        seen.add(n)
                        stack.append(n)
            comp.sort()
            comps.append(comp)
        return comps

    def solve(self, active: list[int]) -> bool:
        todo = [v for v in active if not self.phi[v]]
        if not todo:
            return True
        mark = len(self.trail)
        b = self.b

        # Forced assignments first: exactly b colours available means no choice.
        progress = True
        while progress:
            progress = False
            for v in todo:
                if self.phi[v]:
                    continue
                av = self.avail[v]
                if av.bit_count() == b:
                    self._tick()
                    self.stats.forced_assignments += 1
                    if not self._assign(v, av):
                        self._undo(mark)
                        return False
                    progress = True
        todo = [v for v in todo if not self.phi[v]]
        if not todo:
            return True

        comps = self._components(todo)
        if len(comps) > 1:
            for comp in comps:
                if not self.solve(comp):
                    self._undo(mark)
                    return False
            return True

        best_key: tuple[int, int] | None = None
        for v in todo:
            unc = 0
            for n in self.adj[v]:
                if not self.phi[n]:
                    unc += 1
            key = (self.avail[v].bit_count() - b * unc, v)
            if best_key is None or key < best_key:
                best_key = key
        assert best_key is not None
        v = best_key[1]

        for combo in combinations(bits_of(self.avail[v]), b):
            self._tick()
            mark2 = len(self.trail)
            if self._assign(v, mask_of(combo)) and self.solve(todo):
                return True
            self._undo(mark2)
        self._undo(mark)
        return False


def _validate(g: Graph, lists: ListAssignment, b: int) -> None:
    if b < 1:
        raise ValueError("b must be a positive integer")
    for v in g.vertices:
        if v not in lists:
            raise ValueError(f"list assignment is missing vertex {v!r}")
        for c in lists[v]:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"list of {v!r} holds a non-colour: {c!r}")


def decide(g: Graph, lists: ListAssignment, b: int,
           budget: Budget | None = None) -> Outcome:
    """Decide exactly whether a b-fold colouring from the lists exists.

    Deterministic: the same input always yields the same outcome and, when
    feasible, the same witness colouring.
    """
    budget = budget or Budget()
    _validate(g, lists, b)
    for v in g.vertices:
        if len(lists[v]) < b:
            return Outcome(INFEASIBLE, None, SearchStats(nodes_expanded=1),
                           trivial_vertex=v)
    if not g.vertices:
        return Outcome(FEASIBLE, {}, SearchStats())
    search = _Search(g, lists, b, budget)
    try:
        found = search.solve(list(range(len(g.vertices))))
    except _Cutoff:
        return Outcome(EXHAUSTED, None, search.stats)
    if found:
        colouring = {v: frozenset(bits_of(search.phi[i]))
                     for i, v in enumerate(g.vertices)}
        return Outcome(FEASIBLE, colouring, search.stats)
    return Outcome(INFEASIBLE, None, search.stats)


def brute_force(g: Graph, lists: ListAssignment, b: int,
                force: bool = False) -> Outcome:
    """Enumerate every per-vertex b-subset; prune only on properness.

    Counts all proper colourings, keeping the first as witness.  Intended for
    at most 8 vertices and 6-colour lists; pass force=True to override.
    """
    _validate(g, lists, b)
    n = len(g.vertices)
    if not force and (n > 8 or any(len(lists[v]) > 6 for v in g.vertices)):
        raise InstanceTooLargeError(
            f"brute force refused: {n} vertices, "
            f"max list {max((len(lists[v]) for v in g.vertices), default=0)}; "
            "pass force=True to override")
    idx = g.index
    adj_lower: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        i, j = idx[u], idx[v]
        adj_lower[max(i, j)].append(min(i, j))
    options = [tuple(combinations(sorted(lists[v]), b)) for v in g.vertices]
    phi = [0] * n
    stats = SearchStats()
    first: list[int] | None = None
    count = 0

    def enumerate_from(i: int) -> None:
        nonlocal first, count
        if i == n:
            count += 1
            if first is None:
                first = phi[:]
            return
        stats.max_depth = max(stats.max_depth, i + 1)
        for combo in options[i]:
            mask = mask_of(combo)
            stats.nodes_expanded += 1
            if any(phi[j] & mask for j in adj_lower[i]):
                continue
            phi[i] = mask
            enumerate_from(i + 1)
            phi[i] = 0

    enumerate_from(0)
    if count:
        assert first is not None
        colouring = {v: frozenset(bits_of(first[i])) for i, v in enumerate(g.vertices)}
        return Outcome(FEASIBLE, colouring, stats, count=count)
    return Outcome(INFEASIBLE, None, stats, count=0)
