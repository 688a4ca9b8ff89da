"""Exploration beyond the built-in family: witness search, (a,b)-colouring,
and the fractional chromatic number at desk scale.

Witness search enumerates a-list assignments up to simultaneous colour
permutation.  The canonical representatives are exactly the assignments
where, scanning vertices in order and each list ascending, every colour seen
for the first time equals the number of colours seen so far; they are
generated directly, so the permutation symmetry never inflates the search.
A universe of a*|V| colours is enough for completeness: any witness can be
relabelled so each vertex draws from a private palette.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .colours import ListAssignment
from .graphs import Graph
from .solver import Budget, decide

WITNESS = "witness"
PROVED_CHOOSABLE = "proved_choosable"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class WitnessResult:
    status: str
    lists: dict | None
    assignments_tried: int
    complete: bool

    def to_dict(self) -> dict:
        d: dict = {"status": self.status,
                   "assignments_tried": self.assignments_tried,
                   "complete": self.complete}
        if self.lists is not None:
            d["lists"] = {v: sorted(s) for v, s in self.lists.items()}
        return d


def _candidate_sets(seen: int, a: int, universe: int) -> list[tuple[int, ...]]:
    """Canonical next lists: any old colours plus a consecutive run of new ones."""
    out = []
    for fresh in range(0, a + 1):
        if seen + fresh > universe:
            break
        run = tuple(range(seen, seen + fresh))
        for old in combinations(range(seen), a - fresh):
            out.append(tuple(sorted(old + run)))
    out.sort()
    return out


def search_witness(g: Graph, a: int, b: int, universe: int | None = None,
                   budget: Budget | None = None) -> WitnessResult:
    """Find an a-list assignment with no b-fold colouring, up to symmetry.

    Returns the lexicographically least canonical witness, or
    proved_choosable after exhausting the deduplicated space with a universe
    of at least a*|V| colours, or exhausted when the budget runs out first.
    """
    if a < b or b < 1:
        raise ValueError("need a >= b >= 1")
    n = len(g.vertices)
    if universe is None:
        universe = a * n
    if universe < a:
        raise ValueError(f"universe {universe} is smaller than the list size {a}")
    budget = budget or Budget(max_nodes=1_000_000, max_seconds=300.0)
    deadline = time.monotonic() + budget.max_seconds

    tried = 0
    witness: dict | None = None
    cut_off = False
    chosen: list[tuple[int, ...]] = []

    def extend(i: int, seen: int) -> bool:
        nonlocal tried, witness, cut_off
        if i == n:
            if tried >= budget.max_nodes or time.monotonic() > deadline:
                cut_off = True
                return True
            tried += 1
            lists = {v: frozenset(chosen[j]) for j, v in enumerate(g.vertices)}
            if decide(g, lists, b).infeasible:
                witness = lists
                return True
            return False
        for cand in _candidate_sets(seen, a, universe):
            chosen.append(cand)
            new_seen = max(seen, cand[-1] + 1) if cand else seen
            done = extend(i + 1, new_seen)
            chosen.pop()
            if done:
                return True
        return False

    extend(0, 0)
    if witness is not None:
        return WitnessResult(WITNESS, witness, tried, complete=False)
    if cut_off:
        return WitnessResult(EXHAUSTED, None, tried, complete=False)
    if universe >= a * n:
        return WitnessResult(PROVED_CHOOSABLE, None, tried, complete=True)
    # full enumeration, but the universe was too small to certify choosability
    return WitnessResult(EXHAUSTED, None, tried, complete=True)


def check_witness(g: Graph, lists: ListAssignment, b: int,
                  budget: Budget | None = None) -> dict:
    """Confirm a given assignment blocks every b-fold colouring."""
    outcome = decide(g, lists, b, budget)
    return {
        "is_witness": outcome.infeasible,
        "outcome": outcome.status,
        "list_sizes": {v: len(lists[v]) for v in g.vertices},
    }


def decide_ab(g: Graph, a: int, b: int, budget: Budget | None = None) -> bool:
    """Whether a b-fold colouring exists from the fixed palette {0..a-1}."""
    if b < 1 or a < b:
        raise ValueError("need a >= b >= 1")
    palette = frozenset(range(a))
    outcome = decide(g, {v: palette for v in g.vertices}, b, budget)
    if outcome.exhausted:
        raise RuntimeError("budget exhausted while deciding (a,b)-colourability")
    return outcome.feasible


def _independence_number(g: Graph) -> int:
    verts = list(g.vertices)
    n = len(verts)
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        members = [verts[i] for i in range(n) if (mask >> i) & 1]
        if all(not g.has_edge(u, v) for u, v in combinations(members, 2)):
            best = size
    return best


def _clique_number(g: Graph) -> int:
    verts = list(g.vertices)
    n = len(verts)
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        members = [verts[i] for i in range(n) if (mask >> i) & 1]
        if all(g.has_edge(u, v) for u, v in combinations(members, 2)):
            best = size
    return best


@dataclass(frozen=True)
class ChiFResult:
    value: Fraction
    achieved_a: int
    achieved_b: int
    kind: str   # "exact" when the value meets a known lower bound, else "bound"

    def to_dict(self) -> dict:
        return {
            "value": str(self.value),
            "numerator": self.value.numerator,
            "denominator": self.value.denominator,
            "achieved_a": self.achieved_a,
            "achieved_b": self.achieved_b,
            "kind": self.kind,
        }


def chi_f(g: Graph, max_b: int, budget: Budget | None = None) -> ChiFResult:
    """Minimum a/b over b <= max_b with the graph (a,b)-colourable.

    Always an upper bound on the fractional chromatic number; reported as
    exact when it meets max(|V|/alpha, omega), which certifies optimality.
    """
    if max_b < 1:
        raise ValueError("max_b must be a positive integer")
    n = len(g.vertices)
    if n > 10:
        raise ValueError("chi_f is limited to graphs with at most 10 vertices")
    if n == 0:
        return ChiFResult(Fraction(0), 0, 1, "exact")
    best: tuple[Fraction, int, int] | None = None
    for b in range(1, max_b + 1):
        # a = b*n is always feasible (private palettes), so the scan terminates
        for a in range(b, b * n + 1):
            if best is not None and Fraction(a, b) >= best[0]:
                break
            if decide_ab(g, a, b, budget):
                best = (Fraction(a, b), a, b)
                break
    assert best is not None
    value, a, b = best
    if g.edges:
        lower = max(Fraction(n, _independence_number(g)),
                    Fraction(_clique_number(g)))
    else:
        lower = Fraction(1)
    kind = "exact" if value == lower else "bound"
    return ChiFResult(value, a, b, kind)
