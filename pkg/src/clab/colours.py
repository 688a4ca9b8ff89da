"""Colour sets, list assignments, b-fold colourings, and the properness check.

Colours are non-negative small integers everywhere; colour sets are
frozensets at API boundaries and int bitmasks inside hot loops.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .graphs import Graph

# Per-vertex permissible colours / per-vertex chosen colours.
ListAssignment = Mapping[str, frozenset]
MultiColouring = Mapping[str, frozenset]


def colour_set(colours: Iterable[int]) -> frozenset:
    s = frozenset(colours)
    for c in s:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ValueError(f"colours must be non-negative integers, got {c!r}")
    return s


def mask_of(colours: Iterable[int]) -> int:
    m = 0
    for c in colours:
        m |= 1 << c
    return m


def bits_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Verdict:
    """Outcome of is_proper: ok, or the first violation in canonical order."""
    ok: bool
    kind: str | None = None   # "size" | "list" | "edge"
    where: object = None      # vertex name or edge pair

    def to_dict(self) -> dict:
        d: dict = {"ok": self.ok}
        if not self.ok:
            d["kind"] = self.kind
            d["where"] = list(self.where) if isinstance(self.where, tuple) else self.where
        return d


def is_proper(g: Graph, lists: ListAssignment, phi: MultiColouring, b: int) -> Verdict:
    """Check that phi is a b-fold colouring from the given lists.

    Scans vertices (size, then list containment) and then edges in canonical
    order, reporting the first violation found.
    """
    for v in g.vertices:
        if v not in phi:
            raise ValueError(f"colouring is missing vertex {v!r}")
    for v in g.vertices:
        s = phi[v]
        if len(s) != b:
            return Verdict(False, "size", v)
        if not s <= lists[v]:
            return Verdict(False, "list", v)
    for u, v in g.edges:
        if phi[u] & phi[v]:
            return Verdict(False, "edge", (u, v))
    return Verdict(True)


@dataclass(frozen=True)
class ColourBlocks:
    """The six palette blocks used by the gadget's list assignment.

    A and B are the two m-sized end blocks, C and D the two (2m+k)-sized
    middle blocks, and X, Xp are disjoint m-subsets of C.
    """
    A: frozenset
    B: frozenset
    C: frozenset
    D: frozenset
    X: frozenset
    Xp: frozenset

    @property
    def universe(self) -> frozenset:
        return self.A | self.B | self.C | self.D

    def validate(self, m: int, k: int) -> None:
        if not (len(self.A) == len(self.B) == m):
            raise ValueError("blocks A and B must have size m")
        if not (len(self.C) == len(self.D) == 2 * m + k):
            raise ValueError("blocks C and D must have size 2m+k")
        blocks = [self.A, self.B, self.C, self.D]
        for i in range(4):
            for j in range(i + 1, 4):
                if blocks[i] & blocks[j]:
                    raise ValueError("blocks A,B,C,D must be pairwise disjoint")
        if not (len(self.X) == len(self.Xp) == m):
            raise ValueError("X and Xp must have size m")
        if self.X & self.Xp:
            raise ValueError("X and Xp must be disjoint")
        if not (self.X <= self.C and self.Xp <= self.C):
            raise ValueError("X and Xp must be subsets of C")

    def to_dict(self) -> dict:
        return {name: sorted(getattr(self, name))
                for name in ("A", "B", "C", "D", "X", "Xp")}


def build_blocks(m: int) -> ColourBlocks:
    """Canonical integer blocks: A, B, X, Xp, rest of C, then D."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    k = (2 * m - 1) // 9
    blocks = ColourBlocks(
        A=frozenset(range(0, m)),
        B=frozenset(range(m, 2 * m)),
        C=frozenset(range(2 * m, 4 * m + k)),
        D=frozenset(range(4 * m + k, 6 * m + 2 * k)),
        X=frozenset(range(2 * m, 3 * m)),
        Xp=frozenset(range(3 * m, 4 * m)),
    )
    blocks.validate(m, k)
    return blocks


def permute_colours(s: frozenset, pi: Mapping[int, int]) -> frozenset:
    return frozenset(pi[c] for c in s)


def permute_assignment(assignment: Mapping[str, frozenset],
                       pi: Mapping[int, int]) -> dict[str, frozenset]:
    return {v: permute_colours(s, pi) for v, s in assignment.items()}
