"""The built-in planar gadget family G(m) and its amplification H(m).

G(m) is an 18-vertex planar graph: a frame of two apex vertices u, u' joined
through the shared edge path v--w, with hub vertices t (inside triangle
u,v,w) and t' (inside u',v,w), and an octahedron-style inner triangle sunk
into each of the four faces (u,v,t), (u,w,t), (u',v,t'), (u',w,t').  Its list
assignment is built from the palette blocks A, B, C, D, X, X' and admits no
m-fold colouring, although every list except the two size-m apex lists has
size 4m+k with k = floor((2m-1)/9).

H(m) glues p = multinomial(4m+k; m, m, 2m+k) copies of G at u and u' and adds
the edge uu'; with all-Z lists on u and u' (|Z| = 4m+k), every way to colour
u and u' is blocked by its matching copy.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .colours import ColourBlocks, build_blocks
from .graphs import Graph, build_graph, glue, rotation_from_coordinates


class CapExceededError(ValueError):
    """Materializing H would exceed the configured vertex cap."""


FRAME = ("u", "u'", "v", "w", "t", "t'")

GADGET_VERTICES = FRAME + (
    "a", "b", "c", "x", "y", "z",
    "a'", "b'", "c'", "x'", "y'", "z'",
)

# Frame edges, then one inner triangle per face, each tied to its three
# surrounding frame vertices the way an octahedron's inner triangle is.
GADGET_EDGES = (
    # frame
    ("u", "v"), ("u", "w"), ("u", "t"), ("v", "w"), ("v", "t"), ("w", "t"),
    ("u'", "v"), ("u'", "w"), ("u'", "t'"), ("v", "t'"), ("w", "t'"),
    # inner triangle of face (u, v, t)
    ("a", "b"), ("b", "c"), ("c", "a"),
    ("a", "u"), ("a", "v"), ("b", "v"), ("b", "t"), ("c", "t"), ("c", "u"),
    # inner triangle of face (u, w, t)
    ("x", "y"), ("y", "z"), ("z", "x"),
    ("x", "u"), ("x", "w"), ("y", "w"), ("y", "t"), ("z", "t"), ("z", "u"),
    # inner triangle of face (u', v, t')
    ("a'", "b'"), ("b'", "c'"), ("c'", "a'"),
    ("b'", "u'"), ("b'", "v"), ("a'", "v"), ("a'", "t'"), ("c'", "t'"), ("c'", "u'"),
    # inner triangle of face (u', w, t')
    ("x'", "y'"), ("y'", "z'"), ("z'", "x'"),
    ("y'", "u'"), ("y'", "w"), ("x'", "w"), ("x'", "t'"), ("z'", "t'"), ("z'", "u'"),
)

INNER_TRIANGLES = (
    ("a", "b", "c"),
    ("x", "y", "z"),
    ("a'", "b'", "c'"),
    ("x'", "y'", "z'"),
)


def _face_point(p: tuple[float, float], q: tuple[float, float],
                r: tuple[float, float]) -> tuple[float, float]:
    # near the midpoint of side pq, pulled slightly towards corner r
    return (0.45 * p[0] + 0.45 * q[0] + 0.10 * r[0],
            0.45 * p[1] + 0.45 * q[1] + 0.10 * r[1])


def _gadget_coordinates() -> dict[str, tuple[float, float]]:
    u, up = (0.0, 4.0), (0.0, -4.0)
    v, w = (-4.0, 0.0), (4.0, 0.0)
    t, tp = (0.0, 1.6), (0.0, -1.6)
    return {
        "u": u, "u'": up, "v": v, "w": w, "t": t, "t'": tp,
        # face (u, v, t): a ~ u,v; b ~ v,t; c ~ t,u
        "a": _face_point(u, v, t), "b": _face_point(v, t, u), "c": _face_point(t, u, v),
        # face (u, w, t): x ~ u,w; y ~ w,t; z ~ t,u
        "x": _face_point(u, w, t), "y": _face_point(w, t, u), "z": _face_point(t, u, w),
        # face (u', v, t'): b' ~ u',v; a' ~ v,t'; c' ~ t',u'
        "b'": _face_point(up, v, tp), "a'": _face_point(v, tp, up), "c'": _face_point(tp, up, v),
        # face (u', w, t'): y' ~ u',w; x' ~ w,t'; z' ~ t',u'
        "y'": _face_point(up, w, tp), "x'": _face_point(w, tp, up), "z'": _face_point(tp, up, w),
    }


_GADGET_GRAPH: Graph | None = None


def gadget_graph() -> Graph:
    """The shared 18-vertex graph with its planar rotation system."""
    global _GADGET_GRAPH
    if _GADGET_GRAPH is None:
        g = build_graph(GADGET_VERTICES, GADGET_EDGES, name="G")
        rot = rotation_from_coordinates(g, _gadget_coordinates())
        _GADGET_GRAPH = g.with_rotation(rot)
    return _GADGET_GRAPH


@dataclass(frozen=True)
class GadgetParams:
    m: int
    k: int
    a: int   # list size 4m+k
    p: int   # copy count, exact big integer

    def to_dict(self) -> dict:
        return {"m": self.m, "k": self.k, "a": self.a, "p": self.p}


@dataclass(frozen=True)
class GadgetInstance:
    graph: Graph
    lists: dict
    blocks: ColourBlocks
    params: GadgetParams


def k_of(m: int) -> int:
    if m < 1:
        raise ValueError("m must be a positive integer")
    return (2 * m - 1) // 9


def p_of(m: int) -> int:
    k = k_of(m)
    return comb(4 * m + k, m) * comb(3 * m + k, m)


def params_of(m: int) -> GadgetParams:
    k = k_of(m)
    return GadgetParams(m=m, k=k, a=4 * m + k, p=p_of(m))


def lists_from_blocks(blocks: ColourBlocks,
                      u_list: frozenset | None = None,
                      up_list: frozenset | None = None) -> dict:
    """The gadget's list pattern over the given blocks.

    u and u' default to the end blocks A and B; the amplified construction
    pins them to the chosen pair instead.
    """
    A, B, C, D, X, Xp = (blocks.A, blocks.B, blocks.C, blocks.D,
                         blocks.X, blocks.Xp)
    lists = {
        "u": A if u_list is None else u_list,
        "u'": B if up_list is None else up_list,
        "v": A | B | C, "w": A | B | C, "t": A | B | C, "t'": A | B | C,
        "x": X | A | D, "a": X | A | D,
        "x'": Xp | A | D, "a'": Xp | A | D,
        "y": X | B | D, "b": X | B | D,
        "y'": Xp | B | D, "b'": Xp | B | D,
        "z": A | B | D, "c": A | B | D, "z'": A | B | D, "c'": A | B | D,
    }
    return lists


def build_G(m: int) -> GadgetInstance:
    """The gadget with its canonical blocks and list assignment."""
    blocks = build_blocks(m)
    return GadgetInstance(
        graph=gadget_graph(),
        lists=lists_from_blocks(blocks),
        blocks=blocks,
        params=params_of(m),
    )


def enumerate_pairs(m: int) -> Iterator[tuple[frozenset, frozenset]]:
    """All ordered pairs of disjoint m-subsets of Z = {0..4m+k-1}, lex order."""
    k = k_of(m)
    z = range(4 * m + k)
    for p_tuple in combinations(z, m):
        rest = [c for c in z if c not in set(p_tuple)]
        for q_tuple in combinations(rest, m):
            yield frozenset(p_tuple), frozenset(q_tuple)


def pair_blocks(m: int, P: frozenset, Q: frozenset) -> ColourBlocks:
    """Blocks for the copy matching the pair (P, Q).

    C is what remains of Z; D is a fresh block disjoint from Z; X and X' are
    the two lexicographically first disjoint m-subsets of C.
    """
    k = k_of(m)
    Z = frozenset(range(4 * m + k))
    if not (P <= Z and Q <= Z and len(P) == len(Q) == m and not P & Q):
        raise ValueError("P and Q must be disjoint m-subsets of the shared palette")
    C = Z - P - Q
    cs = sorted(C)
    blocks = ColourBlocks(
        A=P, B=Q, C=C,
        D=frozenset(range(4 * m + k, 6 * m + 2 * k)),
        X=frozenset(cs[:m]),
        Xp=frozenset(cs[m:2 * m]),
    )
    blocks.validate(m, k)
    return blocks


def instance_for_pair(m: int, P: frozenset, Q: frozenset) -> GadgetInstance:
    """The copy of G whose u, u' lists are pinned to the pair (P, Q)."""
    blocks = pair_blocks(m, P, Q)
    return GadgetInstance(
        graph=gadget_graph(),
        lists=lists_from_blocks(blocks),
        blocks=blocks,
        params=params_of(m),
    )


@dataclass(frozen=True)
class HInstance:
    """The amplified graph, or a lazy descriptor of it.

    `graph`/`lists` are None in lazy mode; `pairs` always enumerates the
    copies in canonical order, copy i carrying the lists of pair i.
    """
    params: GadgetParams
    pairs: tuple[tuple[frozenset, frozenset], ...]
    graph: Graph | None
    lists: dict | None

    @property
    def materialized(self) -> bool:
        return self.graph is not None

    def copy_instances(self) -> Iterator[GadgetInstance]:
        for P, Q in self.pairs:
            yield instance_for_pair(self.params.m, P, Q)


def build_H(m: int, cap: int = 10_000, lazy: bool = False) -> HInstance:
    """Glue p copies of G at u and u', add the edge uu', attach bad lists.

    The bad list assignment gives u and u' the full shared palette Z and each
    copy the pair-substituted gadget lists, so that no m-fold colouring
    exists.  Materialization is refused above `cap` vertices unless lazy.
    """
    params = params_of(m)
    pairs = tuple(enumerate_pairs(m))
    n_vertices = params.p * 16 + 2
    if lazy:
        return HInstance(params, pairs, None, None)
    if n_vertices > cap:
        raise CapExceededError(
            f"H({m}) needs {n_vertices} vertices, above the cap of {cap}; "
            "use lazy mode or per-copy verification")
    base = gadget_graph()
    parts = [base.renamed(f"copy{i}") for i in range(params.p)]
    identify = {}
    for i in range(params.p):
        identify[(f"copy{i}", "u")] = "u"
        identify[(f"copy{i}", "u'")] = "u'"
    graph = glue(parts, identify, extra_edges=[("u", "u'")], name=f"H{m}")

    Z = frozenset(range(4 * m + params.k))
    lists: dict = {"u": Z, "u'": Z}
    for i, (P, Q) in enumerate(pairs):
        copy_lists = lists_from_blocks(pair_blocks(m, P, Q))
        for v, s in copy_lists.items():
            if v not in ("u", "u'"):
                lists[f"copy{i}.{v}"] = s
    return HInstance(params, pairs, graph, lists)
