"""Simple undirected graphs with named vertices and optional rotation systems.

A rotation system (cyclic order of neighbours per vertex) describes a
combinatorial embedding; tracing its faces and checking Euler's formula
certifies planarity of the embedding without a general planarity test.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    """Base class for graph construction and validation errors."""


class DuplicateVertexError(GraphError):
    pass


class LoopEdgeError(GraphError):
    pass


class UnknownEndpointError(GraphError):
    pass


class ParallelEdgeError(GraphError):
    pass


class RotationError(GraphError):
    pass


@dataclass(frozen=True)
class EulerReport:
    vertices: int
    edges: int
    faces: int
    genus_ok: bool


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    `vertices` fixes the canonical order used everywhere (solver branching,
    report ordering, DOT export).  `edges` are stored with endpoints ordered
    by vertex index and sorted, so identical graphs serialize identically.
    """

    name: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    rotation: Mapping[str, tuple[str, ...]] | None = None

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def neighbours(self) -> dict[str, tuple[str, ...]]:
        nbrs: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        idx = self.index
        return {v: tuple(sorted(ns, key=idx.__getitem__)) for v, ns in nbrs.items()}

    @cached_property
    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(e) for e in self.edges)

    def degree(self, v: str) -> int:
        return len(self.neighbours[v])

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edge_set

    def renamed(self, name: str) -> "Graph":
        return Graph(name, self.vertices, self.edges, self.rotation)

    def with_rotation(self, rotation: Mapping[str, Sequence[str]]) -> "Graph":
        rot = {v: tuple(cycle) for v, cycle in rotation.items()}
        g = Graph(self.name, self.vertices, self.edges, rot)
        _validate_rotation(g)
        return g


def build_graph(vertices: Iterable[str], edges: Iterable[tuple[str, str]],
                name: str = "G") -> Graph:
    """Build a simple graph, preserving the given vertex order."""
    verts = tuple(vertices)
    seen: set[str] = set()
    for v in verts:
        if v in seen:
            raise DuplicateVertexError(f"duplicate vertex id {v!r}")
        seen.add(v)
    idx = {v: i for i, v in enumerate(verts)}
    norm: list[tuple[str, str]] = []
    present: set[tuple[str, str]] = set()
    for u, v in edges:
        if u not in idx:
            raise UnknownEndpointError(f"edge endpoint {u!r} is not a vertex")
        if v not in idx:
            raise UnknownEndpointError(f"edge endpoint {v!r} is not a vertex")
        if u == v:
            raise LoopEdgeError(f"loop edge at {u!r}")
        e = (u, v) if idx[u] < idx[v] else (v, u)
        if e in present:
            raise ParallelEdgeError(f"parallel edge {e}")
        present.add(e)
        norm.append(e)
    norm.sort(key=lambda e: (idx[e[0]], idx[e[1]]))
    return Graph(name, verts, tuple(norm))


def glue(parts: Sequence[Graph],
         identify: Mapping[tuple[str, str], str] | None = None,
         extra_edges: Iterable[tuple[str, str]] = (),
         name: str = "H") -> Graph:
    """Disjoint union with identifications, then extra edges.

    `identify` maps (part name, part vertex) to a shared vertex id; all part
    vertices mapped to the same shared id are merged.  Unidentified vertices
    are renamed `<part-name>.<vertex>` so reports are stable across runs.
    Identifications that would create a loop or a parallel edge are rejected.
    """
    identify = dict(identify or {})
    if not parts:
        raise GraphError("glue requires at least one part")
    names = [p.name for p in parts]
    if len(set(names)) != len(names):
        raise DuplicateVertexError(f"glue parts must have distinct names: {names}")
    by_name = {p.name: p for p in parts}
    for (pname, v), shared in identify.items():
        if pname not in by_name:
            raise UnknownEndpointError(f"identify refers to unknown part {pname!r}")
        if v not in by_name[pname].index:
            raise UnknownEndpointError(f"identify refers to unknown vertex {pname!r}.{v!r}")

    shared_names = set(identify.values())
    verts: list[str] = []
    have: set[str] = set()
    rename: dict[tuple[str, str], str] = {}
    for p in parts:
        for v in p.vertices:
            if (p.name, v) in identify:
                final = identify[(p.name, v)]
            else:
                final = f"{p.name}.{v}"
                if final in shared_names:
                    raise DuplicateVertexError(
                        f"shared vertex id {final!r} collides with a part-local name")
            rename[(p.name, v)] = final
            if final not in have:
                have.add(final)
                verts.append(final)

    idx = {v: i for i, v in enumerate(verts)}
    edges: list[tuple[str, str]] = []
    present: set[tuple[str, str]] = set()

    def add_edge(a: str, b: str, origin: str) -> None:
        if a == b:
            raise LoopEdgeError(f"{origin} creates a loop at {a!r}")
        e = (a, b) if idx[a] < idx[b] else (b, a)
        if e in present:
            raise ParallelEdgeError(f"{origin} creates a parallel edge {e}")
        present.add(e)
        edges.append(e)

    for p in parts:
        for u, v in p.edges:
            add_edge(rename[(p.name, u)], rename[(p.name, v)], f"part {p.name!r}")
    for u, v in extra_edges:
        if u not in idx:
            raise UnknownEndpointError(f"extra edge endpoint {u!r} is not a vertex")
        if v not in idx:
            raise UnknownEndpointError(f"extra edge endpoint {v!r} is not a vertex")
        add_edge(u, v, "extra edge")

    edges.sort(key=lambda e: (idx[e[0]], idx[e[1]]))
    return Graph(name, tuple(verts), tuple(edges))


def _validate_rotation(g: Graph) -> None:
    if g.rotation is None:
        raise RotationError(f"graph {g.name!r} has no rotation system")
    for v in g.vertices:
        if v not in g.rotation:
            raise RotationError(f"rotation missing vertex {v!r}")
    for v, cycle in g.rotation.items():
        if v not in g.index:
            raise RotationError(f"rotation names unknown vertex {v!r}")
        if sorted(cycle) != sorted(g.neighbours[v]):
            raise RotationError(
                f"rotation at {v!r} is not a permutation of its neighbours")


def trace_faces(g: Graph) -> list[tuple[tuple[str, str], ...]]:
    """Face orbits of the rotation system.

    Each directed edge belongs to exactly one face; the next directed edge
    after arriving at `v` from `u` continues to the successor of `u` in the
    cyclic order at `v`.
    """
    _validate_rotation(g)
    assert g.rotation is not None
    succ: dict[tuple[str, str], tuple[str, str]] = {}
    for v, cycle in g.rotation.items():
        pos = {n: i for i, n in enumerate(cycle)}
        d = len(cycle)
        for u in cycle:
            succ[(u, v)] = (v, cycle[(pos[u] + 1) % d])
    faces: list[tuple[tuple[str, str], ...]] = []
    unvisited = set(succ)
    for u, v in sorted(succ, key=lambda e: (g.index[e[0]], g.index[e[1]])):
        if (u, v) not in unvisited:
            continue
        face = []
        e = (u, v)
        while e in unvisited:
            unvisited.remove(e)
            face.append(e)
            e = succ[e]
        faces.append(tuple(face))
    return faces


def check_embedding(g: Graph) -> EulerReport:
    """Trace the rotation system's faces and test Euler's formula V-E+F=2."""
    faces = trace_faces(g)
    v, e, f = len(g.vertices), len(g.edges), len(faces)
    return EulerReport(v, e, f, genus_ok=(v - e + f == 2))


def rotation_from_coordinates(
        g: Graph, coords: Mapping[str, tuple[float, float]]) -> dict[str, tuple[str, ...]]:
    """Counter-clockwise neighbour order induced by a straight-line drawing."""
    rot: dict[str, tuple[str, ...]] = {}
    for v in g.vertices:
        vx, vy = coords[v]
        rot[v] = tuple(sorted(
            g.neighbours[v],
            key=lambda n: math.atan2(coords[n][1] - vy, coords[n][0] - vx)))
    return rot


def induced_subgraph(g: Graph, keep: Iterable[str], name: str | None = None) -> Graph:
    keep_set = set(keep)
    for v in keep_set:
        if v not in g.index:
            raise UnknownEndpointError(f"unknown vertex {v!r}")
    verts = [v for v in g.vertices if v in keep_set]
    edges = [e for e in g.edges if e[0] in keep_set and e[1] in keep_set]
    return build_graph(verts, edges, name=name or f"{g.name}[{len(verts)}]")


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Backtracking isomorphism test for small instances (tens of vertices)."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    deg1 = sorted(g1.degree(v) for v in g1.vertices)
    deg2 = sorted(g2.degree(v) for v in g2.vertices)
    if deg1 != deg2:
        return False
    order = sorted(g1.vertices, key=lambda v: -g1.degree(v))
    candidates = {
        v: [w for w in g2.vertices if g2.degree(w) == g1.degree(v)] for v in order}
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            ok = True
            for n in g1.neighbours[v]:
                if n in mapping and not g2.has_edge(w, mapping[n]):
                    ok = False
                    break
            if ok:
                for n in mapping:
                    if g1.has_edge(v, n) != g2.has_edge(w, mapping[n]):
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    return extend(0)


_JSON_KEYS = {"name", "vertices", "edges", "lists", "b", "rotation"}


def graph_to_json_dict(g: Graph,
                       lists: Mapping[str, frozenset[int]] | None = None,
                       b: int | None = None) -> dict:
    doc: dict = {
        "name": g.name,
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edges],
    }
    if lists is not None:
        doc["lists"] = {v: sorted(lists[v]) for v in g.vertices if v in lists}
    if b is not None:
        doc["b"] = b
    if g.rotation is not None:
        doc["rotation"] = {v: list(g.rotation[v]) for v in g.vertices}
    return doc


def graph_from_json_dict(doc: Mapping) -> tuple[Graph, dict[str, frozenset[int]] | None, int | None]:
    """Parse the JSON graph document; unknown keys are rejected."""
    if not isinstance(doc, Mapping):
        raise GraphError("graph document must be a JSON object")
    unknown = set(doc) - _JSON_KEYS
    if unknown:
        raise GraphError(f"unknown keys in graph document: {sorted(unknown)}")
    if "vertices" not in doc or "edges" not in doc:
        raise GraphError("graph document needs 'vertices' and 'edges'")
    name = doc.get("name", "G")
    if not isinstance(name, str):
        raise GraphError("'name' must be a string")
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphError("'vertices' must be a list of strings")
    edges = doc["edges"]
    if not isinstance(edges, list) or not all(
            isinstance(e, (list, tuple)) and len(e) == 2 for e in edges):
        raise GraphError("'edges' must be a list of 2-element lists")
    g = build_graph(vertices, [tuple(e) for e in edges], name=name)

    lists = None
    if doc.get("lists") is not None:
        raw = doc["lists"]
        if not isinstance(raw, Mapping):
            raise GraphError("'lists' must be an object")
        lists = {}
        for v, cs in raw.items():
            if v not in g.index:
                raise GraphError(f"'lists' names unknown vertex {v!r}")
            if not isinstance(cs, list) or not all(
                    isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in cs):
                raise GraphError(f"list of {v!r} must hold non-negative integers")
            lists[v] = frozenset(cs)

    b = doc.get("b")
    if b is not None and (not isinstance(b, int) or isinstance(b, bool) or b < 1):
        raise GraphError("'b' must be a positive integer")

    if doc.get("rotation") is not None:
        raw = doc["rotation"]
        if not isinstance(raw, Mapping):
            raise GraphError("'rotation' must be an object")
        g = g.with_rotation({v: tuple(c) for v, c in raw.items()})
    return g, lists, b


def export_dot(g: Graph, lists: Mapping[str, frozenset[int]] | None = None) -> str:
    """Deterministic DOT text; vertex labels include lists when provided."""
    out = [f'graph "{g.name}" {{']
    for v in g.vertices:
        if lists is not None and v in lists:
            label = f"{v}:{{{','.join(str(c) for c in sorted(lists[v]))}}}"
        else:
            label = v
        out.append(f'  "{v}" [label="{label}"];')
    for u, v in g.edges:
        out.append(f'  "{u}" -- "{v}";')
    out.append("}")
    return "\n".join(out) + "\n"
