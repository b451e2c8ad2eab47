"""Finite directed multigraphs, strongly connected components and finiteness analysis.

Graphs are immutable. Vertex and edge ids are opaque strings matching
``[A-Za-z0-9_]+`` and live in disjoint namespaces; parallel edges and loops are
allowed.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import GraphFormatError, UnknownIdError

ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str


class Graph:
    """An immutable finite directed multigraph ``(E0, E1, s, r)``."""

    __slots__ = ("vertices", "edges", "_edge", "_out", "_in", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge | tuple]):
        vertices = list(vertices)
        edges = [e if isinstance(e, Edge) else Edge(*e) for e in edges]
        seen: set[str] = set()
        for v in vertices:
            _check_id(v)
            if v in seen:
                raise GraphFormatError(f"duplicate vertex id {v!r}")
            seen.add(v)
        edge_map: dict[str, Edge] = {}
        for e in edges:
            _check_id(e.id)
            if e.id in edge_map:
                raise GraphFormatError(f"duplicate edge id {e.id!r}")
            if e.id in seen:
                raise GraphFormatError(f"id {e.id!r} used for both a vertex and an edge")
            for end in (e.src, e.dst):
                if end not in seen:
                    raise GraphFormatError(f"edge {e.id!r} has dangling endpoint {end!r}")
            edge_map[e.id] = e

        self.vertices: tuple[str, ...] = tuple(sorted(seen))
        self.edges: tuple[Edge, ...] = tuple(edge_map[k] for k in sorted(edge_map))
        self._edge = edge_map
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
            inc[e.dst].append(e)
        self._out = {v: tuple(es) for v, es in out.items()}
        self._in = {v: tuple(es) for v, es in inc.items()}
        self._hash = hash((self.vertices, self.edges))

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._edge[edge_id]
        except KeyError:
            raise UnknownIdError(f"unknown edge {edge_id!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._out

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._edge

    def check_vertex(self, v: str) -> str:
        if v not in self._out:
            raise UnknownIdError(f"unknown vertex {v!r}")
        return v

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        return self._out[self.check_vertex(v)]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        return self._in[self.check_vertex(v)]

    def successors(self, v: str) -> list[str]:
        return [e.dst for e in self.out_edges(v)]

    def is_rose(self) -> bool:
        return len(self.vertices) == 1

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in self.edges],
        }

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(vertices={list(self.vertices)}, edges={[e.id for e in self.edges]})"


def _check_id(ident) -> None:
    if not isinstance(ident, str) or not ID_RE.match(ident):
        raise GraphFormatError(f"invalid id {ident!r}: ids must match [A-Za-z0-9_]+")


def load_graph(document: str | bytes | Mapping) -> Graph:
    """Build a validated :class:`Graph` from the canonical JSON document.

    >>> g = load_graph('{"vertices": ["a", "b"], "edges": [{"id": "x", "src": "a", "dst": "b"}]}')
    >>> len(g.vertices), len(g.edges)
    (2, 1)
    """
    if isinstance(document, (str, bytes)):
        try:
            data = json.loads(document)
        except ValueError as exc:
            raise GraphFormatError(f"malformed graph document: {exc}") from None
    else:
        data = document
    if not isinstance(data, Mapping):
        raise GraphFormatError("graph document must be an object")
    extra = set(data) - {"vertices", "edges"}
    if extra:
        raise GraphFormatError(f"unknown key {sorted(extra)[0]!r} in graph document")
    vertices = data.get("vertices")
    edges = data.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphFormatError("'vertices' and 'edges' must be lists")
    parsed = []
    for rec in edges:
        if not isinstance(rec, Mapping):
            raise GraphFormatError(f"edge record {rec!r} is not an object")
        keys = set(rec)
        if keys != {"id", "src", "dst"}:
            bad = sorted(keys ^ {"id", "src", "dst"})[0]
            raise GraphFormatError(f"edge record {rec.get('id')!r}: bad or missing key {bad!r}")
        parsed.append(Edge(rec["id"], rec["src"], rec["dst"]))
    return Graph(vertices, parsed)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_graph(fh.read())


# --- strongly connected components ----------------------------------------


def _tarjan(vertices: Iterable[str], succ) -> list[list[str]]:
    # Iterative Tarjan: linear time, no recursion limit.
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    result: list[list[str]] = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ(root)))]
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    result.append(comp)
    return result


class ComponentSet:
    """Strongly connected components of a graph with their partial order.

    ``X <= Y`` iff some path starts in ``Y`` and ends in ``X``.
    """

    def __init__(self, graph: Graph, blocks: list[frozenset[str]]):
        self.graph = graph
        self.blocks: tuple[frozenset[str], ...] = tuple(sorted(blocks, key=lambda b: sorted(b)))
        self._index = {b: i for i, b in enumerate(self.blocks)}
        self._block_of = {v: b for b in self.blocks for v in b}
        # Reachable blocks per block (reflexive), via the condensation DAG.
        dag: dict[int, set[int]] = {i: set() for i in range(len(self.blocks))}
        for e in graph.edges:
            i, j = self._index[self._block_of[e.src]], self._index[self._block_of[e.dst]]
            if i != j:
                dag[i].add(j)
        reach: dict[int, frozenset[int]] = {}
        for i in range(len(self.blocks)):
            if i in reach:
                continue
            _close(i, dag, reach)
        self._reach = reach

    def block_of(self, v: str) -> frozenset[str]:
        self.graph.check_vertex(v)
        return self._block_of[v]

    def check_block(self, block) -> frozenset[str]:
        block = frozenset(block)
        if block not in self._index:
            raise UnknownIdError(f"{sorted(block)} is not a strongly connected component")
        return block

    def leq(self, x, y) -> bool:
        x, y = self.check_block(x), self.check_block(y)
        return self._index[x] in self._reach[self._index[y]]

    def below(self, block) -> list[frozenset[str]]:
        """Blocks strictly below ``block``."""
        block = self.check_block(block)
        i = self._index[block]
        return [self.blocks[j] for j in sorted(self._reach[i]) if j != i]

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


def _close(start: int, dag: dict[int, set[int]], reach: dict[int, frozenset[int]]) -> None:
    # Post-order DFS over the DAG; each node's reach is the union of its children's.
    stack = [(start, iter(sorted(dag[start])))]
    while stack:
        node, it = stack[-1]
        for child in it:
            if child not in reach:
                stack.append((child, iter(sorted(dag[child]))))
                break
        else:
            stack.pop()
            acc = {node}
            for child in dag[node]:
                acc |= reach[child]
            reach[node] = frozenset(acc)


def scc(g: Graph) -> ComponentSet:
    blocks = _tarjan(g.vertices, g.successors)
    return ComponentSet(g, [frozenset(b) for b in blocks])


def component_order(cs: ComponentSet, x, y) -> bool:
    return cs.leq(x, y)


def induced_subgraph(g: Graph, vertices: Iterable[str]) -> Graph:
    keep = set(vertices)
    if not keep:
        raise GraphFormatError("induced subgraph needs a nonempty vertex set")
    for v in keep:
        g.check_vertex(v)
    return Graph(keep, [e for e in g.edges if e.src in keep and e.dst in keep])


# --- cycles and finiteness --------------------------------------------------


def is_acyclic(g: Graph) -> bool:
    if any(e.src == e.dst for e in g.edges):
        return False
    return all(len(b) == 1 for b in scc(g).blocks)


def is_acyclic_at(g: Graph, e: str) -> bool:
    g.check_vertex(e)
    if any(edge.dst == e for edge in g.out_edges(e)):
        return False
    return len(scc(g).block_of(e)) == 1


def _cyclic_vertices(g: Graph, keep: set[str]) -> set[str]:
    """Vertices of ``keep`` lying on a cycle inside the subgraph induced by ``keep``."""
    succ = lambda v: [e.dst for e in g.out_edges(v) if e.dst in keep]
    cyclic = set()
    for block in _tarjan(sorted(keep), succ):
        if len(block) > 1:
            cyclic.update(block)
        elif any(e.dst == block[0] for e in g.out_edges(block[0])):
            cyclic.add(block[0])
    return cyclic


def _reach(g: Graph, keep: set[str], starts: Iterable[str], backwards: bool = False) -> set[str]:
    seen = {v for v in starts if v in keep}
    todo = list(seen)
    while todo:
        v = todo.pop()
        nbrs = [e.src for e in g.in_edges(v)] if backwards else [e.dst for e in g.out_edges(v)]
        for w in nbrs:
            if w in keep and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


@dataclass(frozen=True)
class FinitenessReport:
    vertex: str
    i_finite: bool
    q_finite: bool
    c_finite: bool
    c1_finite: bool


def finiteness(g: Graph, e: str) -> FinitenessReport:
    """Decide exactly which of the path sets I_e, Q_e, C_e, C1_e are finite.

    Paths counted by Q_e avoid ``e`` before their last edge, so they live in
    ``g`` minus ``e`` until they enter ``e``; the same holds for the interior
    of first-return cycles.
    """
    g.check_vertex(e)
    rest = set(g.vertices) - {e}
    cyclic = _cyclic_vertices(g, rest)
    in_nbrs = {edge.src for edge in g.in_edges(e)} - {e}
    out_nbrs = {edge.dst for edge in g.out_edges(e)} - {e}
    to_e = _reach(g, rest, in_nbrs, backwards=True)
    from_e = _reach(g, rest, out_nbrs)
    q_finite = not (cyclic & to_e)
    c1_finite = not (cyclic & to_e & from_e)
    c_finite = is_acyclic_at(g, e)
    return FinitenessReport(e, q_finite and c_finite, q_finite, c_finite, c1_finite)


def component_finiteness(g: Graph, block) -> tuple[bool, bool]:
    """Return ``(i_finite, q_finite)`` for the component-anchored sets I_A and Q_A."""
    block = scc(g).check_block(block)
    rest = set(g.vertices) - block
    in_nbrs = {edge.src for v in block for edge in g.in_edges(v)} - block
    to_a = _reach(g, rest, in_nbrs, backwards=True)
    q_finite = not (_cyclic_vertices(g, rest) & to_a)
    inner_cycle = bool(_cyclic_vertices(g, set(block)))
    return q_finite and not inner_cycle, q_finite
