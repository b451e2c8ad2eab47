"""Local and global structure of G(E) as executable maps.

* ``cycles_to_poly``: the subsemigroup generated by cycles at ``e`` onto the
  polycyclic monoid whose generators are the first-return cycles at ``e``.
* ``dclass_to_brandt``: ``D_e^0`` onto ``B0_{Q_e}(P_lambda)``.
* ``embed_jclass``: ``J_A^0`` into ``B0_{Q_A}(G(E_A))``.
* ``structural_report``: per-component and per-vertex summary of all of the above.

Generator labels of the polycyclic monoid are the first-return cycles
themselves, written as path literals, so the maps need no arbitrary indexing.
Everything is materialized up to a length bound; inputs needing data beyond
the bound raise :class:`~gisemi.errors.BoundError`.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .brandt import Brandt, BrandtElement, GraphSemigroup, BRANDT_ZERO, format_brandt
from .errors import BoundError, MembershipError
from .gis import Element
from .graph import Graph, induced_subgraph, is_acyclic, is_acyclic_at, scc
from .paths import (Path, concat, cycle_factorize, enumerate_paths, factor_at_component,
                    factor_at_vertex, format_path)
from .polycyclic import Polycyclic, PolyElement, poly_inverse

INFINITE = "∞"


def _exact_size(g: Graph, kind: str, anchor, pathset) -> int | str:
    # Exact cardinality when finite, INFINITE otherwise.
    if not pathset.complete:
        full = enumerate_paths(g, kind, anchor, 2 * len(g.vertices) + 1)
        if not full.complete:
            return INFINITE
        return len(full)
    return len(pathset)


@dataclass(frozen=True)
class LocalStructure:
    graph: Graph = field(repr=False)
    vertex: str
    bound: int
    labels: tuple[Path, ...]
    labels_complete: bool
    q_index: tuple[Path, ...]
    q_complete: bool

    @property
    def lam(self) -> int:
        """Number of materialized generators (the true count when ``labels_complete``)."""
        return len(self.labels)

    @property
    def poly(self) -> Polycyclic:
        return Polycyclic(format_path(p) for p in self.labels)

    @property
    def brandt(self) -> Brandt:
        return Brandt(self.q_index, self.poly)


def local_structure(g: Graph, e: str, bound: int) -> LocalStructure:
    c1 = enumerate_paths(g, "C1_e", e, bound)
    q = enumerate_paths(g, "Q_e", e, bound)
    labels = tuple(p for p in c1.members if not p.is_vertex)
    return LocalStructure(g, e, bound, labels, c1.complete, q.members, q.complete)


# --- cycles at e  <->  polycyclic monoid ----------------------------------------


def _cycle_word(ls: LocalStructure, u: Path) -> tuple[str, ...]:
    known = set(ls.labels)
    word = []
    for factor in cycle_factorize(ls.graph, u, ls.vertex):
        if factor not in known:
            raise BoundError(f"first-return cycle {format_path(factor)} is longer than the "
                             f"materialized bound {ls.bound}")
        word.append(format_path(factor))
    return tuple(word)


def cycles_to_poly(ls: LocalStructure, x: Element) -> PolyElement:
    alphabet = tuple(format_path(p) for p in ls.labels)
    if x.u is None:
        return PolyElement(alphabet, None, None)
    e = ls.vertex
    for p in (x.u, x.v):
        if p.src != e or p.dst != e:
            raise MembershipError(f"{x} is not generated by cycles at {e!r}")
    return PolyElement(alphabet, _cycle_word(ls, x.u), _cycle_word(ls, x.v))


def _word_path(ls: LocalStructure, word) -> Path:
    by_label = {format_path(p): p for p in ls.labels}
    out = Path(ls.vertex, ls.vertex)
    for label in word:
        try:
            out = concat(out, by_label[label])
        except KeyError:
            raise MembershipError(f"{label!r} is not a generator at {ls.vertex!r}") from None
    return out


def poly_to_cycles(ls: LocalStructure, p: PolyElement) -> Element:
    if p.pos is None:
        return Element(ls.graph)
    return Element(ls.graph, _word_path(ls, p.pos), _word_path(ls, p.neg))


# --- D_e^0  <->  B0_{Q_e}(P_lambda) ---------------------------------------------


def dclass_to_brandt(ls: LocalStructure, x: Element) -> BrandtElement:
    if x.u is None:
        return BRANDT_ZERO
    e = ls.vertex
    if x.u.dst != e:
        raise MembershipError(f"{x} is not in D_{e}")
    u1, u2 = factor_at_vertex(ls.graph, x.u, e)
    v1, v2 = factor_at_vertex(ls.graph, x.v, e)
    index = set(ls.q_index)
    for p in (u1, v1):
        if p not in index:
            raise BoundError(f"{format_path(p)} is longer than the materialized bound {ls.bound}")
    payload = cycles_to_poly(ls, Element(ls.graph, u2, v2))
    return BrandtElement(u1, payload, v1)


def brandt_to_dclass(ls: LocalStructure, b: BrandtElement) -> Element:
    if b.is_zero:
        return Element(ls.graph)
    cyc = poly_to_cycles(ls, b.payload)
    if cyc.u is None:
        raise MembershipError("a Brandt triple cannot carry a zero payload")
    return Element(ls.graph, concat(b.left, cyc.u), concat(b.right, cyc.v))


def transpose(b: BrandtElement) -> BrandtElement:
    """Inverse in B0_X(P): swap the indices and invert the payload."""
    if b.is_zero:
        return b
    return BrandtElement(b.right, poly_inverse(b.payload), b.left)


# --- J_A^0  ->  B0_{Q_A}(G(E_A)) ------------------------------------------------


@dataclass(frozen=True)
class ComponentStructure:
    graph: Graph = field(repr=False)
    block: frozenset
    bound: int
    subgraph: Graph = field(repr=False)
    q_index: tuple[Path, ...]
    q_complete: bool

    @property
    def brandt(self) -> Brandt:
        return Brandt(self.q_index, GraphSemigroup(self.subgraph))


def component_structure(g: Graph, block, bound: int) -> ComponentStructure:
    block = scc(g).check_block(block)
    q = enumerate_paths(g, "Q_A", block, bound)
    return ComponentStructure(g, block, bound, induced_subgraph(g, block), q.members, q.complete)


def embed_jclass(cs: ComponentStructure, x: Element) -> BrandtElement:
    if x.u is None:
        return BRANDT_ZERO
    if x.u.dst not in cs.block:
        raise MembershipError(f"{x} is not in J_{{{','.join(sorted(cs.block))}}}")
    u1, u2 = factor_at_component(cs.graph, x.u, cs.block)
    v1, v2 = factor_at_component(cs.graph, x.v, cs.block)
    index = set(cs.q_index)
    for p in (u1, v1):
        if p not in index:
            raise BoundError(f"{format_path(p)} is longer than the materialized bound {cs.bound}")
    return BrandtElement(u1, Element(cs.subgraph, u2, v2), v1)


def unembed_jclass(cs: ComponentStructure, b: BrandtElement) -> Element:
    """Inverse of :func:`embed_jclass` on its image; raises for triples outside the image."""
    if b.is_zero:
        return Element(cs.graph)
    s = b.payload
    if not isinstance(s, Element) or s.u is None or s.graph != cs.subgraph:
        raise MembershipError(f"payload of {format_brandt(b)} is not a nonzero element of G(E_A)")
    if b.left not in cs.q_index or b.right not in cs.q_index:
        raise MembershipError(f"{format_brandt(b)} has an index outside Q_A")
    if b.left.dst != s.u.src or b.right.dst != s.v.src:
        raise MembershipError(f"{format_brandt(b)} is not in the image of the embedding")
    return Element(cs.graph, concat(b.left, s.u), concat(b.right, s.v))


# --- global report ----------------------------------------------------------


@dataclass
class VertexEntry:
    vertex: str
    lam: int | str
    q_size: int | str
    i_size: int | str
    acyclic_at: bool
    iso_type: str
    statement: str


@dataclass
class ComponentEntry:
    block: list[str]
    position: int
    below: list[list[str]]
    q_size: int | str
    embedding: str
    vertices: list[VertexEntry]


@dataclass
class StructureReport:
    bound: int
    components: list[ComponentEntry]
    acyclic: bool
    j_equals_d: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"graph inverse semigroup structure (bound {self.bound})",
                 f"acyclic: {str(self.acyclic).lower()}",
                 f"J = D: {str(self.j_equals_d).lower()}"]
        for comp in self.components:
            name = _block_name(comp.block)
            below = ", ".join(_block_name(b) for b in comp.below) or "none"
            lines.append("")
            lines.append(f"component {name}  (position {comp.position}; below: {below})")
            lines.append(f"  {comp.embedding}")
            for v in comp.vertices:
                lines.append(f"  vertex {v.vertex}: lambda={v.lam} |Q|={v.q_size} |I|={v.i_size} "
                             f"acyclic_at={str(v.acyclic_at).lower()}")
                lines.append(f"    {v.statement}")
        return "\n".join(lines) + "\n"


def _block_name(block) -> str:
    return "{" + ",".join(sorted(block)) + "}"


def _dclass_type(acyclic_at: bool, lam, q_size, i_size) -> str:
    if acyclic_at:
        return f"B⁰_{i_size} (matrix units)"
    kind = f"B⁰_{q_size}(P_{lam})"
    if q_size == 1:
        kind += f" ≅ P_{lam}"
    return kind


def structural_report(g: Graph, bound: int) -> StructureReport:
    cs = scc(g)
    comps = []
    for pos, block in enumerate(cs.blocks):
        vertices = []
        for e in sorted(block):
            c1 = enumerate_paths(g, "C1_e", e, bound)
            q = enumerate_paths(g, "Q_e", e, bound)
            i = enumerate_paths(g, "I_e", e, bound)
            lam = _exact_size(g, "C1_e", e, c1)
            lam = lam - 1 if isinstance(lam, int) else lam
            q_size = _exact_size(g, "Q_e", e, q)
            i_size = _exact_size(g, "I_e", e, i)
            flat = is_acyclic_at(g, e)
            kind = _dclass_type(flat, lam, q_size, i_size)
            vertices.append(VertexEntry(e, lam, q_size, i_size, flat, kind, f"D_{e}^0 ≅ {kind}"))
        qa = enumerate_paths(g, "Q_A", block, bound)
        qa_size = _exact_size(g, "Q_A", block, qa)
        name = _block_name(block)
        comps.append(ComponentEntry(
            block=sorted(block),
            position=pos,
            below=[sorted(b) for b in cs.below(block)],
            q_size=qa_size,
            embedding=f"J_{name}^0 ↪ B⁰_{qa_size}(G(E_{name}))",
            vertices=vertices,
        ))
    return StructureReport(
        bound=bound,
        components=comps,
        acyclic=is_acyclic(g),
        j_equals_d=all(len(b) == 1 for b in cs.blocks),
    )
