"""Elements of the graph inverse semigroup G(E), their algebra and Green's relations.

A nonzero element is stored in its unique normal form ``u v^-1`` with
``r(u) == r(v)``; zero is a separate value.  Every element remembers its graph
so that combining elements of different graphs raises instead of silently
yielding zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GisError, MixedGraphError, ParseError
from .graph import Graph, scc
from .paths import Path, enumerate_paths, format_path, parse_path

RELATIONS = ("D", "J", "L", "R", "H")


@dataclass(frozen=True)
class Element:
    graph: Graph = field(compare=False, repr=False)
    u: Path | None = None
    v: Path | None = None

    def __post_init__(self):
        if (self.u is None) != (self.v is None):
            raise GisError("an element needs both paths or neither")
        if self.u is not None and self.u.dst != self.v.dst:
            raise GisError(f"{format_path(self.u)} and {format_path(self.v)} end at different vertices")

    @property
    def is_zero(self) -> bool:
        return self.u is None

    def __mul__(self, other):
        return multiply(self.graph, self, other)

    def __str__(self):
        return format_element(self)


def zero(g: Graph) -> Element:
    return Element(g)


def element(g: Graph, u: Path, v: Path) -> Element:
    return Element(g, u, v)


def idempotent(g: Graph, u: Path) -> Element:
    return Element(g, u, u)


def _same_graph(g: Graph, *xs: Element) -> None:
    for x in xs:
        if x.graph is not g and x.graph != g:
            raise MixedGraphError("elements belong to different graphs")


def multiply(g: Graph, x: Element, y: Element) -> Element:
    if x.graph is not g or y.graph is not g:
        _same_graph(g, x, y)
    u1, v1, u2, v2 = x.u, x.v, y.u, y.v
    if u1 is None or u2 is None or v1.src != u2.src:
        return Element(g)
    a, b = v1.edges, u2.edges
    n, m = len(a), len(b)
    # prefix cancellation: whichever of v1, u2 is the shorter must prefix the other
    if n <= m and b[:n] == a:
        return Element(g, Path(u1.src, u2.dst, u1.edges + b[n:]), v2)
    if m < n and a[:m] == b:
        return Element(g, u1, Path(v2.src, v1.dst, v2.edges + a[m:]))
    return Element(g)


def product(g: Graph, *xs: Element) -> Element:
    if not xs:
        raise GisError("empty product")
    acc = xs[0]
    _same_graph(g, acc)
    for x in xs[1:]:
        acc = multiply(g, acc, x)
    return acc


def inverse(x: Element) -> Element:
    if x.u is None:
        return x
    return Element(x.graph, x.v, x.u)


def is_idempotent(g: Graph, x: Element) -> bool:
    _same_graph(g, x)
    return x.u is None or x.u == x.v


def dclass_vertex(g: Graph, x: Element) -> str:
    _same_graph(g, x)
    if x.u is None:
        raise GisError("zero does not lie in a nonzero D-class")
    return x.u.dst


def green(g: Graph, rel: str, x: Element, y: Element, components=None) -> bool:
    """Green's relation ``rel`` between ``x`` and ``y``.

    D: same range vertex; J: range vertices in one strongly connected
    component; L: same ``v``; R: same ``u``; H: both.  ``components`` may pass
    a precomputed :class:`~gisemi.graph.ComponentSet` for J.
    """
    _same_graph(g, x, y)
    if rel not in RELATIONS:
        raise GisError(f"unknown Green relation {rel!r}")
    if x.u is None or y.u is None:
        return x.u is None and y.u is None
    if rel == "D":
        return x.u.dst == y.u.dst
    if rel == "J":
        cs = components if components is not None else scc(g)
        return cs.block_of(x.u.dst) is cs.block_of(y.u.dst)
    if rel == "L":
        return x.v == y.v
    if rel == "R":
        return x.u == y.u
    return x.u == y.u and x.v == y.v


def enumerate_dclass(g: Graph, e: str, bound: int) -> list[Element]:
    paths = enumerate_paths(g, "I_e", e, bound).members
    return [Element(g, u, v) for u in paths for v in paths]


def enumerate_jclass(g: Graph, block, bound: int) -> list[Element]:
    block = scc(g).check_block(block)
    return [x for e in sorted(block) for x in enumerate_dclass(g, e, bound)]


def elements_up_to(g: Graph, bound: int) -> list[Element]:
    """Every nonzero element with ``|u|, |v| <= bound``, grouped by D-class."""
    return [x for e in g.vertices for x in enumerate_dclass(g, e, bound)]


def format_element(x: Element) -> str:
    if x.u is None:
        return "0"
    return f"{format_path(x.u)};{format_path(x.v)}"


def parse_element(g: Graph, text: str) -> Element:
    """Parse ``"0"`` or ``"<path>;<path>"`` (whitespace is ignored)."""
    flat = "".join(text.split())
    if flat == "0":
        return Element(g)
    if flat.count(";") != 1:
        pos = flat.find(";", flat.find(";") + 1) if ";" in flat else len(flat)
        raise ParseError("expected '0' or '<path>;<path>'", flat, pos)
    left, right = flat.split(";")
    try:
        u = parse_path(g, left)
    except ParseError as exc:
        raise ParseError("malformed path literal", flat, exc.position) from None
    try:
        v = parse_path(g, right)
    except ParseError as exc:
        raise ParseError("malformed path literal", flat, len(left) + 1 + exc.position) from None
    if u.dst != v.dst:
        raise GisError(f"{left} ends at {u.dst!r} but {right} ends at {v.dst!r}")
    return Element(g, u, v)
