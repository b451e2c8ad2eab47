"""Paths, prefixes, bounded enumeration of anchored path sets, and factorizations.

A path is a vertex (length 0) or a composable edge sequence.  Literal syntax:
``@a`` is the vertex path at ``a``; ``x.y`` is the edge sequence ``x`` then ``y``.

Anchored sets (``kind`` for :func:`enumerate_paths`):

========  =====================================================================
``I_e``   paths ending at ``e``
``Q_e``   paths ending at ``e`` whose first visit of ``e`` is their end
``C_e``   paths starting and ending at ``e``
``C1_e``  ``e`` plus cycles at ``e`` with no interior visit of ``e``
``I_A``   paths ending in component ``A``
``Q_A``   paths ending in ``A`` whose first visit of ``A`` is their end
========  =====================================================================
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import CompositionError, GisError, ParseError
from .graph import Graph, component_finiteness, finiteness, scc

KINDS = ("I_e", "Q_e", "C_e", "C1_e", "I_A", "Q_A")

_PATH_RE = re.compile(r"@[A-Za-z0-9_]+\Z|[A-Za-z0-9_]+(\.[A-Za-z0-9_]+)*\Z")


@dataclass(frozen=True)
class Path:
    src: str
    dst: str
    edges: tuple[str, ...] = ()

    def __len__(self):
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def sort_key(self):
        return (len(self.edges), self.edges, self.src)

    def __str__(self):
        return format_path(self)


def vertex(g: Graph, v: str) -> Path:
    g.check_vertex(v)
    return Path(v, v)


def path_from_edges(g: Graph, edge_ids: Iterable[str]) -> Path:
    edge_ids = tuple(edge_ids)
    if not edge_ids:
        raise CompositionError("an edge path needs at least one edge; use a vertex path")
    first = g.edge(edge_ids[0])
    cur = first.dst
    for eid in edge_ids[1:]:
        e = g.edge(eid)
        if e.src != cur:
            raise CompositionError(f"edge {eid!r} does not start where the previous edge ends ({cur!r})")
        cur = e.dst
    return Path(first.src, cur, edge_ids)


def visits(g: Graph, p: Path) -> list[str]:
    """Vertex sequence ``s(p), ..., r(p)`` of length ``len(p) + 1``."""
    seq = [p.src]
    for eid in p.edges:
        seq.append(g.edge(eid).dst)
    return seq


def format_path(p: Path) -> str:
    return ".".join(p.edges) if p.edges else "@" + p.src


def parse_path(g: Graph, text: str) -> Path:
    text = "".join(text.split())
    if not _PATH_RE.match(text):
        bad = next((i for i, ch in enumerate(text) if not (ch.isalnum() or ch in "_.@")), None)
        raise ParseError("malformed path literal", text, bad if bad is not None else 0)
    if text.startswith("@"):
        return vertex(g, text[1:])
    return path_from_edges(g, text.split("."))


def concat(p: Path, q: Path) -> Path:
    if p.dst != q.src:
        raise CompositionError(f"cannot compose {format_path(p)} (ends at {p.dst!r}) with "
                               f"{format_path(q)} (starts at {q.src!r})")
    return Path(p.src, q.dst, p.edges + q.edges)


def strip_prefix(p: Path, q: Path) -> Path | None:
    """Return ``w`` with ``q == concat(p, w)``, or ``None`` if ``p`` is not a prefix of ``q``."""
    if p.src != q.src:
        return None
    n = len(p.edges)
    if q.edges[:n] != p.edges:
        return None
    return Path(p.dst, q.dst, q.edges[n:])


# --- enumeration ------------------------------------------------------------


@dataclass(frozen=True)
class PathSet:
    kind: str
    anchor: str | frozenset
    bound: int
    members: tuple[Path, ...]
    complete: bool

    def __len__(self):
        return len(self.members)

    def __contains__(self, p):
        return p in self.members

    def __iter__(self):
        return iter(self.members)


def _backward(g: Graph, targets: Iterable[str], bound: int, avoid: set[str] | None) -> list[Path]:
    # Paths ending in ``targets``, grown by prepending edges.  With ``avoid``
    # set, no vertex before the final one may lie in ``avoid``.
    layer = [Path(t, t) for t in targets]
    out = list(layer)
    for _ in range(bound):
        nxt = []
        for p in layer:
            for e in g.in_edges(p.src):
                if avoid is not None and e.src in avoid:
                    continue
                nxt.append(Path(e.src, p.dst, (e.id,) + p.edges))
        out.extend(nxt)
        layer = nxt
    return out


def _first_return_cycles(g: Graph, e: str, bound: int) -> list[Path]:
    cycles = [Path(e, e)]
    if bound == 0:
        return cycles
    tails = {}
    for q in _backward(g, [e], bound - 1, {e}):
        tails.setdefault(q.src, []).append(q)
    for edge in g.out_edges(e):
        for q in tails.get(edge.dst, ()):
            cycles.append(Path(e, e, (edge.id,) + q.edges))
    return cycles


def _members(g: Graph, kind: str, anchor, bound: int) -> list[Path]:
    if kind == "I_e":
        found = _backward(g, [anchor], bound, None)
    elif kind == "Q_e":
        found = _backward(g, [anchor], bound, {anchor})
    elif kind == "C_e":
        found = [p for p in _backward(g, [anchor], bound, None) if p.src == anchor]
    elif kind == "C1_e":
        found = _first_return_cycles(g, anchor, bound)
    elif kind == "I_A":
        found = _backward(g, sorted(anchor), bound, None)
    else:
        found = _backward(g, sorted(anchor), bound, set(anchor))
    return sorted(found, key=Path.sort_key)


def _is_finite(g: Graph, kind: str, anchor) -> bool:
    if kind.endswith("_A"):
        i_finite, q_finite = component_finiteness(g, anchor)
        return i_finite if kind == "I_A" else q_finite
    rep = finiteness(g, anchor)
    return {"I_e": rep.i_finite, "Q_e": rep.q_finite, "C_e": rep.c_finite, "C1_e": rep.c1_finite}[kind]


def enumerate_paths(g: Graph, kind: str, anchor, bound: int) -> PathSet:
    """All members of the anchored set ``kind`` of length at most ``bound``.

    Members come breadth-first by length, ties broken by edge-id sequence.
    ``complete`` is derived from the exact finiteness analysis: a finite set
    has paths no longer than ``2 * |E0|``, so its true maximum length is
    computed by enumerating to that depth.
    """
    if kind not in KINDS:
        raise GisError(f"unknown path-set kind {kind!r}; expected one of {', '.join(KINDS)}")
    if bound < 0:
        raise GisError("bound must be non-negative")
    if kind.endswith("_A"):
        anchor = scc(g).check_block(anchor)
    else:
        g.check_vertex(anchor)
    members = _members(g, kind, anchor, bound)
    complete = False
    if _is_finite(g, kind, anchor):
        horizon = 2 * len(g.vertices) + 1
        if bound >= horizon:
            complete = True
        else:
            everything = _members(g, kind, anchor, horizon)
            complete = max(len(p) for p in everything) <= bound
    return PathSet(kind, anchor, bound, tuple(members), complete)


def all_paths(g: Graph, bound: int) -> list[Path]:
    """Every path of ``g`` of length at most ``bound``, in enumeration order."""
    return sorted(_backward(g, g.vertices, bound, None), key=Path.sort_key)


# --- membership predicates ----------------------------------------------------


def in_q(g: Graph, u: Path, targets) -> bool:
    """First-visit predicate behind Q_e (``targets={e}``) and Q_A (``targets=A``)."""
    seq = visits(g, u)
    return seq[-1] in targets and not any(v in targets for v in seq[:-1])


def in_c1(g: Graph, u: Path, e: str) -> bool:
    if u.src != e or u.dst != e:
        return False
    return not any(v == e for v in visits(g, u)[1:-1])


# --- factorizations -------------------------------------------------------


def _split(u: Path, i: int, seq: list[str]) -> tuple[Path, Path]:
    return Path(u.src, seq[i], u.edges[:i]), Path(seq[i], u.dst, u.edges[i:])


def factor_at_vertex(g: Graph, u: Path, e: str) -> tuple[Path, Path]:
    """Split ``u`` (ending at ``e``) at its first visit of ``e``: ``u1`` in Q_e, ``u2`` in C_e."""
    g.check_vertex(e)
    if u.dst != e:
        raise GisError(f"path {format_path(u)} does not end at {e!r}")
    seq = visits(g, u)
    return _split(u, seq.index(e), seq)


def factor_at_component(g: Graph, u: Path, block) -> tuple[Path, Path]:
    """Split ``u`` (ending in ``block``) at its first visit of the block."""
    block = frozenset(block)
    if u.dst not in block:
        raise GisError(f"path {format_path(u)} does not end in {sorted(block)}")
    seq = visits(g, u)
    i = next(i for i, v in enumerate(seq) if v in block)
    return _split(u, i, seq)


def cycle_factorize(g: Graph, u: Path, e: str) -> list[Path]:
    """Cut a cycle at ``e`` at every interior visit of ``e`` into first-return cycles."""
    g.check_vertex(e)
    if u.src != e or u.dst != e:
        raise GisError(f"path {format_path(u)} is not in C_{e}")
    seq = visits(g, u)
    cuts = [i for i, v in enumerate(seq) if v == e]
    return [Path(e, e, u.edges[a:b]) for a, b in zip(cuts, cuts[1:])]


def join(paths: Iterable[Path], start: Path) -> Path:
    out = start
    for p in paths:
        out = concat(out, p)
    return out


__all__ = [
    "KINDS", "Path", "PathSet", "vertex", "path_from_edges", "visits", "format_path",
    "parse_path", "concat", "strip_prefix", "enumerate_paths", "all_paths", "in_q",
    "in_c1", "factor_at_vertex", "factor_at_component", "cycle_factorize", "join",
]
