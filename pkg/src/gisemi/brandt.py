"""Brandt X^0-extensions B0_X(S) of a semigroup with zero, and matrix units.

Only the Rees quotient is modelled: a nonzero element is a triple
``(a, s, b)`` whose payload ``s`` is never the zero of ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Protocol

from .errors import GisError, MixedGraphError, UnknownIdError
from .gis import Element, format_element, multiply
from .graph import Graph
from .paths import Path, format_path


class SemigroupWithZero(Protocol):
    zero: Any

    def multiply(self, x, y): ...

    def is_zero(self, x) -> bool: ...

    def contains(self, x) -> bool: ...


class Semilattice:
    """The two-element semilattice ``({0, 1}, min)``."""

    zero = 0
    one = 1

    def multiply(self, x, y):
        return min(x, y)

    def is_zero(self, x) -> bool:
        return x == 0

    def contains(self, x) -> bool:
        return x in (0, 1) and not isinstance(x, bool)

    def __eq__(self, other):
        return isinstance(other, Semilattice)

    def __hash__(self):
        return hash("semilattice")

    def __repr__(self):
        return "Semilattice()"


class GraphSemigroup:
    """G(E) as a payload capability."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.zero = Element(graph)

    def multiply(self, x, y):
        return multiply(self.graph, x, y)

    def is_zero(self, x) -> bool:
        return x.u is None

    def contains(self, x) -> bool:
        return isinstance(x, Element) and (x.graph is self.graph or x.graph == self.graph)

    def __eq__(self, other):
        return isinstance(other, GraphSemigroup) and other.graph == self.graph

    def __hash__(self):
        return hash(("G", self.graph))


@dataclass(frozen=True)
class BrandtElement:
    """Zero when ``payload`` is ``None``; otherwise the triple ``(left, payload, right)``."""

    left: Hashable = None
    payload: Any = None
    right: Hashable = None

    @property
    def is_zero(self) -> bool:
        return self.payload is None

    def __str__(self):
        return format_brandt(self)


BRANDT_ZERO = BrandtElement()


class Brandt:
    """B0_X(S) for an index set ``X`` and a payload semigroup ``S``."""

    def __init__(self, indices: Iterable[Hashable], payload: SemigroupWithZero):
        self.indices = tuple(indices)
        self._index_set = frozenset(self.indices)
        if len(self._index_set) != len(self.indices):
            raise GisError("index labels must be distinct")
        self.payload = payload
        self.zero = BRANDT_ZERO

    def element(self, left, s, right) -> BrandtElement:
        """Build ``(left, s, right)``, collapsing a zero payload to the Brandt zero."""
        self._check(left, s, right)
        if self.payload.is_zero(s):
            return BRANDT_ZERO
        return BrandtElement(left, s, right)

    def _check(self, left, s, right) -> None:
        for idx in (left, right):
            if idx not in self._index_set:
                raise UnknownIdError(f"index {idx!r} is not in the index set")
        if not self.payload.contains(s):
            raise MixedGraphError(f"payload {s!r} is not in the payload semigroup")

    def contains(self, x) -> bool:
        if not isinstance(x, BrandtElement):
            return False
        if x.is_zero:
            return True
        return (x.left in self._index_set and x.right in self._index_set
                and self.payload.contains(x.payload) and not self.payload.is_zero(x.payload))

    def is_zero(self, x) -> bool:
        return x.is_zero

    def multiply(self, x: BrandtElement, y: BrandtElement) -> BrandtElement:
        return brandt_multiply(self, x, y)


def brandt_multiply(ext: Brandt, x: BrandtElement, y: BrandtElement) -> BrandtElement:
    for z in (x, y):
        if not z.is_zero:
            ext._check(z.left, z.payload, z.right)
    if x.is_zero or y.is_zero or x.right != y.left:
        return BRANDT_ZERO
    s = ext.payload.multiply(x.payload, y.payload)
    if ext.payload.is_zero(s):
        return BRANDT_ZERO
    return BrandtElement(x.left, s, y.right)


def matrix_units(indices: Iterable[Hashable]) -> Brandt:
    """B0_X, the semigroup of ``X x X`` matrix units."""
    return Brandt(indices, Semilattice())


def unit(a, b) -> BrandtElement:
    return BrandtElement(a, 1, b)


def matrix_unit_multiply(indices, x: BrandtElement, y: BrandtElement) -> BrandtElement:
    """Compose matrix units directly: ``(a, b)(c, d) = (a, d)`` if ``b == c`` else zero."""
    allowed = frozenset(indices)
    for z in (x, y):
        if z.is_zero:
            continue
        if z.payload != 1 or z.left not in allowed or z.right not in allowed:
            raise UnknownIdError(f"{z!r} is not a matrix unit over the index set")
    if x.is_zero or y.is_zero or x.right != y.left:
        return BRANDT_ZERO
    return BrandtElement(x.left, 1, y.right)


def _fmt(obj) -> str:
    if isinstance(obj, Path):
        return format_path(obj)
    if isinstance(obj, Element):
        return format_element(obj)
    return str(obj)


def format_brandt(x: BrandtElement) -> str:
    if x.is_zero:
        return "0"
    return f"({_fmt(x.left)} | {_fmt(x.payload)} | {_fmt(x.right)})"
