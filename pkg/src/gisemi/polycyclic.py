"""Polycyclic monoids P_n over a finite ordered label alphabet.

Nonzero elements are normal forms ``pos . neg^-1`` with ``pos`` and ``neg``
words over the alphabet; ``(), ()`` is the identity.  Generator words are
reduced with the rewriting rules ``a' a -> 1`` and ``a' b -> 0`` (``a != b``),
which shorten words and are confluent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GisError, MixedGraphError, ParseError, UnknownIdError
from .gis import Element
from .graph import Graph
from .paths import Path

Word = tuple


@dataclass(frozen=True)
class PolyElement:
    alphabet: tuple[str, ...]
    pos: Word | None = ()
    neg: Word | None = ()

    @property
    def is_zero(self) -> bool:
        return self.pos is None

    def __str__(self):
        return format_poly(self)


@dataclass(frozen=True)
class Token:
    label: str
    positive: bool = True


class Polycyclic:
    """P_n over ``alphabet`` as a semigroup-with-zero capability."""

    def __init__(self, alphabet: Iterable[str]):
        self.alphabet = tuple(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise GisError("alphabet labels must be distinct")
        self._labels = frozenset(self.alphabet)
        self.zero = PolyElement(self.alphabet, None, None)
        self.one = PolyElement(self.alphabet)

    def element(self, pos: Sequence[str] = (), neg: Sequence[str] = ()) -> PolyElement:
        for label in (*pos, *neg):
            self.check_label(label)
        return PolyElement(self.alphabet, tuple(pos), tuple(neg))

    def generator(self, label: str, positive: bool = True) -> PolyElement:
        return self.element((label,), ()) if positive else self.element((), (label,))

    def check_label(self, label: str) -> str:
        if label not in self._labels:
            raise UnknownIdError(f"label {label!r} is not in the alphabet")
        return label

    def contains(self, x) -> bool:
        return isinstance(x, PolyElement) and x.alphabet == self.alphabet

    def multiply(self, x: PolyElement, y: PolyElement) -> PolyElement:
        return poly_multiply(x, y)

    def is_zero(self, x: PolyElement) -> bool:
        return x.pos is None

    def elements(self, max_len: int) -> list[PolyElement]:
        """Zero plus every normal form with both words of length at most ``max_len``."""
        words = [()]
        layer = [()]
        for _ in range(max_len):
            layer = [w + (a,) for w in layer for a in self.alphabet]
            words.extend(layer)
        return [self.zero] + [PolyElement(self.alphabet, p, n) for p in words for n in words]

    def __eq__(self, other):
        return isinstance(other, Polycyclic) and other.alphabet == self.alphabet

    def __hash__(self):
        return hash(("P", self.alphabet))

    def __repr__(self):
        return f"Polycyclic({list(self.alphabet)})"


def poly_multiply(x: PolyElement, y: PolyElement) -> PolyElement:
    if x.alphabet != y.alphabet:
        raise MixedGraphError("polycyclic elements over different alphabets")
    if x.pos is None or y.pos is None:
        return PolyElement(x.alphabet, None, None)
    n, m = len(x.neg), len(y.pos)
    if m >= n and y.pos[:n] == x.neg:
        return PolyElement(x.alphabet, x.pos + y.pos[n:], y.neg)
    if n > m and x.neg[:m] == y.pos:
        return PolyElement(x.alphabet, x.pos, y.neg + x.neg[m:])
    return PolyElement(x.alphabet, None, None)


def poly_inverse(x: PolyElement) -> PolyElement:
    if x.pos is None:
        return x
    return PolyElement(x.alphabet, x.neg, x.pos)


# --- generator words --------------------------------------------------------


ZERO, ONE = "0", "1"


def parse_word(text: str) -> list:
    """Parse ``"p q' 1 0"`` into tokens; constants stay as the strings ``"0"``/``"1"``."""
    out = []
    pos = 0
    for raw in text.split():
        start = text.index(raw, pos)
        pos = start + len(raw)
        if raw in (ZERO, ONE):
            out.append(raw)
            continue
        label, inv = (raw[:-1], True) if raw.endswith("'") else (raw, False)
        if not label or not all(ch.isalnum() or ch in "_." for ch in label):
            raise ParseError("malformed generator token", text, start)
        out.append(Token(label, not inv))
    return out


def _check_tokens(alphabet: Iterable[str], word) -> list:
    labels = set(alphabet)
    for tok in word:
        if isinstance(tok, Token):
            if tok.label not in labels:
                raise UnknownIdError(f"label {tok.label!r} is not in the alphabet")
        elif tok not in (ZERO, ONE):
            raise GisError(f"bad token {tok!r}")
    return list(word)


def _normal_form(alphabet: tuple[str, ...], tokens: list) -> PolyElement:
    pos = tuple(t.label for t in tokens if t.positive)
    neg = tuple(t.label for t in reversed(tokens) if not t.positive)
    return PolyElement(alphabet, pos, neg)


def poly_reduce(alphabet: Iterable[str], word) -> PolyElement:
    """Reduce a generator word to normal form with one left-to-right stack pass."""
    alphabet = tuple(alphabet)
    stack: list[Token] = []
    for tok in _check_tokens(alphabet, word):
        if tok == ZERO:
            return PolyElement(alphabet, None, None)
        if tok == ONE:
            continue
        if tok.positive and stack and not stack[-1].positive:
            if stack[-1].label != tok.label:
                return PolyElement(alphabet, None, None)
            stack.pop()
        else:
            stack.append(tok)
    return _normal_form(alphabet, stack)


def rewrite_reduce(alphabet: Iterable[str], word, rightmost: bool = False) -> PolyElement:
    """Reduce by literal one-step rewriting, always at the leftmost (or rightmost) redex.

    Quadratic; exists as an independent check on :func:`poly_reduce`.
    """
    alphabet = tuple(alphabet)
    tokens = _check_tokens(alphabet, word)
    if ZERO in tokens:
        return PolyElement(alphabet, None, None)
    tokens = [t for t in tokens if t != ONE]
    while True:
        redexes = [i for i in range(len(tokens) - 1)
                   if not tokens[i].positive and tokens[i + 1].positive]
        if not redexes:
            return _normal_form(alphabet, tokens)
        i = redexes[-1] if rightmost else redexes[0]
        if tokens[i].label != tokens[i + 1].label:
            return PolyElement(alphabet, None, None)
        del tokens[i:i + 2]


def to_word(x: PolyElement) -> list:
    """The generator word of a normal form (``pos`` then the inverses of ``neg`` reversed)."""
    if x.pos is None:
        return [ZERO]
    if not x.pos and not x.neg:
        return [ONE]
    return [Token(a) for a in x.pos] + [Token(a, False) for a in reversed(x.neg)]


def format_poly(x: PolyElement) -> str:
    return " ".join(t if isinstance(t, str) else t.label + ("" if t.positive else "'")
                    for t in to_word(x))


# --- the one-vertex rose ------------------------------------------------------


def _rose(g: Graph) -> tuple[str, tuple[str, ...]]:
    if not g.is_rose():
        raise GisError("graph is not a rose (it must have exactly one vertex)")
    return g.vertices[0], tuple(e.id for e in g.edges)


def poly_from_rose(g: Graph, x: Element) -> PolyElement:
    _, alphabet = _rose(g)
    if x.u is None:
        return PolyElement(alphabet, None, None)
    return PolyElement(alphabet, x.u.edges, x.v.edges)


def rose_from_poly(g: Graph, x: PolyElement) -> Element:
    v, alphabet = _rose(g)
    if x.alphabet != alphabet:
        raise MixedGraphError("alphabet does not match the loops of the rose")
    if x.pos is None:
        return Element(g)
    return Element(g, Path(v, v, x.pos), Path(v, v, x.neg))
