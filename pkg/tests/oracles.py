"""Brute-force oracles, independent of the code paths they check."""

from gisemi.gis import Element
from gisemi.paths import Path


def reaches(g, a, b):
    seen, todo = {a}, [a]
    while todo:
        v = todo.pop()
        for e in g.edges:
            if e.src == v and e.dst not in seen:
                seen.add(e.dst)
                todo.append(e.dst)
    return b in seen


def brute_paths(g, bound):
    """Every path of length <= bound, by forward depth-first extension."""
    out = []
    stack = [Path(v, v) for v in g.vertices]
    while stack:
        p = stack.pop()
        out.append(p)
        if len(p) < bound:
            for e in g.edges:
                if e.src == p.dst:
                    stack.append(Path(p.src, e.dst, p.edges + (e.id,)))
    return out


def count_by_length(g, kind, anchor, limit):
    """Number of members of each length 0..limit, by dynamic programming over walks."""
    targets = set(anchor) if kind.endswith("_A") else {anchor}
    verts = g.vertices
    counts = []
    if kind in ("I_e", "I_A"):
        walks = {v: 1 for v in verts}  # walks of length k ending at v
        for k in range(limit + 1):
            counts.append(sum(walks[t] for t in targets))
            walks = {v: sum(walks[e.src] for e in g.edges if e.dst == v) for v in verts}
    elif kind in ("Q_e", "Q_A"):
        avoid = {v: (0 if v in targets else 1) for v in verts}  # walks never touching targets
        counts.append(len(targets))
        for k in range(1, limit + 1):
            counts.append(sum(avoid[e.src] for e in g.edges if e.dst in targets))
            avoid = {v: 0 if v in targets else sum(avoid[e.src] for e in g.edges if e.dst == v)
                     for v in verts}
    elif kind == "C_e":
        walks = {v: int(v == anchor) for v in verts}  # walks from anchor
        for k in range(limit + 1):
            counts.append(walks[anchor])
            walks = {v: sum(walks[e.src] for e in g.edges if e.dst == v) for v in verts}
    else:  # C1_e
        counts.append(1)
        inner = {v: 0 for v in verts}  # walks that left anchor and have not come back
        for k in range(1, limit + 1):
            back = sum(1 for e in g.edges if k == 1 and e.src == anchor and e.dst == anchor)
            back += sum(inner[e.src] for e in g.edges if e.dst == anchor)
            counts.append(back)
            nxt = {v: 0 for v in verts}
            for e in g.edges:
                if e.dst == anchor:
                    continue
                if k == 1 and e.src == anchor:
                    nxt[e.dst] += 1
                elif e.src != anchor:
                    nxt[e.dst] += inner[e.src]
            inner = nxt
    return counts


def vertex_seq(g, p):
    by_id = {e.id: e for e in g.edges}
    return [p.src] + [by_id[i].dst for i in p.edges]


def predicate(g, kind, anchor):
    """Membership predicate of an anchored path set, read off the vertex sequence."""
    targets = set(anchor) if kind.endswith("_A") else {anchor}

    def test(p):
        seq = vertex_seq(g, p)
        if seq[-1] not in targets:
            return False
        if kind in ("I_e", "I_A"):
            return True
        if kind in ("Q_e", "Q_A"):
            return not any(v in targets for v in seq[:-1])
        if kind == "C_e":
            return seq[0] == anchor
        return seq[0] == anchor and not any(v == anchor for v in seq[1:-1])  # C1_e

    return test


def brute_set(g, kind, anchor, bound):
    return [p for p in brute_paths(g, bound) if predicate(g, kind, anchor)(p)]


# --- GIS multiplication by rewriting generator words ---------------------------
#
# Symbols: ("v", a) vertex, ("+", e) edge, ("-", e) inverse edge, under the
# defining relations of G(E).  Independent of the prefix-cancellation formula.


def _pair(g, a, b):
    """Rewrite the adjacent pair (a, b): return a replacement list, or None if irreducible."""
    by_id = {e.id: e for e in g.edges}
    ka, xa = a
    kb, xb = b
    src = lambda e: by_id[e].src
    dst = lambda e: by_id[e].dst
    if ka == "v" and kb == "v":
        return [a] if xa == xb else 0
    if ka == "v":
        anchor = src(xb) if kb == "+" else dst(xb)
        return [b] if anchor == xa else 0
    if kb == "v":
        anchor = dst(xa) if ka == "+" else src(xa)
        return [a] if anchor == xb else 0
    if ka == "-" and kb == "+":
        return [("v", dst(xa))] if xa == xb else 0
    if ka == "+" and kb == "+":
        return None if dst(xa) == src(xb) else 0
    if ka == "-" and kb == "-":
        return None if src(xa) == dst(xb) else 0
    return None if dst(xa) == dst(xb) else 0  # "+", "-"


def word_of(x):
    if x.u is None:
        return 0
    if not x.u.edges and not x.v.edges:
        return [("v", x.u.src)]
    return [("+", e) for e in x.u.edges] + [("-", e) for e in reversed(x.v.edges)]


def reduce_word(g, word):
    if word == 0:
        return 0
    word = list(word)
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            r = _pair(g, word[i], word[i + 1])
            if r == 0:
                return 0
            if r is not None:
                word[i:i + 2] = r
                changed = True
                break
    return word


def word_to_element(g, word):
    if word == 0:
        return Element(g)
    if len(word) == 1 and word[0][0] == "v":
        a = word[0][1]
        return Element(g, Path(a, a), Path(a, a))
    by_id = {e.id: e for e in g.edges}
    pos = tuple(x for k, x in word if k == "+")
    neg = tuple(x for k, x in reversed(word) if k == "-")
    end = by_id[pos[-1]].dst if pos else by_id[neg[-1]].dst
    u = Path(by_id[pos[0]].src, end, pos) if pos else Path(end, end)
    v = Path(by_id[neg[0]].src, end, neg) if neg else Path(end, end)
    return Element(g, u, v)


def oracle_multiply(g, x, y):
    wx, wy = word_of(x), word_of(y)
    if wx == 0 or wy == 0:
        return Element(g)
    return word_to_element(g, reduce_word(g, wx + wy))
