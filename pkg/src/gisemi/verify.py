"""Named, replayable checks of the structure theory on bounded slices of G(E).

Each check runs exhaustively on every element with ``|u|, |v| <= bound``
(plus zero), except ``associativity`` which samples with a seeded generator.
A product whose result falls outside the slice is counted as skipped, never
as a pass.  Counterexamples record enough to replay the failing case.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Callable

from .brandt import BRANDT_ZERO, BrandtElement, matrix_unit_multiply
from .gis import Element, elements_up_to, format_element, inverse, multiply
from .graph import Graph, is_acyclic, is_acyclic_at, scc
from .paths import Path, all_paths, factor_at_component, format_path
from .structure import (brandt_to_dclass, component_structure, cycles_to_poly, dclass_to_brandt,
                        embed_jclass, local_structure, poly_to_cycles, transpose, unembed_jclass)


@dataclass
class CheckResult:
    name: str
    anchor: str
    cases: int = 0
    failures: int = 0
    skipped: int = 0
    counterexample: dict | None = None
    note: str = ""

    def fail(self, **details) -> None:
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = details

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class VerificationReport:
    bound: int
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(c.failures for c in self.checks)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {"bound": self.bound, "seed": self.seed, "failures": self.failures,
                "checks": [asdict(c) for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self, color: bool = False) -> str:
        lines = [f"verification (bound {self.bound}, seed {self.seed})"]
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            if color:
                tag = ("\033[32m" if c.passed else "\033[31m") + tag + "\033[0m"
            line = f"{tag} {c.name}: cases={c.cases} failures={c.failures} skipped={c.skipped}"
            lines.append(line)
            lines.append(f"     {c.anchor}")
            if c.note:
                lines.append(f"     note: {c.note}")
            if c.counterexample:
                ce = ", ".join(f"{k}={v}" for k, v in sorted(c.counterexample.items()))
                lines.append(f"     counterexample: {ce}")
        lines.append(f"total failures: {self.failures}")
        return "\n".join(lines) + "\n"


class Slice:
    """The bounded slice of G(E) shared by every check."""

    def __init__(self, g: Graph, bound: int):
        self.g = g
        self.bound = bound
        self.zero = Element(g)
        self.nonzero = elements_up_to(g, bound)
        self.elements = [self.zero] + self.nonzero
        self.cs = scc(g)

    def contains(self, x: Element) -> bool:
        return x.u is None or (len(x.u) <= self.bound and len(x.v) <= self.bound)

    def block(self, x: Element):
        return self.cs.block_of(x.u.dst)

    @cached_property
    def products(self) -> list[tuple[Element, Element, Element]]:
        g = self.g
        return [(x, y, multiply(g, x, y)) for x in self.nonzero for y in self.nonzero]


def _s(x) -> str:
    if isinstance(x, Element):
        return format_element(x)
    return str(x)


# --- algebra -----------------------------------------------------------------


def random_elements(g: Graph, rng: random.Random, count: int, max_len: int = 5,
                    zero_rate: float = 0.02) -> list[Element]:
    """Seeded random elements: pick a range vertex, then ``u`` and ``v`` ending there."""
    by_range: dict[str, list[Path]] = {}
    for p in all_paths(g, max_len):
        by_range.setdefault(p.dst, []).append(p)
    verts = sorted(by_range)
    out = []
    for _ in range(count):
        if rng.random() < zero_rate:
            out.append(Element(g))
            continue
        ps = by_range[rng.choice(verts)]
        out.append(Element(g, rng.choice(ps), rng.choice(ps)))
    return out


def check_associativity(g: Graph, seed: int, samples: int, max_len: int = 5) -> CheckResult:
    res = CheckResult("associativity", "(xy)z = x(yz)")
    rng = random.Random(seed)
    xs = random_elements(g, rng, 3 * samples, max_len)
    for i in range(samples):
        x, y, z = xs[3 * i], xs[3 * i + 1], xs[3 * i + 2]
        res.cases += 1
        if multiply(g, multiply(g, x, y), z) != multiply(g, x, multiply(g, y, z)):
            res.fail(seed=seed, index=i, x=_s(x), y=_s(y), z=_s(z))
    return res


def check_inverse_axioms(g: Graph, seed: int, samples: int, max_len: int = 5) -> CheckResult:
    res = CheckResult("inverse_axioms", "x x^-1 x = x and x^-1 x x^-1 = x^-1; idempotents commute")
    rng = random.Random(seed + 1)
    xs = random_elements(g, rng, samples, max_len)
    for i, x in enumerate(xs):
        xi = inverse(x)
        res.cases += 1
        if multiply(g, multiply(g, x, xi), x) != x or multiply(g, multiply(g, xi, x), xi) != xi:
            res.fail(seed=seed, index=i, x=_s(x))
    for i in range(0, len(xs) - 1, 2):
        f1 = multiply(g, xs[i], inverse(xs[i]))
        f2 = multiply(g, inverse(xs[i + 1]), xs[i + 1])
        res.cases += 1
        if multiply(g, f1, f2) != multiply(g, f2, f1):
            res.fail(seed=seed, index=i, f1=_s(f1), f2=_s(f2))
    return res


# --- closure properties ---------------------------------------------------------


def check_dclass_products(sl: Slice) -> CheckResult:
    res = CheckResult("dclass_products", "ab^-1 in D_e, cd^-1 in D_f  =>  ab^-1 cd^-1 in D_e^0 u D_f^0")
    for x, y, xy in sl.products:
        res.cases += 1
        if xy.u is not None and xy.u.dst not in (x.u.dst, y.u.dst):
            res.fail(x=_s(x), y=_s(y), product=_s(xy))
    return res


def check_dclass_subsemigroup(sl: Slice) -> CheckResult:
    res = CheckResult("dclass_inverse_subsemigroup", "D_e^0 is an inverse subsemigroup")
    for x, y, xy in sl.products:
        if x.u.dst != y.u.dst:
            continue
        res.cases += 1
        if xy.u is not None and xy.u.dst != x.u.dst:
            res.fail(x=_s(x), y=_s(y), product=_s(xy))
    for x in sl.nonzero:
        res.cases += 1
        if inverse(x).u.dst != x.u.dst:
            res.fail(x=_s(x))
    return res


def check_jclass_subsemigroup(sl: Slice) -> CheckResult:
    res = CheckResult("jclass_inverse_subsemigroup", "J_A^0 = J_A u {0} is an inverse subsemigroup")
    for x, y, xy in sl.products:
        if sl.block(x) is not sl.block(y):
            continue
        res.cases += 1
        if xy.u is not None and sl.block(xy) is not sl.block(x):
            res.fail(x=_s(x), y=_s(y), product=_s(xy))
    for x in sl.nonzero:
        res.cases += 1
        if sl.block(inverse(x)) is not sl.block(x):
            res.fail(x=_s(x))
    return res


def check_component_paths(sl: Slice) -> CheckResult:
    res = CheckResult("component_paths", "s(w), r(w) in A  =>  w in Path(E_A)")
    g, cs = sl.g, sl.cs
    for p in all_paths(g, sl.bound):
        block = cs.block_of(p.src)
        if cs.block_of(p.dst) is not block:
            continue
        res.cases += 1
        for eid in p.edges:
            e = g.edge(eid)
            if e.src not in block or e.dst not in block:
                res.fail(path=format_path(p), edge=eid)
                break
    return res


def check_jclass_partition(sl: Slice) -> CheckResult:
    res = CheckResult("jclass_partition", "G(E) is the union of the J_X^0, pairwise meeting in {0}")
    for x in sl.nonzero:
        res.cases += 1
        hits = [b for b in sl.cs.blocks if x.u.dst in b]
        if len(hits) != 1:
            res.fail(x=_s(x), blocks=len(hits))
    return res


def check_ordered_products(sl: Slice) -> CheckResult:
    res = CheckResult("ordered_component_products", "X <= Y  =>  J_X^0 J_Y^0 u J_Y^0 J_X^0 in J_X^0")
    cs = sl.cs
    for x, y, xy in sl.products:
        bx, by = sl.block(x), sl.block(y)
        if bx is by or not cs.comparable(bx, by):
            continue
        low = bx if cs.leq(bx, by) else by
        res.cases += 1
        if xy.u is not None and sl.block(xy) is not low:
            res.fail(x=_s(x), y=_s(y), product=_s(xy))
    return res


def check_incomparable_products(sl: Slice) -> CheckResult:
    res = CheckResult("incomparable_component_products",
                      "X, Y incomparable  =>  J_X^0 J_Y^0 u J_Y^0 J_X^0 = {0}")
    cs = sl.cs
    for x, y, xy in sl.products:
        if cs.comparable(sl.block(x), sl.block(y)):
            continue
        res.cases += 1
        if xy.u is not None:
            res.fail(x=_s(x), y=_s(y), product=_s(xy))
    return res


# --- structure maps -------------------------------------------------------------


def _homomorphism(res: CheckResult, g: Graph, members: list[Element], in_slice: Callable,
                  phi: Callable, mul: Callable) -> None:
    images = {x: phi(x) for x in members}
    seen: dict = {}
    for x, img in images.items():
        res.cases += 1
        if img in seen:
            res.fail(kind="not injective", x=_s(x), y=_s(seen[img]), image=_s(img))
        seen[img] = x
    for x in members:
        for y in members:
            xy = multiply(g, x, y)
            if not in_slice(xy):
                res.skipped += 1
                continue
            res.cases += 1
            if phi(xy) != mul(images[x], images[y]):
                res.fail(kind="not multiplicative", x=_s(x), y=_s(y), product=_s(xy))


def check_poly(sl: Slice) -> CheckResult:
    res = CheckResult("cycles_polycyclic", "<C_e> ≅ P_lambda, lambda = |C1_e \\ {e}|")
    g = sl.g
    for e in g.vertices:
        ls = local_structure(g, e, sl.bound)
        poly = ls.poly
        members = [sl.zero] + [x for x in sl.nonzero if x.u.src == e and x.v.src == e and x.u.dst == e]
        _homomorphism(res, g, members, sl.contains, lambda x: cycles_to_poly(ls, x), poly.multiply)
        image = {cycles_to_poly(ls, x) for x in members}
        # bounded P_lambda slice: normal forms whose preimage paths fit the bound
        lengths = {format_path(p): len(p) for p in ls.labels}
        for p in poly.elements(sl.bound):
            if p.pos is not None and (sum(lengths[a] for a in p.pos) > sl.bound
                                      or sum(lengths[a] for a in p.neg) > sl.bound):
                continue
            res.cases += 1
            back = poly_to_cycles(ls, p)
            if p not in image or cycles_to_poly(ls, back) != p:
                res.fail(kind="not surjective onto bounded slice", vertex=e, poly=str(p))
    return res


def check_dclass_brandt(sl: Slice) -> CheckResult:
    res = CheckResult("dclass_brandt", "D_e^0 ≅ B0_{Q_e}(P_lambda)")
    g = sl.g
    for e in g.vertices:
        ls = local_structure(g, e, sl.bound)
        brandt = ls.brandt
        members = [sl.zero] + [x for x in sl.nonzero if x.u.dst == e]
        _homomorphism(res, g, members, sl.contains, lambda x: dclass_to_brandt(ls, x),
                      brandt.multiply)
        for x in members:
            res.cases += 1
            h = dclass_to_brandt(ls, x)
            if brandt_to_dclass(ls, h) != x or dclass_to_brandt(ls, inverse(x)) != transpose(h):
                res.fail(kind="round trip", vertex=e, x=_s(x))
    return res


def check_jclass_embedding(sl: Slice) -> CheckResult:
    res = CheckResult("jclass_embedding", "J_A^0 embeds in B0_{Q_A}(G(E_A))")
    g = sl.g
    for block in sl.cs.blocks:
        cst = component_structure(g, block, sl.bound)
        brandt = cst.brandt
        members = [sl.zero] + [x for x in sl.nonzero if x.u.dst in block]
        _homomorphism(res, g, members, sl.contains, lambda x: embed_jclass(cst, x),
                      brandt.multiply)
        for x in members:
            res.cases += 1
            t = embed_jclass(cst, x)
            if unembed_jclass(cst, t) != x:
                res.fail(kind="round trip", x=_s(x))
            elif x.u is not None:
                u1, u2 = factor_at_component(g, x.u, block)
                if (t.left, t.payload.u) != (u1, u2):
                    res.fail(kind="projection", x=_s(x))
    return res


def check_matrix_units(sl: Slice) -> CheckResult:
    res = CheckResult("acyclic_matrix_units", "acyclic at e  =>  D_e^0 ≅ B0_{I_e} (matrix units)")
    g = sl.g
    for e in g.vertices:
        if not is_acyclic_at(g, e):
            continue
        ls = local_structure(g, e, sl.bound)
        members = [sl.zero] + [x for x in sl.nonzero if x.u.dst == e]
        table = {}
        for x in members:
            h = dclass_to_brandt(ls, x)
            res.cases += 1
            if not h.is_zero and h.payload != ls.poly.one:
                res.fail(kind="payload is not 1", x=_s(x))
            table[x] = BRANDT_ZERO if h.is_zero else BrandtElement(h.left, 1, h.right)
        for x in members:
            for y in members:
                xy = multiply(g, x, y)
                if not sl.contains(xy):
                    res.skipped += 1
                    continue
                res.cases += 1
                if table[xy] != matrix_unit_multiply(ls.q_index, table[x], table[y]):
                    res.fail(kind="table mismatch", x=_s(x), y=_s(y))
    return res


def check_j_equals_d(sl: Slice) -> CheckResult:
    res = CheckResult("j_equals_d", "J = D on G(E)  <=>  E acyclic")
    acyclic = is_acyclic(sl.g)
    witness = None
    for x in sl.elements:
        for y in sl.elements:
            if x.u is None or y.u is None:
                continue
            res.cases += 1
            j = sl.block(x) is sl.block(y)
            d = x.u.dst == y.u.dst
            if j and not d and witness is None:
                witness = (x, y)
    if acyclic:
        res.note = "acyclic graph: J-not-D pairs must not exist"
        if witness is not None:
            res.fail(kind="J-not-D pair on an acyclic graph", x=_s(witness[0]), y=_s(witness[1]))
    else:
        if witness is None:
            res.fail(kind="cyclic graph but no J-not-D pair in the slice")
        else:
            res.note = f"J-not-D witness: {_s(witness[0])} ~J {_s(witness[1])}"
    return res


CHECKS = (
    check_dclass_products, check_dclass_subsemigroup, check_jclass_subsemigroup,
    check_component_paths, check_jclass_partition, check_ordered_products,
    check_incomparable_products, check_poly, check_dclass_brandt, check_jclass_embedding,
    check_matrix_units, check_j_equals_d,
)


def verify_suite(g: Graph, bound: int = 3, seed: int = 0, samples: int = 10_000) -> VerificationReport:
    sl = Slice(g, bound)
    checks = [fn(sl) for fn in CHECKS]
    checks.append(check_associativity(g, seed, samples))
    checks.append(check_inverse_axioms(g, seed, samples))
    checks.sort(key=lambda c: c.name)
    return VerificationReport(bound, seed, checks)


__all__ = ["CheckResult", "VerificationReport", "Slice", "verify_suite", "random_elements",
           "check_associativity", "check_inverse_axioms"]
