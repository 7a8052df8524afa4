"""Isolated intervals and gluing a lattice into their place.

An isolated interval is a cover ``a ≺ b`` of two doubly irreducible
elements.  Deleting ``a`` and ``b`` leaves a sublattice ``L^{a,b}`` that
splits into ``P = ↓a_*``, ``Q = ↑b^*`` and the rest ``R``.  Gluing a
lattice ``F`` into the hole gives ``K = L^{a,b} ⊎ F`` with ``P < F < Q``,
and congruences of ``L`` are pushed to ``K`` block by block.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .congruence import (
    Congruence,
    ConLattice,
    _UnionFind,
    all_congruences,
)
from .core import FiniteLattice, from_order, is_doubly_irreducible, sublattice
from .errors import NotACongruence, NotIsolated, TooSmall
from .sd import SdReport, check_sd_direct, sd_violations


@dataclass(frozen=True)
class IsolatedInterval:
    a: str
    b: str
    a_star: str
    b_star: str


class _Empty:
    """Stand-in for the empty ``L^{a,b}`` of a two-element lattice."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __len__(self):
        return 0

    def __repr__(self):
        return "EMPTY"


EMPTY = _Empty()


def find_isolated_intervals(L: FiniteLattice) -> list[IsolatedInterval]:
    out = []
    for a in range(L.n):
        if not is_doubly_irreducible(L, a):
            continue
        for b in L.upper[a]:
            if is_doubly_irreducible(L, b):
                out.append(IsolatedInterval(
                    L.elements[a], L.elements[b],
                    L.elements[L.lower[a][0]], L.elements[L.upper[b][0]],
                ))
    return out


def isolated_interval(L: FiniteLattice, a: str, b: str) -> IsolatedInterval:
    """Look up ``[a, b]`` and raise :class:`NotIsolated` unless it qualifies."""
    L.idx(a), L.idx(b)
    for iv in find_isolated_intervals(L):
        if (iv.a, iv.b) == (a, b):
            return iv
    raise NotIsolated(f"[{a}, {b}] is not an isolated interval")


def _resolve(L, iv) -> IsolatedInterval:
    if isinstance(iv, IsolatedInterval):
        return isolated_interval(L, iv.a, iv.b)
    a, b = iv
    return isolated_interval(L, a, b)


def delete_interval(L: FiniteLattice, iv):
    """``L^{a,b}``: the sublattice left after removing ``a`` and ``b``.

    A two-element lattice gives :data:`EMPTY` whatever pair is passed.
    """
    if L.n == 2:
        return EMPTY
    if L.n < 2:
        raise TooSmall("a lattice with fewer than two elements has no interval to delete")
    iv = _resolve(L, iv)
    rest = [x for x in L.elements if x not in (iv.a, iv.b)]
    S = sublattice(L, rest, name=f"{L.name}^{{{iv.a},{iv.b}}}")
    for x in rest:
        for y in rest:
            if L.meet(x, y) in (iv.a, iv.b) or L.join(x, y) in (iv.a, iv.b):
                raise AssertionError(f"{x}, {y} leave the sublattice")
    return S


def partition_pqr(L: FiniteLattice, iv) -> tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]:
    if L.n <= 2:
        raise TooSmall("the partition needs at least three elements")
    iv = _resolve(L, iv)
    P = L.names(L.down[L.idx(iv.a_star)])
    Q = L.names(L.up[L.idx(iv.b_star)])
    taken = set(P) | set(Q) | {iv.a, iv.b}
    R = tuple(x for x in L.elements if x not in taken)
    return P, Q, R


@dataclass(frozen=True)
class GlueContext:
    L: FiniteLattice
    interval: IsolatedInterval
    F: FiniteLattice
    P: tuple[str, ...]
    Q: tuple[str, ...]
    R: tuple[str, ...]
    K: FiniteLattice
    # F element -> its name in K; elements of L^{a,b} keep their names
    f_map: dict[str, str]

    @property
    def rest(self) -> tuple[str, ...]:
        return tuple(x for x in self.L.elements if x not in (self.interval.a, self.interval.b))

    @property
    def f_elements(self) -> tuple[str, ...]:
        return tuple(self.f_map[x] for x in self.F.elements)


def glue(L: FiniteLattice, iv, F: FiniteLattice) -> GlueContext:
    """Replace the isolated interval ``iv`` of ``L`` by a copy of ``F``.

    Inside ``F`` the order of ``F`` is kept.  If some element name of ``F``
    already occurs in ``L``, every element of ``F`` gets an ``F.`` prefix
    (repeated until the names are fresh).
    """
    iv = _resolve(L, iv)
    if L.n <= 2:
        raise TooSmall("gluing needs at least three elements")
    P, Q, R = partition_pqr(L, iv)
    rest = [x for x in L.elements if x not in (iv.a, iv.b)]
    prefix = ""
    while any(prefix + f in rest for f in F.elements):
        prefix += "F."
    f_map = {f: prefix + f for f in F.elements}

    # K in L's element order, with F spliced in where a used to be
    names: list[str] = []
    src: list[tuple[str, int]] = []
    for x in L.elements:
        if x == iv.a:
            for j, f in enumerate(F.elements):
                names.append(f_map[f])
                src.append(("F", j))
        elif x != iv.b:
            names.append(x)
            src.append(("L", L.idx(x)))
    ia, ib = L.idx(iv.a), L.idx(iv.b)

    def le(i, j):
        (si, xi), (sj, xj) = src[i], src[j]
        if si == "L" and sj == "L":
            return L.le(xi, xj)
        if si == "F" and sj == "F":
            return F.le(xi, xj)
        if si == "L":
            return L.le(xi, ia)
        return L.le(ib, xj)

    K = from_order(names, le, name=f"{L.name}[{iv.a},{iv.b}:={F.name}]")
    return GlueContext(L, iv, F, P, Q, R, K, f_map)


def is_sublattice_of_k(ctx: GlueContext) -> bool:
    """``L^{a,b}`` is closed under the meets and joins of ``K``, which
    agree with those of ``L``."""
    L, K = ctx.L, ctx.K
    rest = ctx.rest
    return all(
        K.meet(x, y) == L.meet(x, y) and K.join(x, y) == L.join(x, y)
        for x in rest for y in rest
    )


def order_sandwich_holds(ctx: GlueContext) -> bool:
    K = ctx.K
    fs = ctx.f_elements
    return (all(K.leq(p, f) and p != f for p in ctx.P for f in fs)
            and all(K.leq(f, q) for f in fs for q in ctx.Q)
            and all(not K.leq(r, f) and not K.leq(f, r) for r in ctx.R for f in fs))


@dataclass
class GlueSdReport:
    k: SdReport
    f: SdReport
    violations: list = field(default_factory=list)
    # True when every failing triple uses at least two elements of F
    violations_inside_f: bool = True

    @property
    def k_semidistributive(self) -> bool:
        return self.k.semidistributive

    @property
    def f_semidistributive(self) -> bool:
        return self.f.semidistributive


def check_glue_sd(ctx: GlueContext) -> GlueSdReport:
    fs = set(ctx.f_elements)
    viol = sd_violations(ctx.K)
    inside = all(sum(x in fs for x in set(triple)) >= 2 for _, triple in viol)
    return GlueSdReport(check_sd_direct(ctx.K), check_sd_direct(ctx.F), viol, inside)


@dataclass(frozen=True)
class Transfer:
    congruence: Congruence
    is_congruence: bool


def transfer_congruence(ctx: GlueContext, alpha: Congruence) -> Transfer:
    """Push a congruence of ``L`` to ``K``.

    If ``a ≡ b``, the block holding them trades ``{a, b}`` for all of ``F``.
    Otherwise each block is cut down to ``L^{a,b}`` (empty pieces vanish)
    and ``F`` is all singletons.  The result is always a partition of
    ``K``; ``is_congruence`` says whether it has the substitution property.
    """
    L, K, iv = ctx.L, ctx.K, ctx.interval
    if alpha.lattice != L or not alpha.is_valid():
        raise NotACongruence(f"{alpha} is not a congruence of {L.name or 'the lattice'}")
    glued = alpha.related(iv.a, iv.b)
    uf = _UnionFind(K.n)
    for block in alpha.blocks:
        members = [K.idx(x) for x in block if x not in (iv.a, iv.b)]
        if glued and (iv.a in block or iv.b in block):
            members += [K.idx(f) for f in ctx.f_elements]
        for i in members[1:]:
            uf.union(members[0], i)
    theta = Congruence(K, uf.labels())
    return Transfer(theta, theta.is_valid())


def leaking_congruences(L: FiniteLattice, iv, con: ConLattice | None = None) -> list[Congruence]:
    """Congruences that separate ``a`` from ``b`` but put ``a`` or ``b`` in a
    block with some other element.  Cutting such a block down to
    ``L^{a,b}`` loses information, so the transfer cannot be injective."""
    iv = _resolve(L, iv)
    con = all_congruences(L) if con is None else con
    out = []
    for alpha in con:
        if alpha.related(iv.a, iv.b):
            continue
        if len(alpha.block_of(iv.a)) > 1 or len(alpha.block_of(iv.b)) > 1:
            out.append(alpha)
    return out


@dataclass
class ConIsoReport:
    con_l: int
    con_k: int
    f_simple: bool
    well_defined: bool
    injective: bool
    surjective: bool
    order_preserving: bool
    order_reflecting: bool
    counterexamples: list[str] = field(default_factory=list)

    @property
    def isomorphism(self) -> bool:
        return (self.well_defined and self.injective and self.surjective
                and self.order_preserving and self.order_reflecting)

    def as_dict(self) -> dict:
        return {
            "con_L": self.con_l,
            "con_K": self.con_k,
            "F_simple": self.f_simple,
            "well_defined": self.well_defined,
            "injective": self.injective,
            "surjective": self.surjective,
            "order_preserving": self.order_preserving,
            "order_reflecting": self.order_reflecting,
            "isomorphism": self.isomorphism,
            "counterexamples": list(self.counterexamples),
        }


def verify_con_isomorphism(ctx: GlueContext, con_l: ConLattice | None = None,
                           con_k: ConLattice | None = None) -> ConIsoReport:
    """Decide, for this instance, whether the transfer map is an isomorphism
    ``Con L -> Con K``.  Nothing is assumed; every property is computed."""
    con_l = all_congruences(ctx.L) if con_l is None else con_l
    con_k = all_congruences(ctx.K) if con_k is None else con_k
    f_simple = ctx.F.n > 1 and len(all_congruences(ctx.F)) == 2
    notes = []
    images = []
    well = True
    for alpha in con_l:
        t = transfer_congruence(ctx, alpha)
        images.append(t.congruence)
        if not t.is_congruence:
            well = False
            notes.append(f"{alpha} ↦ {t.congruence}, not a congruence of K")
    by_image: dict[tuple[int, ...], Congruence] = {}
    injective = True
    for alpha, img in zip(con_l, images):
        prev = by_image.setdefault(img.labels, alpha)
        if prev is not alpha:
            injective = False
            notes.append(f"{prev} and {alpha} both ↦ {img}")
    surjective = all(theta.labels in by_image for theta in con_k)
    for theta in con_k:
        if theta.labels not in by_image:
            notes.append(f"{theta} is not an image")
    preserving = reflecting = True
    pairs = list(zip(con_l, images))
    for x, ix in pairs:
        for y, iy in pairs:
            before, after = x.refines(y), ix.refines(iy)
            if before and not after:
                preserving = False
                notes.append(f"{x} ⊆ {y} but images are not ordered")
            if after and not before:
                reflecting = False
    return ConIsoReport(len(con_l), len(con_k), f_simple, well, injective,
                        surjective, preserving, reflecting, notes)
