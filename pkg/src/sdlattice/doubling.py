"""Doubling elements and antichains, and the congruences that undo it.

Doubling ``u`` replaces it by a two-element chain ``u.0 ≺ u.1``; every
element below ``u`` goes below both copies and every element above ``u``
goes above both.  The congruence ``mu(D, u)`` glues the copies back
together, and for a doubled antichain ``U`` the congruences ``mu_V`` for
``V ⊆ U`` form a copy of the Boolean lattice ``B_|U|`` inside Con.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .congruence import (
    Congruence,
    ConLattice,
    _UnionFind,
    all_congruences,
    atoms,
    join,
    meet,
    principal_congruence,
)
from .core import FiniteLattice, from_order, is_antichain, is_isomorphic
from .catalog import boolean
from .errors import NotAnAntichain, NotDoubled


@dataclass(frozen=True)
class DoubledLattice:
    result: FiniteLattice
    origin: FiniteLattice
    doubled: dict[str, tuple[str, str]]
    embedding: dict[str, str]


def _fresh(taken: set[str], base: str) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def double_antichain(L: FiniteLattice, U: Iterable[str], verify: bool = False) -> DoubledLattice:
    """Double every element of the antichain ``U`` at once.

    With ``verify=True`` the join/meet preservation laws are checked on the
    result and a ``AssertionError`` lists any violation.
    """
    U = list(dict.fromkeys(U))
    for u in U:
        L.idx(u)
    if not is_antichain(L, U):
        raise NotAnAntichain(f"{U} is not an antichain of {L.name or 'the lattice'}")
    Uset = set(U)
    taken = set(L.elements)
    doubled: dict[str, tuple[str, str]] = {}
    for u in U:
        lo = _fresh(taken, f"{u}.0")
        taken.add(lo)
        hi = _fresh(taken, f"{u}.1")
        taken.add(hi)
        doubled[u] = (lo, hi)

    names: list[str] = []
    origin: list[int] = []   # index in L of each new element
    level: list[int] = []    # -1 for untouched elements, 0/1 for the copies
    for i, x in enumerate(L.elements):
        if x in Uset:
            for k in (0, 1):
                names.append(doubled[x][k])
                origin.append(i)
                level.append(k)
        else:
            names.append(x)
            origin.append(i)
            level.append(-1)

    def le(i, j):
        if origin[i] == origin[j]:
            return level[i] <= level[j]
        return L.le(origin[i], origin[j])

    result = from_order(names, le, name=f"{L.name}[{','.join(U)}]")
    D = DoubledLattice(
        result=result,
        origin=L,
        doubled=doubled,
        embedding={x: x for x in L.elements if x not in Uset},
    )
    if verify:
        problems = doubling_law_violations(D)
        assert not problems, problems
    return D


def double_element(L: FiniteLattice, u: str, verify: bool = False) -> DoubledLattice:
    return double_antichain(L, [u], verify=verify)


def image(D: DoubledLattice, x: str, side: int) -> str:
    """Image of an origin element; a doubled element goes to copy ``side``."""
    if x in D.doubled:
        return D.doubled[x][side]
    return D.embedding[x]


def doubling_law_violations(D: DoubledLattice) -> list[str]:
    """Post-hoc check of the structural facts every doubling must satisfy.

    * each ``u.0 ≺ u.1``, ``u.0`` meet-irreducible, ``u.1`` join-irreducible;
    * joins and meets of untouched elements are unchanged;
    * ``u.0 ∧ a`` is the image of ``u ∧ a`` and ``u.1 ∨ a`` the image of
      ``u ∨ a`` for untouched ``a``.
    """
    L, K = D.origin, D.result
    bad = []
    for u, (lo, hi) in D.doubled.items():
        i, j = K.idx(lo), K.idx(hi)
        if j not in K.upper[i]:
            bad.append(f"{lo} is not covered by {hi}")
        if len(K.upper[i]) != 1:
            bad.append(f"{lo} is not meet-irreducible")
        if len(K.lower[j]) != 1:
            bad.append(f"{hi} is not join-irreducible")
    plain = list(D.embedding)
    for a, b in combinations(plain, 2):
        c, d = L.join(a, b), L.meet(a, b)
        if c not in D.doubled and K.join(a, b) != D.embedding[c]:
            bad.append(f"join {a} ∨ {b} moved")
        if d not in D.doubled and K.meet(a, b) != D.embedding[d]:
            bad.append(f"meet {a} ∧ {b} moved")
    for u, (lo, hi) in D.doubled.items():
        for a in plain:
            if K.meet(lo, a) != image(D, L.meet(u, a), 0):
                bad.append(f"{lo} ∧ {a} is not the image of {u} ∧ {a}")
            if K.join(hi, a) != image(D, L.join(u, a), 1):
                bad.append(f"{hi} ∨ {a} is not the image of {u} ∨ {a}")
    return bad


def mu(D: DoubledLattice, u: str) -> Congruence:
    """The congruence whose only nontrivial block is ``{u.0, u.1}``."""
    return mu_V(D, [u])


def mu_V(D: DoubledLattice, V: Iterable[str]) -> Congruence:
    """Union of the ``mu(D, v)`` for ``v`` in ``V``; ``mu_V(D, [])`` is Δ."""
    K = D.result
    uf = _UnionFind(K.n)
    for v in V:
        if v not in D.doubled:
            raise NotDoubled(f"{v!r} was not doubled")
        lo, hi = D.doubled[v]
        uf.union(K.idx(lo), K.idx(hi))
    theta = Congruence(K, uf.labels())
    if not theta.is_valid():
        raise AssertionError(f"{theta} fails the substitution property")
    return theta


@dataclass
class EmbeddingReport:
    """Outcome of checking that ``V ↦ mu_V`` embeds ``B_|U|`` into Con."""

    size: int
    con_size: int
    injective: bool
    sublattice: bool
    boolean: bool
    mu_are_principal: bool
    mu_are_atoms: bool
    # whether Con is exactly the image together with ∇
    image_plus_top: bool
    extras: list[str] = field(default_factory=list)

    @property
    def embedding_ok(self) -> bool:
        return (self.injective and self.sublattice and self.boolean
                and self.mu_are_principal and self.mu_are_atoms)


def check_boolean_embedding(D: DoubledLattice, U: Iterable[str] | None = None,
                            con: ConLattice | None = None) -> EmbeddingReport:
    U = list(D.doubled) if U is None else list(U)
    for u in U:
        if u not in D.doubled:
            raise NotDoubled(f"{u!r} was not doubled")
    con = all_congruences(D.result) if con is None else con
    subsets = [V for k in range(len(U) + 1) for V in combinations(U, k)]
    img = {V: mu_V(D, V) for V in subsets}
    labels = {c.labels for c in img.values()}
    injective = len(labels) == len(subsets)
    inside = all(c in con for c in img.values())
    closed = True
    for V, W in combinations(subsets, 2):
        j, m = join(img[V], img[W]), meet(img[V], img[W])
        if j.labels not in labels or m.labels not in labels:
            closed = False
    sub = None
    is_bool = False
    if injective and inside and closed:
        positions = [con.position(c) for c in img.values()]
        sub = from_order(
            [con.carrier.elements[p] for p in positions],
            lambda i, j: con.carrier.le(positions[i], positions[j]),
        )
        is_bool = is_isomorphic(sub, boolean(len(U))) is not None
    atom_set = {a.labels for a in atoms(con)}
    principal = all(
        mu(D, u) == principal_congruence(D.result, *D.doubled[u]) for u in U
    )
    is_atoms = all(mu(D, u).labels in atom_set for u in U)
    extras = [
        str(c) for c in con.congruences
        if c.labels not in labels and not c.is_total()
    ]
    return EmbeddingReport(
        size=len(U),
        con_size=len(con),
        injective=injective,
        sublattice=inside and closed,
        boolean=is_bool,
        mu_are_principal=principal,
        mu_are_atoms=is_atoms,
        image_plus_top=not extras,
        extras=extras,
    )
