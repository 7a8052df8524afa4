"""Congruences of finite lattices.

A congruence is stored as a block label per element: the label of ``i``
is the smallest element index in its block.  Rendering follows the
``{x,y|z|w}`` convention: blocks sorted internally and by least element,
both in the lattice's element order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import FiniteLattice, from_order
from .errors import NotACongruence


def _canonical(parent_of) -> tuple[int, ...]:
    first: dict[int, int] = {}
    out = []
    for i, r in enumerate(parent_of):
        out.append(first.setdefault(r, i))
    return tuple(out)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True

    def labels(self):
        return _canonical([self.find(i) for i in range(len(self.parent))])


def _generate(L: FiniteLattice, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Smallest congruence containing ``pairs``.

    Every pair that actually merges two blocks has all of its translates
    ``(x∧z, y∧z)`` and ``(x∨z, y∨z)`` queued; pairs that were already
    related are connected by merged pairs whose translates are queued
    anyway, so the fixed point is closed under all unary polynomials.
    """
    uf = _UnionFind(L.n)
    stack = list(pairs)
    mt, jn, r = L.mt, L.jn, range(L.n)
    while stack:
        x, y = stack.pop()
        if uf.union(x, y):
            mx, my, jx, jy = mt[x], mt[y], jn[x], jn[y]
            for z in r:
                stack.append((mx[z], my[z]))
                stack.append((jx[z], jy[z]))
    return uf.labels()


def _is_congruence_labels(L: FiniteLattice, labels) -> bool:
    mt, jn = L.mt, L.jn
    for x in range(L.n):
        y = labels[x]
        if y == x:
            continue
        mx, my, jx, jy = mt[x], mt[y], jn[x], jn[y]
        for z in range(L.n):
            if labels[mx[z]] != labels[my[z]] or labels[jx[z]] != labels[jy[z]]:
                return False
    return True


@dataclass(frozen=True, eq=False)
class Congruence:
    """A partition of a lattice's elements (normally a congruence)."""

    lattice: FiniteLattice
    labels: tuple[int, ...]

    @classmethod
    def from_blocks(cls, L: FiniteLattice, blocks, check: bool = True) -> "Congruence":
        uf = _UnionFind(L.n)
        seen = set()
        for block in blocks:
            idx = [L.idx(x) for x in block]
            if seen.intersection(idx):
                raise NotACongruence("blocks overlap")
            seen.update(idx)
            for i in idx[1:]:
                uf.union(idx[0], i)
        theta = cls(L, uf.labels())
        if check and not theta.is_valid():
            raise NotACongruence(f"{theta} lacks the substitution property")
        return theta

    @property
    def blocks(self) -> tuple[tuple[str, ...], ...]:
        groups: dict[int, list[int]] = {}
        for i, r in enumerate(self.labels):
            groups.setdefault(r, []).append(i)
        return tuple(self.lattice.names(groups[r]) for r in sorted(groups))

    @property
    def index_blocks(self) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for i, r in enumerate(self.labels):
            groups.setdefault(r, []).append(i)
        return tuple(tuple(groups[r]) for r in sorted(groups))

    def is_valid(self) -> bool:
        return _is_congruence_labels(self.lattice, self.labels)

    def related(self, x: str, y: str) -> bool:
        L = self.lattice
        return self.labels[L.idx(x)] == self.labels[L.idx(y)]

    def block_of(self, x: str) -> tuple[str, ...]:
        L = self.lattice
        r = self.labels[L.idx(x)]
        return L.names(i for i in range(L.n) if self.labels[i] == r)

    @property
    def nontrivial_blocks(self):
        return tuple(b for b in self.blocks if len(b) > 1)

    def refines(self, other: "Congruence") -> bool:
        """``self ⊆ other`` as relations."""
        o = other.labels
        return all(o[i] == o[r] for i, r in enumerate(self.labels))

    def is_identity(self) -> bool:
        return all(r == i for i, r in enumerate(self.labels))

    def is_total(self) -> bool:
        return all(r == 0 for r in self.labels)

    def __eq__(self, other):
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.labels == other.labels and self.lattice == other.lattice

    def __hash__(self):
        return hash(self.labels)

    def __str__(self):
        return "{" + "|".join(",".join(b) for b in self.blocks) + "}"

    def __repr__(self):
        return f"Congruence({self})"


def identity(L: FiniteLattice) -> Congruence:
    return Congruence(L, tuple(range(L.n)))


def total(L: FiniteLattice) -> Congruence:
    return Congruence(L, (0,) * L.n)


def is_congruence(L: FiniteLattice, blocks) -> bool:
    try:
        Congruence.from_blocks(L, blocks)
    except NotACongruence:
        return False
    return True


def principal_congruence(L: FiniteLattice, x: str, y: str) -> Congruence:
    return Congruence(L, _generate(L, [(L.idx(x), L.idx(y))]))


def join(a: Congruence, b: Congruence) -> Congruence:
    L = a.lattice
    pairs = [(i, r) for i, r in enumerate(a.labels) if i != r]
    pairs += [(i, r) for i, r in enumerate(b.labels) if i != r]
    return Congruence(L, _generate(L, pairs))


def meet(a: Congruence, b: Congruence) -> Congruence:
    keys = list(zip(a.labels, b.labels))
    return Congruence(a.lattice, _canonical(keys))


class ConLattice:
    """All congruences of a lattice, ordered by refinement.

    ``congruences[i]`` corresponds to ``carrier.elements[i]``; carrier
    elements are named by the rendered block partitions.
    """

    def __init__(self, lattice: FiniteLattice, congruences: list[Congruence]):
        self.lattice = lattice
        self.congruences = tuple(congruences)
        names = [str(c) for c in self.congruences]
        cs = self.congruences
        self.carrier = from_order(
            names, lambda i, j: cs[i].refines(cs[j]), name=f"Con({lattice.name})"
        )
        self._index = {c.labels: i for i, c in enumerate(cs)}

    def __len__(self):
        return len(self.congruences)

    def __iter__(self):
        return iter(self.congruences)

    def __contains__(self, theta: Congruence):
        return theta.labels in self._index

    def position(self, theta: Congruence) -> int:
        return self._index[theta.labels]

    def element(self, theta: Congruence) -> str:
        return self.carrier.elements[self.position(theta)]

    @property
    def identity(self) -> Congruence:
        return self.congruences[self.carrier.bottom]

    @property
    def total(self) -> Congruence:
        return self.congruences[self.carrier.top]


def _sort_key(c: Congruence):
    return (-len(set(c.labels)), c.labels)


def cover_congruences(L: FiniteLattice) -> list[Congruence]:
    """Distinct principal congruences ``con(x, y)`` over cover pairs ``x ≺ y``."""
    out: dict[tuple[int, ...], Congruence] = {}
    for x in range(L.n):
        for y in L.upper[x]:
            labels = _generate(L, [(x, y)])
            out.setdefault(labels, Congruence(L, labels))
    return sorted(out.values(), key=_sort_key)


def all_congruences(L: FiniteLattice) -> ConLattice:
    """Join-closure of the cover principal congruences together with Δ."""
    gens = cover_congruences(L)
    found = {identity(L).labels: identity(L)}
    frontier = [identity(L)]
    while frontier:
        nxt = []
        for c in frontier:
            for g in gens:
                if g.refines(c):
                    continue
                j = join(c, g)
                if j.labels not in found:
                    found[j.labels] = j
                    nxt.append(j)
        frontier = nxt
    return ConLattice(L, sorted(found.values(), key=_sort_key))


def quotient(L: FiniteLattice, theta: Congruence) -> FiniteLattice:
    """The lattice ``L/θ`` on the blocks of θ.

    A singleton block keeps its element's name; larger blocks are named
    ``{x,y,...}``.
    """
    if theta.lattice != L or not theta.is_valid():
        raise NotACongruence(f"{theta} is not a congruence of {L.name or 'the lattice'}")
    blocks = theta.index_blocks
    names = [
        L.elements[b[0]] if len(b) == 1 else "{" + ",".join(L.elements[i] for i in b) + "}"
        for b in blocks
    ]
    lab = theta.labels
    reps = [b[0] for b in blocks]
    # [x] <= [y] iff x ∨ y ≡ y
    return from_order(
        names,
        lambda i, j: lab[L.jn[reps[i]][reps[j]]] == lab[reps[j]],
        name=f"{L.name}/{theta}",
    )


def is_simple(L: FiniteLattice) -> bool:
    """Exactly two congruences.  The one-element lattice is not simple."""
    if L.n == 1:
        return False
    return len(all_congruences(L)) == 2


def atoms(conL: ConLattice) -> list[Congruence]:
    C = conL.carrier
    return [conL.congruences[i] for i in sorted(C.upper[C.bottom])]
