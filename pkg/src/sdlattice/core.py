"""Finite lattices: validation, order queries, irreducibles and isomorphism.

Elements are opaque strings.  Internally everything runs on dense integer
indices in the order the elements were declared, and order ideals/filters
are stored as Python ints used as bitsets, so ``down[i] >> j & 1`` is the
test for ``j <= i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import (
    CycleDetected,
    DuplicateElement,
    LatticeError,
    NotALattice,
    UnknownElement,
)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """An immutable finite lattice.

    Build instances with :func:`validate_lattice` or :func:`from_order`;
    the constructor assumes its input has already been checked.
    """

    __slots__ = (
        "name", "elements", "index", "n", "down", "up", "mt", "jn",
        "lower", "upper", "bottom", "top", "topo", "_height", "_depth",
    )

    def __init__(self, name, elements, down, up, mt, jn, topo):
        self.name = name
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.n = len(self.elements)
        self.down = tuple(down)
        self.up = tuple(up)
        self.mt = mt
        self.jn = jn
        self.topo = tuple(topo)
        n = self.n
        lower = [[] for _ in range(n)]
        upper = [[] for _ in range(n)]
        for y in range(n):
            for x in _bits(self.down[y] & ~(1 << y)):
                # x < y is a cover iff nothing sits strictly between them
                if self.up[x] & self.down[y] == (1 << x) | (1 << y):
                    lower[y].append(x)
                    upper[x].append(y)
        self.lower = tuple(tuple(v) for v in lower)
        self.upper = tuple(tuple(v) for v in upper)
        self.bottom = next(i for i in range(n) if self.up[i] == (1 << n) - 1)
        self.top = next(i for i in range(n) if self.down[i] == (1 << n) - 1)
        self._height = None
        self._depth = None

    # -- element-level queries ------------------------------------------

    def idx(self, x: str) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElement(x) from None

    def le(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def leq(self, x: str, y: str) -> bool:
        return self.le(self.idx(x), self.idx(y))

    def meet(self, x: str, y: str) -> str:
        return self.elements[self.mt[self.idx(x)][self.idx(y)]]

    def join(self, x: str, y: str) -> str:
        return self.elements[self.jn[self.idx(x)][self.idx(y)]]

    @property
    def zero(self) -> str:
        return self.elements[self.bottom]

    @property
    def one(self) -> str:
        return self.elements[self.top]

    @property
    def covers(self) -> tuple[tuple[str, str], ...]:
        """Cover pairs ``(lower, upper)``, sorted by element order."""
        e = self.elements
        return tuple(
            (e[x], e[y]) for x in range(self.n) for y in sorted(self.upper[x])
        )

    def names(self, mask_or_indices) -> tuple[str, ...]:
        if isinstance(mask_or_indices, int):
            mask_or_indices = _bits(mask_or_indices)
        return tuple(self.elements[i] for i in sorted(mask_or_indices))

    @property
    def height(self) -> tuple[int, ...]:
        """Length of the longest chain from 0 up to each element."""
        if self._height is None:
            h = [0] * self.n
            for y in self.topo:
                for x in self.lower[y]:
                    h[y] = max(h[y], h[x] + 1)
            self._height = tuple(h)
        return self._height

    @property
    def depth(self) -> tuple[int, ...]:
        if self._depth is None:
            d = [0] * self.n
            for x in reversed(self.topo):
                for y in self.upper[x]:
                    d[x] = max(d[x], d[y] + 1)
            self._depth = tuple(d)
        return self._depth

    # -- misc -------------------------------------------------------------

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.elements == other.elements and self.down == other.down

    def __hash__(self):
        return hash((self.elements, self.down))

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, {self.n} elements)"


def _finish(name, elements, down) -> FiniteLattice:
    """Check a reflexive-transitive ``down`` table for antisymmetry and the
    lattice property, then build the lattice."""
    n = len(elements)
    up = [0] * n
    for y in range(n):
        for x in _bits(down[y]):
            up[x] |= 1 << y
    for i in range(n):
        both = down[i] & up[i] & ~(1 << i)
        if both:
            raise CycleDetected([elements[i]] + [elements[j] for j in _bits(both)])

    jn = [[0] * n for _ in range(n)]
    mt = [[0] * n for _ in range(n)]
    # joins first: an antichain of minimal elements shows up as an ambiguous join
    for kind, table, bounds in (("join", jn, up), ("meet", mt, down)):
        for i in range(n):
            table[i][i] = i
            for j in range(i + 1, n):
                common = bounds[i] & bounds[j]
                best = -1
                for k in _bits(common):
                    # the least upper (greatest lower) bound sees every other bound
                    if bounds[k] & common == common:
                        best = k
                        break
                if best < 0:
                    raise NotALattice((elements[i], elements[j]), kind)
                table[i][j] = table[j][i] = best

    topo = sorted(range(n), key=lambda i: (bin(down[i]).count("1"), i))
    return FiniteLattice(
        name, elements, down, up,
        tuple(map(tuple, mt)), tuple(map(tuple, jn)), topo,
    )


def validate_lattice(
    elements: Sequence[str],
    covers: Iterable[tuple[str, str]],
    name: str = "",
) -> FiniteLattice:
    """Build a lattice from its Hasse diagram.

    ``covers`` lists pairs ``(lower, upper)``.  Redundant (transitive)
    edges are tolerated and dropped; the stored cover relation is always
    the transitive reduction.
    """
    elements = list(elements)
    if not elements:
        raise LatticeError("a lattice needs at least one element")
    index: dict[str, int] = {}
    for x in elements:
        if not isinstance(x, str):
            raise LatticeError(f"element identifiers must be text, got {x!r}")
        if x in index:
            raise DuplicateElement(x)
        index[x] = len(index)
    n = len(elements)
    preds: list[set[int]] = [set() for _ in range(n)]
    for pair in covers:
        lo, hi = pair
        for z in (lo, hi):
            if z not in index:
                raise UnknownElement(z)
        if lo == hi:
            raise CycleDetected([lo])
        preds[index[hi]].add(index[lo])

    indeg = [len(p) for p in preds]
    succs: list[list[int]] = [[] for _ in range(n)]
    for y in range(n):
        for x in preds[y]:
            succs[x].append(y)
    queue = deque(i for i in range(n) if indeg[i] == 0)
    order = []
    while queue:
        x = queue.popleft()
        order.append(x)
        for y in succs[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    if len(order) < n:
        stuck = [elements[i] for i in range(n) if indeg[i] > 0]
        raise CycleDetected(stuck)

    down = [0] * n
    for y in order:
        m = 1 << y
        for x in preds[y]:
            m |= down[x]
        down[y] = m
    return _finish(name, elements, down)


def from_order(
    elements: Sequence[str],
    le: Callable[[int, int], bool],
    name: str = "",
) -> FiniteLattice:
    """Build a lattice from an order predicate on element indices.

    The predicate must describe a partial order; reflexivity, antisymmetry
    and transitivity are all checked.
    """
    elements = list(elements)
    if len(set(elements)) != len(elements):
        for i, x in enumerate(elements):
            if x in elements[:i]:
                raise DuplicateElement(x)
    if not elements:
        raise LatticeError("a lattice needs at least one element")
    n = len(elements)
    down = [0] * n
    for j in range(n):
        for i in range(n):
            if i == j or le(i, j):
                down[j] |= 1 << i
    for j in range(n):
        for i in _bits(down[j]):
            if down[i] & ~down[j]:
                raise LatticeError(f"order predicate is not transitive at {elements[j]!r}")
    return _finish(name, elements, down)


def dual(L: FiniteLattice, name: str | None = None) -> FiniteLattice:
    return _finish(name if name is not None else f"dual({L.name})", L.elements, L.up)


def relabel(L: FiniteLattice, mapping: dict[str, str], name: str | None = None) -> FiniteLattice:
    """Rename elements; element order is preserved."""
    new = [mapping.get(x, x) for x in L.elements]
    return validate_lattice(new, [(mapping.get(a, a), mapping.get(b, b)) for a, b in L.covers],
                            L.name if name is None else name)


def sublattice(L: FiniteLattice, keep: Iterable[str], name: str = "") -> FiniteLattice:
    """Induced order on a subset, kept in ``L``'s element order."""
    keep_set = set(keep)
    for x in keep_set:
        L.idx(x)
    idx = [i for i in range(L.n) if L.elements[i] in keep_set]
    return from_order([L.elements[i] for i in idx], lambda a, b: L.le(idx[a], idx[b]), name)


# -- element classification ----------------------------------------------

@dataclass(frozen=True)
class ElementClassification:
    element: str
    lower_covers: tuple[str, ...]
    upper_covers: tuple[str, ...]
    join_irreducible: bool
    meet_irreducible: bool

    @property
    def doubly_irreducible(self) -> bool:
        return self.join_irreducible and self.meet_irreducible


def classify(L: FiniteLattice, x: str) -> ElementClassification:
    i = L.idx(x)
    return ElementClassification(
        element=x,
        lower_covers=L.names(L.lower[i]),
        upper_covers=L.names(L.upper[i]),
        join_irreducible=len(L.lower[i]) == 1,
        meet_irreducible=len(L.upper[i]) == 1,
    )


def is_doubly_irreducible(L: FiniteLattice, i: int) -> bool:
    # 0 has no lower cover and 1 has no upper cover, so both are excluded
    return len(L.lower[i]) == 1 and len(L.upper[i]) == 1


def principal_ideal(L: FiniteLattice, x: str) -> frozenset[str]:
    return frozenset(L.names(L.down[L.idx(x)]))


def principal_filter(L: FiniteLattice, x: str) -> frozenset[str]:
    return frozenset(L.names(L.up[L.idx(x)]))


def comparable(L: FiniteLattice, i: int, j: int) -> bool:
    return bool((L.down[j] | L.up[j]) >> i & 1)


def is_antichain(L: FiniteLattice, xs: Iterable[str]) -> bool:
    idx = [L.idx(x) for x in xs]
    if len(set(idx)) != len(idx):
        return False
    return not any(comparable(L, i, j) for i, j in combinations(idx, 2))


def antichains(L: FiniteLattice, k: int) -> list[tuple[str, ...]]:
    """All k-element antichains, in lexicographic element order."""
    if k < 0:
        return []
    out = []
    for combo in combinations(range(L.n), k):
        if not any(comparable(L, i, j) for i, j in combinations(combo, 2)):
            out.append(L.names(combo))
    return out


# -- isomorphism ------------------------------------------------------------

def element_invariants(L: FiniteLattice) -> tuple[tuple[int, ...], ...]:
    h, d = L.height, L.depth
    return tuple(
        (h[i], d[i], len(L.lower[i]), len(L.upper[i]),
         bin(L.down[i]).count("1"), bin(L.up[i]).count("1"))
        for i in range(L.n)
    )


def invariant_signature(L: FiniteLattice) -> tuple:
    """An isomorphism invariant; equal signatures are necessary, not sufficient."""
    inv = element_invariants(L)
    # one round of refinement: each element also sees its covers' invariants
    refined = sorted(
        (inv[i], tuple(sorted(inv[j] for j in L.lower[i])), tuple(sorted(inv[j] for j in L.upper[i])))
        for i in range(L.n)
    )
    return (L.n, tuple(refined))


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> dict[str, str] | None:
    """Return an order isomorphism ``L1 -> L2`` as a name mapping, or None."""
    if L1.n != L2.n:
        return None
    inv1, inv2 = element_invariants(L1), element_invariants(L2)
    if sorted(inv1) != sorted(inv2):
        return None
    n = L1.n
    order = sorted(range(n), key=lambda i: (L1.height[i], i))
    cands = [[j for j in range(n) if inv2[j] == inv1[i]] for i in range(n)]
    image = [-1] * n
    used = [False] * n

    def extend(pos):
        if pos == n:
            return True
        i = order[pos]
        for j in cands[i]:
            if used[j]:
                continue
            ok = True
            for q in range(pos):
                k = order[q]
                m = image[k]
                if L1.le(i, k) != L2.le(j, m) or L1.le(k, i) != L2.le(m, j):
                    ok = False
                    break
            if ok:
                image[i] = j
                used[j] = True
                if extend(pos + 1):
                    return True
                used[j] = False
                image[i] = -1
        return False

    if not extend(0):
        return None
    return {L1.elements[i]: L2.elements[image[i]] for i in range(n)}
