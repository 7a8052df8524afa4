"""Named lattices, combinators, and the small-lattice enumerator."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from string import ascii_lowercase
from typing import Callable

from .core import (
    FiniteLattice,
    _bits,
    from_order,
    invariant_signature,
    is_isomorphic,
    validate_lattice,
)
from .errors import SizeLimit

MAX_BOOLEAN = 10
MAX_ENUMERATE = 8

_ATOMS = "pqrstuvwxy"


def _inner_names(k: int) -> list[str]:
    if k <= 26:
        return list(ascii_lowercase[:k])
    return [f"c{i}" for i in range(1, k + 1)]


def boolean(n: int) -> FiniteLattice:
    """``B_n``: subsets of ``n`` atoms.  Bottom is ``0``, top ``1``, atoms
    ``p, q, r, ...`` and other elements are the concatenated atom names."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > MAX_BOOLEAN:
        raise SizeLimit(f"boolean({n}) would have {2 ** n} elements")
    full = (1 << n) - 1
    masks = sorted(range(1 << n), key=lambda m: (bin(m).count("1"), [-(m >> i & 1) for i in range(n)]))

    def label(m):
        if m == 0:
            return "0"
        if m == full:
            return "1"
        return "".join(_ATOMS[i] for i in range(n) if m >> i & 1)

    return from_order([label(m) for m in masks],
                      lambda i, j: masks[i] & ~masks[j] == 0, name=f"B{n}")


def chain(n: int) -> FiniteLattice:
    """The ``n``-element chain ``0 < a < b < ... < 1``."""
    if n < 1:
        raise ValueError("a chain needs at least one element")
    names = ["0"] if n == 1 else ["0", *_inner_names(n - 2), "1"]
    return validate_lattice(names, list(zip(names, names[1:])), name=f"chain{n}")


def n5() -> FiniteLattice:
    return validate_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        name="N5",
    )


def m3() -> FiniteLattice:
    return validate_lattice(
        ["0", "x", "y", "z", "1"],
        [("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")],
        name="M3",
    )


def n6() -> FiniteLattice:
    return validate_lattice(*_EXTERNAL["N6"], name="N6")


def l9() -> FiniteLattice:
    return validate_lattice(*_EXTERNAL["L9"], name="L9")


def l10() -> FiniteLattice:
    return validate_lattice(*_EXTERNAL["L10"], name="L10")


# Covers for the externally referenced lattices.  The published diagrams
# were not available offline; each entry is the smallest subdirectly
# irreducible semidistributive lattice with an isolated interval of its
# kind (N6 is self-dual, L9 and L10 are mutually dual).  They are gated by
# tests for semidistributivity and a nonempty isolated-interval list.
_EXTERNAL: dict[str, tuple[list[str], list[tuple[str, str]]]] = {
    "N6": (
        ["0", "a", "b", "c", "d", "e", "f", "1"],
        [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "1"),
         ("c", "e"), ("d", "f"), ("e", "f"), ("f", "1")],
    ),
    "L9": (
        ["0", "a", "b", "c", "d", "e", "f", "g", "1"],
        [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "f"),
         ("c", "e"), ("d", "f"), ("d", "g"), ("e", "g"), ("f", "1"), ("g", "1")],
    ),
    "L10": (
        ["0", "a", "b", "c", "d", "e", "f", "g", "1"],
        [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "d"),
         ("b", "e"), ("c", "f"), ("d", "g"), ("e", "1"), ("f", "g"), ("g", "1")],
    ),
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    constructor: Callable[[], FiniteLattice]
    provenance: str = "standard"
    semidistributive: bool | None = None
    isolated_interval: bool | None = None


CATALOG: dict[str, CatalogEntry] = {
    "n5": CatalogEntry("N5", n5, semidistributive=True, isolated_interval=True),
    "m3": CatalogEntry("M3", m3, semidistributive=False, isolated_interval=False),
    "n6": CatalogEntry("N6", n6, "external-reference", True, True),
    "l9": CatalogEntry("L9", l9, "external-reference", True, True),
    "l10": CatalogEntry("L10", l10, "external-reference", True, True),
}


def lookup(name: str) -> FiniteLattice:
    """Resolve a catalog name: ``n5``, ``m3``, ``n6``, ``l9``, ``l10``,
    ``chainN`` or ``booleanN`` / ``bN``."""
    key = name.lower()
    if key in CATALOG:
        return CATALOG[key].constructor()
    for prefix, build in (("chain", chain), ("boolean", boolean), ("b", boolean)):
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            return build(int(key[len(prefix):]))
    raise KeyError(f"unknown catalog lattice {name!r}")


# -- combinators -------------------------------------------------------------

def _fresh(taken, base):
    name = base
    while name in taken:
        name += "'"
    return name


def add_unit(L: FiniteLattice) -> FiniteLattice:
    """``L⁺``: a new top ``1'`` (primed further if taken)."""
    top = _fresh(set(L.elements), "1'")
    names = list(L.elements) + [top]
    return from_order(names, lambda i, j: j == L.n or (i < L.n and L.le(i, j)),
                      name=f"{L.name}+")


def add_zero(L: FiniteLattice) -> FiniteLattice:
    """``L₊``: a new bottom ``0'``."""
    bot = _fresh(set(L.elements), "0'")
    names = [bot] + list(L.elements)
    return from_order(names, lambda i, j: i == 0 or (j > 0 and L.le(i - 1, j - 1)),
                      name=f"{L.name}_+")


def ordinal_sum(A: FiniteLattice, B: FiniteLattice) -> FiniteLattice:
    """``A ∔ B``: disjoint union with all of ``A`` strictly below all of ``B``.

    When names clash, elements are prefixed with ``l.`` and ``r.``.
    """
    left, right = list(A.elements), list(B.elements)
    if set(left) & set(right):
        left = [f"l.{x}" for x in left]
        right = [f"r.{x}" for x in right]
    m = A.n

    def le(i, j):
        if i < m and j < m:
            return A.le(i, j)
        if i >= m and j >= m:
            return B.le(i - m, j - m)
        return i < m <= j

    return from_order(left + right, le, name=f"{A.name}+{B.name}")


# -- enumeration -------------------------------------------------------------

def _extensions(L: FiniteLattice):
    """Lattices obtained by adding one new maximal element under the top.

    ``L`` minus its top is a finite meet-semilattice with 0; a new maximal
    element may sit over any down-set ``D`` such that ``D ∩ ↓x`` has a
    largest element for every ``x`` (so the meet with it exists).  Adding
    the top back gives a lattice, and every lattice with ``n + 1``
    elements arises this way from one with ``n``.
    """
    body = [i for i in range(L.n) if i != L.top]
    m = len(body)
    pos = {i: k for k, i in enumerate(body)}
    down = []
    for i in body:
        mask = 0
        for j in _bits(L.down[i]):
            mask |= 1 << pos[j]
        down.append(mask)
    for D in range(1, 1 << m):
        if any(D >> k & 1 and down[k] & ~D for k in range(m)):
            continue
        ok = True
        for k in range(m):
            M = D & down[k]
            if not any(down[t] & M == M for t in _bits(M)):
                ok = False
                break
        if not ok:
            continue
        new_down = down + [D | (1 << m)]
        new_down.append((1 << (m + 2)) - 1)

        def le(i, j, nd=new_down):
            return bool(nd[j] >> i & 1)

        yield from_order([str(k) for k in range(m + 2)], le)


def _canonical_names(L: FiniteLattice, name: str) -> FiniteLattice:
    order = sorted(range(L.n), key=lambda i: (L.height[i], -L.depth[i], i))
    inner = _inner_names(L.n - 2)
    names = {}
    for k, i in enumerate(order):
        if i == L.bottom:
            names[i] = "0"
        elif i == L.top:
            names[i] = "1"
        else:
            names[i] = inner.pop(0)
    return from_order([names[i] for i in order],
                      lambda a, b: L.le(order[a], order[b]), name=name)


def _dedupe(candidates) -> list[FiniteLattice]:
    buckets: dict[tuple, list[FiniteLattice]] = {}
    for K in candidates:
        sig = invariant_signature(K)
        reps = buckets.setdefault(sig, [])
        if not any(is_isomorphic(K, R) is not None for R in reps):
            reps.append(K)
    out = []
    for sig in sorted(buckets):
        out.extend(buckets[sig])
    return out


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[FiniteLattice, ...]:
    if n == 1:
        return (chain(1),)
    if n == 2:
        return (chain(2),)
    reps = _dedupe(K for L in _enumerate(n - 1) for K in _extensions(L))
    out, k = [], 0
    for K in reps:
        if K.height[K.top] == n - 1:
            out.append(chain(n))
        else:
            out.append(_canonical_names(K, f"L{n}.{k}"))
            k += 1
    return tuple(out)


def enumerate_lattices(n: int) -> list[FiniteLattice]:
    """One lattice per isomorphism class of ``n``-element lattices."""
    if not 1 <= n <= MAX_ENUMERATE:
        raise SizeLimit(f"enumeration supports 1 <= n <= {MAX_ENUMERATE}, got {n}")
    return list(_enumerate(n))


def corpus(max_size: int, min_size: int = 1) -> list[FiniteLattice]:
    out = []
    for n in range(min_size, max_size + 1):
        out.extend(enumerate_lattices(n))
    return out


# -- naming congruence-lattice shapes ---------------------------------------

@lru_cache(maxsize=None)
def _shapes(size: int) -> tuple[tuple[str, FiniteLattice], ...]:
    out = []
    ks = range(0, 7)
    out += [(f"B_{k}", boolean(k)) for k in ks if 2 ** k == size]
    for k in ks:
        if 2 ** k + 1 == size:
            out.append((f"B_{k}⁺", add_unit(boolean(k))))
            out.append((f"(B_{k})₊", add_zero(boolean(k))))
    out += [(f"B_{k}⁺⁺", add_unit(add_unit(boolean(k)))) for k in ks if 2 ** k + 2 == size]
    out += [(f"B_{k} ∔ B_2", ordinal_sum(boolean(k), boolean(2))) for k in ks if 2 ** k + 4 == size]
    out.append((f"{size}-chain", chain(size)))
    return tuple(out)


def shape_names(L: FiniteLattice) -> list[str]:
    """Every combinator expression from the built-in list isomorphic to ``L``."""
    return [name for name, S in _shapes(L.n) if is_isomorphic(L, S) is not None]


def describe(L: FiniteLattice) -> str:
    """Short human name, e.g. ``B_3``, ``(B_2)₊``, ``B_1 (2-chain)``, ``3-chain``."""
    names = shape_names(L)
    if not names:
        return f"unnamed {L.n}-element lattice"
    boolean_names = [x for x in names if x.startswith("B_") and x[2:].isdigit()]
    chains = [x for x in names if x.endswith("-chain")]
    if boolean_names:
        if chains and L.n > 1:
            return f"{boolean_names[0]} ({chains[0]})"
        return boolean_names[0]
    if chains:
        return chains[0]
    return names[0]


# -- census ------------------------------------------------------------------

@dataclass
class CensusReport:
    max_size: int
    predicate: str
    examined: int = 0
    selected: int = 0
    per_size: dict[int, int] = field(default_factory=dict)
    con_classes: dict[str, int] = field(default_factory=dict)
    three_chain: list[str] = field(default_factory=list)
    simple: list[str] = field(default_factory=list)
    non_distributive_con: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "max_size": self.max_size,
            "predicate": self.predicate,
            "examined": self.examined,
            "selected": self.selected,
            "per_size": {str(k): v for k, v in sorted(self.per_size.items())},
            "con_classes": dict(sorted(self.con_classes.items())),
            "three_chain": self.three_chain,
            "simple": self.simple,
            "non_distributive_con": self.non_distributive_con,
        }


def _predicate(name):
    from .congruence import is_simple
    from .sd import is_distributive, is_semidistributive

    table = {
        "all": lambda L: True,
        "sd": is_semidistributive,
        "sd-simple": lambda L: is_semidistributive(L) and is_simple(L),
        "distributive": is_distributive,
    }
    if callable(name):
        return getattr(name, "__name__", "custom"), name
    if name not in table:
        raise KeyError(f"unknown predicate {name!r}; choose from {sorted(table)}")
    return name, table[name]


def census(max_size: int, predicate="sd") -> CensusReport:
    """Tabulate congruence lattices over all lattices with ``<= max_size``
    elements that satisfy ``predicate`` (a name or a callable)."""
    from .congruence import all_congruences
    from .sd import is_distributive

    if not 1 <= max_size <= MAX_ENUMERATE:
        raise SizeLimit(f"census supports sizes up to {MAX_ENUMERATE}")
    label, pred = _predicate(predicate)
    report = CensusReport(max_size, label)
    three = chain(3)
    for L in corpus(max_size):
        report.examined += 1
        if not pred(L):
            continue
        report.selected += 1
        report.per_size[L.n] = report.per_size.get(L.n, 0) + 1
        con = all_congruences(L)
        C = con.carrier
        key = describe(C)
        report.con_classes[key] = report.con_classes.get(key, 0) + 1
        if is_isomorphic(C, three) is not None:
            report.three_chain.append(L.name)
        if len(con) == 2:
            report.simple.append(L.name)
        if not is_distributive(C):
            report.non_distributive_con.append(L.name)
    return report
