"""Semidistributivity checks.

Two independent routes are provided.  :func:`check_sd_direct` scans all
triples against the defining implications and is treated as ground truth;
:func:`check_meet_sd_ideals` and :func:`check_join_sd_filters` test the
ideal (filter) criterion, which must agree with it on every lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import FiniteLattice, _bits


@dataclass(frozen=True)
class SdReport:
    meet_sd: bool
    join_sd: bool
    meet_witness: tuple[str, str, str] | None = None
    join_witness: tuple[str, str, str] | None = None

    @property
    def semidistributive(self) -> bool:
        return self.meet_sd and self.join_sd

    @property
    def witness(self):
        """First failing triple with the side it violates, if any."""
        if self.meet_witness is not None:
            return ("meet", self.meet_witness)
        if self.join_witness is not None:
            return ("join", self.join_witness)
        return None


def _meet_failure(L: FiniteLattice, x: int, y: int, z: int) -> bool:
    mt, jn = L.mt, L.jn
    return mt[x][y] == mt[x][z] and mt[x][jn[y][z]] != mt[x][y]


def _join_failure(L: FiniteLattice, x: int, y: int, z: int) -> bool:
    mt, jn = L.mt, L.jn
    return jn[x][y] == jn[x][z] and jn[x][mt[y][z]] != jn[x][y]


def _first_failure(L, test):
    for x in range(L.n):
        for y, z in combinations(range(L.n), 2):
            if test(L, x, y, z):
                return L.elements[x], L.elements[y], L.elements[z]
    return None


def check_sd_direct(L: FiniteLattice) -> SdReport:
    mw = _first_failure(L, _meet_failure)
    jw = _first_failure(L, _join_failure)
    return SdReport(mw is None, jw is None, mw, jw)


def is_semidistributive(L: FiniteLattice) -> bool:
    return check_sd_direct(L).semidistributive


def sd_violations(L: FiniteLattice) -> list[tuple[str, tuple[str, str, str]]]:
    """Every failing triple ``(x, {y, z})`` on both sides."""
    out = []
    for side, test in (("meet", _meet_failure), ("join", _join_failure)):
        for x in range(L.n):
            for y, z in combinations(range(L.n), 2):
                if test(L, x, y, z):
                    out.append((side, (L.elements[x], L.elements[y], L.elements[z])))
    return out


def is_distributive(L: FiniteLattice) -> bool:
    """Join-irreducibles below ``x ∨ y`` are exactly those below ``x`` or ``y``.

    That makes ``x ↦ ↓x ∩ J(L)`` a lattice embedding into a powerset, and
    it fails as soon as some join-irreducible is not join-prime.
    """
    jirr = 0
    for i in range(L.n):
        if len(L.lower[i]) == 1:
            jirr |= 1 << i
    below = [d & jirr for d in L.down]
    jn = L.jn
    return all(
        below[jn[x][y]] == below[x] | below[y]
        for x in range(L.n) for y in range(x + 1, L.n)
    )


@dataclass(frozen=True)
class IdealWitness:
    """The set ``{x : v ∧ x = u}`` for ``u < v`` (or its dual for ``u > v``)."""

    u: str
    v: str
    set: frozenset[str]
    failure: tuple[str, str] | None = field(default=None)


def _closure_witness(L, u, v, table, member, below):
    """Shared body of the ideal and filter checks.

    ``table`` is the lattice operation the set must be closed under
    (join for ideals, meet for filters) and ``below(a, b)`` is the order
    used for the downward (upward) closure inside the principal filter
    (ideal) of ``u``.
    """
    members = [x for x in range(L.n) if member(x)]
    mask = 0
    for x in members:
        mask |= 1 << x
    failure = None
    for x in members:
        for y in range(L.n):
            # downward step inside the interval above u (dually below u)
            if below(u, y) and below(y, x) and not mask >> y & 1:
                failure = (L.elements[x], L.elements[y])
                break
        if failure:
            break
    if failure is None:
        for x, y in combinations(members, 2):
            if not mask >> table[x][y] & 1:
                failure = (L.elements[x], L.elements[y])
                break
    return IdealWitness(L.elements[u], L.elements[v], frozenset(L.names(mask)), failure)


def meet_ideal(L: FiniteLattice, u: str, v: str) -> IdealWitness:
    """``I_{u,v} = {x : v ∧ x = u}``, checked for being an ideal of ``↑u``."""
    ui, vi = L.idx(u), L.idx(v)
    return _closure_witness(L, ui, vi, L.jn, lambda x: L.mt[vi][x] == ui, L.le)


def join_filter(L: FiniteLattice, u: str, v: str) -> IdealWitness:
    """``F_{u,v} = {x : v ∨ x = u}``, checked for being a filter of ``↓u``."""
    ui, vi = L.idx(u), L.idx(v)
    return _closure_witness(L, ui, vi, L.mt, lambda x: L.jn[vi][x] == ui,
                            lambda a, b: L.le(b, a))


def check_meet_sd_ideals(L: FiniteLattice) -> tuple[bool, list[IdealWitness]]:
    """Run the ideal test over all pairs ``u < v``.

    Returns every witness examined; on failure the scan stops and the last
    witness carries the offending pair.
    """
    seen = []
    for v in range(L.n):
        for u in _bits(L.down[v] & ~(1 << v)):
            w = meet_ideal(L, L.elements[u], L.elements[v])
            seen.append(w)
            if w.failure is not None:
                return False, seen
    return True, seen


def check_join_sd_filters(L: FiniteLattice) -> tuple[bool, list[IdealWitness]]:
    seen = []
    for v in range(L.n):
        for u in _bits(L.up[v] & ~(1 << v)):
            w = join_filter(L, L.elements[u], L.elements[v])
            seen.append(w)
            if w.failure is not None:
                return False, seen
    return True, seen
