import pytest

from sdlattice import catalog
from sdlattice.core import dual
from sdlattice.sd import (
    check_join_sd_filters,
    check_meet_sd_ideals,
    check_sd_direct,
    is_distributive,
    join_filter,
    meet_ideal,
    sd_violations,
)

from oracles import is_distributive_triples, is_join_sd_triples, is_meet_sd_triples

CORPUS7 = catalog.corpus(7)


def test_m3_meet_witness(M3):
    r = check_sd_direct(M3)
    assert not r.meet_sd and not r.join_sd
    x, y, z = r.meet_witness
    assert {x, y, z} == {"x", "y", "z"}
    assert M3.meet(x, y) == M3.meet(x, z) == "0"
    assert M3.meet(x, M3.join(y, z)) == x
    assert r.witness[0] == "meet"


def test_n5_is_semidistributive(N5):
    r = check_sd_direct(N5)
    assert r.meet_sd and r.join_sd and r.witness is None


@pytest.mark.parametrize("n", range(0, 5))
def test_boolean_is_semidistributive(n):
    assert check_sd_direct(catalog.boolean(n)).semidistributive


def test_meet_ideal_n5(N5):
    w = meet_ideal(N5, "0", "b")
    assert w.set == {"0", "c"}
    assert w.failure is None


def test_meet_ideal_m3_fails(M3):
    w = meet_ideal(M3, "0", "x")
    assert w.set == {"0", "y", "z"}
    assert w.failure == ("y", "z")
    ok, seen = check_meet_sd_ideals(M3)
    assert not ok and seen[-1].failure is not None


def test_two_chain_vacuous(chain2):
    ok, seen = check_meet_sd_ideals(chain2)
    assert ok
    assert [(w.u, w.v, w.set) for w in seen] == [("0", "1", frozenset({"0"}))]


def test_filters(N5, M3):
    assert check_join_sd_filters(N5)[0]
    ok, seen = check_join_sd_filters(M3)
    assert not ok and seen[-1].failure is not None
    assert check_join_sd_filters(catalog.chain(6))[0]
    w = join_filter(N5, "1", "c")
    assert w.set == {"a", "b", "1"} and w.failure is None


@pytest.mark.parametrize("L", CORPUS7, ids=lambda L: L.name)
def test_direct_scan_matches_oracle(L):
    r = check_sd_direct(L)
    assert r.meet_sd == is_meet_sd_triples(L)
    assert r.join_sd == is_join_sd_triples(L)
    assert r.meet_sd == check_meet_sd_ideals(L)[0]
    assert r.join_sd == check_join_sd_filters(L)[0]
    assert r.meet_sd == check_sd_direct(dual(L)).join_sd
    assert is_distributive(L) == is_distributive_triples(L)
    assert bool(sd_violations(L)) == (not r.semidistributive)
