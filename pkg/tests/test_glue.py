import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdlattice import catalog
from sdlattice.congruence import Congruence, all_congruences
from sdlattice.core import is_isomorphic
from sdlattice.errors import NotIsolated, TooSmall
from sdlattice.glue import (
    EMPTY,
    check_glue_sd,
    delete_interval,
    find_isolated_intervals,
    glue,
    is_sublattice_of_k,
    leaking_congruences,
    order_sandwich_holds,
    partition_pqr,
    transfer_congruence,
    verify_con_isomorphism,
)
from sdlattice.sd import check_sd_direct

from oracles import congruences_by_filter


def _pairs(L):
    return [(iv.a, iv.b) for iv in find_isolated_intervals(L)]


def test_isolated_intervals(N5, chain4, B2):
    assert _pairs(N5) == [("a", "b")]
    assert _pairs(chain4) == [("a", "b")]
    assert _pairs(B2) == []


def test_delete_interval(N5, chain4, chain2):
    S = delete_interval(N5, ("a", "b"))
    assert S.elements == ("0", "c", "1")
    assert is_isomorphic(S, catalog.chain(3))
    assert is_isomorphic(delete_interval(chain4, ("a", "b")), chain2)
    assert delete_interval(chain2, ("0", "1")) is EMPTY
    with pytest.raises(TooSmall):
        delete_interval(catalog.chain(1), ("0", "0"))
    with pytest.raises(NotIsolated):
        delete_interval(N5, ("0", "c"))


def test_partition_pqr(N5, chain4):
    assert partition_pqr(N5, ("a", "b")) == (("0",), ("1",), ("c",))
    assert partition_pqr(chain4, ("a", "b")) == (("0",), ("1",), ())
    L = catalog.n6()
    (iv,) = find_isolated_intervals(L)
    assert partition_pqr(L, iv)[2]


def test_glue_with_two_chain_is_identity(N5, chain2):
    ctx = glue(N5, ("a", "b"), chain2)
    assert is_isomorphic(ctx.K, N5)
    assert check_sd_direct(ctx.K).semidistributive
    assert verify_con_isomorphism(ctx).isomorphism


def test_glue_n5_m3(N5, M3):
    ctx = glue(N5, ("a", "b"), M3)
    K = ctx.K
    assert K.n == 8
    for f in ctx.f_elements:
        assert K.join("c", f) == "1" == N5.join("c", "b")
    assert order_sandwich_holds(ctx) and is_sublattice_of_k(ctx)
    sd = check_glue_sd(ctx)
    assert not sd.k_semidistributive and not sd.f_semidistributive
    assert sd.violations and sd.violations_inside_f


def test_glue_chain4_m3_is_ordinal_stack(chain4, M3):
    ctx = glue(chain4, ("a", "b"), M3)
    stack = catalog.ordinal_sum(catalog.ordinal_sum(catalog.chain(1), M3), catalog.chain(1))
    assert ctx.K.n == 7
    assert is_isomorphic(ctx.K, stack)


def test_glue_chain_into_chain_is_sd(chain4):
    ctx = glue(chain4, ("a", "b"), catalog.chain(4))
    assert check_glue_sd(ctx).k_semidistributive


def test_transfer_examples(N5, M3):
    ctx = glue(N5, ("a", "b"), M3)
    con = all_congruences(N5)
    assert transfer_congruence(ctx, con.identity).congruence.is_identity()
    assert transfer_congruence(ctx, con.total).congruence.is_total()
    alpha = Congruence.from_blocks(N5, [["0", "a", "b"], ["c", "1"]])
    t = transfer_congruence(ctx, alpha)
    assert t.is_congruence
    assert set(map(frozenset, t.congruence.blocks)) == {
        frozenset(("0",) + ctx.f_elements), frozenset(("c", "1"))}


def test_n5_m3_con_isomorphism(N5, M3):
    ctx = glue(N5, ("a", "b"), M3)
    r = verify_con_isomorphism(ctx)
    assert r.isomorphism and r.f_simple
    assert (r.con_l, r.con_k) == (5, 5)
    assert is_isomorphic(all_congruences(ctx.K).carrier, catalog.add_zero(catalog.boolean(2)))


def test_chain4_m3_con_sizes_from_oracle(chain4, M3):
    # the partition-filter oracle fixes the true sizes independently
    ctx = glue(chain4, ("a", "b"), M3)
    assert len(congruences_by_filter(chain4)) == 8
    assert len(congruences_by_filter(ctx.K)) == 8
    r = verify_con_isomorphism(ctx)
    assert (r.con_l, r.con_k) == (8, 8)
    assert not r.isomorphism
    assert r.well_defined and r.order_preserving
    assert not r.injective and not r.surjective and not r.order_reflecting
    assert "{0|a|b|1} and {0,a|b|1} both ↦ {0|F.0|F.x|F.y|F.z|F.1|1}" in r.counterexamples
    assert "{0,F.0|F.x|F.y|F.z|F.1|1} is not an image" in r.counterexamples
    assert len(leaking_congruences(chain4, ("a", "b"))) == 3


def test_con_0a_collapses_to_identity(chain4, M3):
    ctx = glue(chain4, ("a", "b"), M3)
    alpha = Congruence.from_blocks(chain4, [["0", "a"], ["b"], ["1"]])
    assert transfer_congruence(ctx, alpha).congruence.is_identity()


def test_f_names_are_prefixed_on_collision(N5, M3):
    ctx = glue(N5, ("a", "b"), M3)
    assert ctx.f_map["0"] == "F.0" and ctx.f_map["x"] == "F.x"


@pytest.mark.parametrize("name", ["n6", "l9", "l10"])
def test_catalog_glue_candidates(name):
    L = catalog.lookup(name)
    assert check_sd_direct(L).semidistributive
    assert find_isolated_intervals(L)


GLUEABLE = [L for L in catalog.corpus(7) if L.n >= 3 and find_isolated_intervals(L)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GLUEABLE), st.sampled_from([catalog.chain(2), catalog.m3(), catalog.chain(3)]),
       st.data())
def test_transfer_is_monotone(L, F, data):
    iv = data.draw(st.sampled_from(find_isolated_intervals(L)))
    ctx = glue(L, iv, F)
    assert order_sandwich_holds(ctx) and is_sublattice_of_k(ctx)
    con = all_congruences(L)
    images = {a.labels: transfer_congruence(ctx, a).congruence for a in con}
    for a in con:
        for b in con:
            if a.refines(b):
                assert images[a.labels].refines(images[b.labels])
