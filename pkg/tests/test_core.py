import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdlattice import catalog
from sdlattice.core import (
    antichains,
    classify,
    dual,
    from_order,
    invariant_signature,
    is_antichain,
    is_isomorphic,
    principal_filter,
    principal_ideal,
    relabel,
    sublattice,
    validate_lattice,
)
from sdlattice.errors import (
    CycleDetected,
    DuplicateElement,
    LatticeError,
    NotALattice,
    UnknownElement,
)

N5_COVERS = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]

SMALL = catalog.corpus(6)
lattices = st.sampled_from(SMALL)


def test_n5_from_covers():
    L = validate_lattice(["0", "a", "b", "c", "1"], N5_COVERS, name="N5")
    assert L.n == 5
    assert L.zero == "0" and L.one == "1"
    assert L.join("a", "c") == "1"
    assert L.meet("b", "c") == "0"
    assert set(L.covers) == set(N5_COVERS)


def test_two_minimal_upper_bounds():
    with pytest.raises(NotALattice) as exc:
        validate_lattice(["p", "q", "x", "y"],
                         [("p", "x"), ("p", "y"), ("q", "x"), ("q", "y")])
    assert exc.value.pair == ("p", "q")
    assert exc.value.missing == "join"


def test_b2_meet_table():
    L = validate_lattice(["0", "p", "q", "1"], [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])
    assert L.meet("p", "q") == "0"
    assert L.join("p", "q") == "1"


def test_validation_errors():
    with pytest.raises(DuplicateElement):
        validate_lattice(["0", "0"], [])
    with pytest.raises(UnknownElement):
        validate_lattice(["0", "1"], [("0", "2")])
    with pytest.raises(CycleDetected):
        validate_lattice(["0", "a", "b", "1"],
                         [("0", "a"), ("a", "b"), ("b", "a"), ("b", "1")])


def test_redundant_covers_are_reduced():
    L = validate_lattice(["0", "a", "1"], [("0", "a"), ("a", "1"), ("0", "1")])
    assert set(L.covers) == {("0", "a"), ("a", "1")}


def test_from_order_rejects_non_transitive():
    rel = {(0, 1), (1, 2)}
    with pytest.raises(LatticeError):
        from_order(["0", "a", "1"], lambda i, j: i == j or (i, j) in rel)


def test_classify(N5, B2):
    assert classify(N5, "a").doubly_irreducible
    assert not classify(B2, "0").join_irreducible
    assert not classify(B2, "1").meet_irreducible
    assert classify(B2, "p").doubly_irreducible


def test_principal_ideal_and_filter(N5, B2):
    assert principal_ideal(N5, "a") == {"0", "a"}
    assert principal_filter(catalog.chain(4), "b") == {"b", "1"}
    assert principal_ideal(B2, "1") == set(B2.elements)
    with pytest.raises(UnknownElement):
        principal_ideal(N5, "zz")


def _pairs_by_scan(L):
    """Exhaustive incomparable-pair scan, independent of antichains()."""
    out = set()
    for x in L.elements:
        for y in L.elements:
            if x != y and not L.leq(x, y) and not L.leq(y, x):
                out.add(frozenset((x, y)))
    return out


def test_antichains(N5, B2):
    assert antichains(B2, 2) == [("p", "q")]
    assert antichains(catalog.chain(5), 2) == []
    assert {frozenset(p) for p in antichains(N5, 2)} == {frozenset("ac"), frozenset("bc")}
    assert antichains(N5, 0) == [()]


@pytest.mark.parametrize("L", SMALL, ids=lambda L: L.name)
def test_antichain_pairs_match_scan(L):
    assert {frozenset(p) for p in antichains(L, 2)} == _pairs_by_scan(L)
    assert all(is_antichain(L, p) for p in antichains(L, 3))


def test_isomorphism_examples(N5, M3):
    R = relabel(N5, {"0": "z", "a": "y", "b": "x", "c": "w", "1": "v"})
    m = is_isomorphic(N5, R)
    assert m is not None
    assert all(N5.leq(x, y) == R.leq(m[x], m[y]) for x in N5.elements for y in N5.elements)
    assert is_isomorphic(N5, M3) is None
    assert is_isomorphic(catalog.boolean(3), catalog.chain(8)) is None


def test_isomorphism_is_deterministic(N5):
    R = relabel(N5, {x: x.upper() for x in N5.elements})
    assert is_isomorphic(N5, R) == is_isomorphic(N5, R)


def test_sublattice(N5):
    S = sublattice(N5, ["0", "c", "1"])
    assert S.n == 3 and S.leq("c", "1")


# -- properties ----------------------------------------------------------------

@given(lattices, st.data())
def test_absorption_and_bounds(L, data):
    x = data.draw(st.sampled_from(L.elements))
    y = data.draw(st.sampled_from(L.elements))
    m, j = L.meet(x, y), L.join(x, y)
    assert L.leq(m, x) and L.leq(x, j)
    assert L.meet(x, L.join(x, y)) == x
    assert L.join(x, L.meet(x, y)) == x


@given(lattices)
def test_cover_round_trip(L):
    again = validate_lattice(L.elements, L.covers, name=L.name)
    assert again == L
    assert set(again.covers) == set(L.covers)


@settings(max_examples=60)
@given(lattices, st.randoms(use_true_random=False))
def test_relabeling_is_isomorphic(L, rnd):
    names = list(L.elements)
    shuffled = names[:]
    rnd.shuffle(shuffled)
    R = relabel(L, {x: "v" + y for x, y in zip(names, shuffled)})
    assert invariant_signature(R) == invariant_signature(L)
    m = is_isomorphic(L, R)
    assert m is not None
    assert all(L.leq(x, y) == R.leq(m[x], m[y]) for x in names for y in names)


@given(lattices)
def test_classification_invariants(L):
    for x in L.elements:
        c = classify(L, x)
        if x == L.zero:
            assert not c.join_irreducible
        if x == L.one:
            assert not c.meet_irreducible
        lower = [y for y, z in L.covers if z == x]
        if x != L.zero:
            assert c.join_irreducible == (len(lower) == 1)


@given(lattices)
def test_dual_is_involution(L):
    assert dual(dual(L)) == L
    D = dual(L)
    assert all(L.meet(x, y) == D.join(x, y) for x in L.elements for y in L.elements)
