from itertools import product

import pytest
from hypothesis import given, strategies as st

from yrqsym.compositions import (
    COVERS, NEAR_CONCAT, CONCAT, STRICTLY_BELOW, comp_of_subset, complement, composition,
    compositions_of, conjugate, contained, deconcatenations, dominance_leq, format_composition,
    lc_covered_by, lc_relation, near_concat, order_key, parse, partitions_of, rearrangements,
    refinements, refines, saturated_chains, shape, subset_of_comp,
)

compositions = st.lists(st.integers(1, 4), min_size=0, max_size=5).map(tuple)


def brute_compositions(n):
    """Every tuple of positive parts summing to n, by exhaustive product."""
    out = set()
    for k in range(n + 1):
        for parts in product(range(1, n + 1), repeat=k):
            if sum(parts) == n:
                out.add(parts)
    return out


def brute_covers(alpha):
    """The two cover rules applied literally."""
    out = {alpha + (1,)}
    for j in range(len(alpha)):
        if all(alpha[i] != alpha[j] for i in range(j + 1, len(alpha))):
            out.add(alpha[:j] + (alpha[j] + 1,) + alpha[j + 1:])
    return out


def test_subset_to_composition_examples():
    assert comp_of_subset({1, 5}, 7) == (1, 4, 2)
    assert comp_of_subset(set(), 5) == (5,)
    assert comp_of_subset({1, 2, 3}, 4) == (1, 1, 1, 1)


def test_subset_out_of_range():
    with pytest.raises(ValueError):
        comp_of_subset({7}, 7)


def test_complement_examples():
    assert complement((1, 4, 2)) == (2, 1, 1, 2, 1)
    assert complement((4,)) == (1, 1, 1, 1)
    assert complement((1, 1, 2)) == (3, 1)


@pytest.mark.parametrize("n", range(11))
def test_complement_is_involution(n):
    for a in compositions_of(n):
        assert complement(complement(a)) == a


@pytest.mark.parametrize("n", range(8))
def test_compositions_match_brute_force(n):
    got = compositions_of(n)
    assert set(got) == brute_compositions(n)
    assert len(got) == (2 ** (n - 1) if n else 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_covers_match_rules(n):
    for a in compositions_of(n):
        found = {b for b in compositions_of(n + 1) if lc_relation(a, b) == COVERS}
        assert found == brute_covers(a)
        for b in found:
            assert a in lc_covered_by(b)


def test_poset_examples():
    assert lc_relation((1, 2), (1, 2, 1)) == COVERS
    assert lc_relation((1,), (2, 2, 3)) == STRICTLY_BELOW
    chain = [(1,), (1, 1), (1, 2), (1, 2, 1), (1, 2, 2), (1, 2, 3), (2, 2, 3)]
    assert chain in list(saturated_chains((1,), (2, 2, 3)))


def test_containment_does_not_imply_order():
    assert not contained((2,), (1, 2))
    # (1,1) sits inside (2,1) but only its rightmost 1 may grow
    assert contained((1, 1), (2, 1))
    assert lc_relation((1, 1), (2, 1)) != COVERS
    assert (2, 1) not in brute_covers((1, 1))


def test_deconcatenations_example():
    assert deconcatenations((2, 1)) == [
        ((), (2, 1), CONCAT), ((1,), (1, 1), NEAR_CONCAT), ((2,), (1,), CONCAT), ((2, 1), (), CONCAT)]
    assert [(b, g) for b, g, _ in deconcatenations((1,))] == [((), (1,)), ((1,), ())]


@given(compositions)
def test_deconcatenations_rebuild(alpha):
    cuts = deconcatenations(alpha)
    assert len(cuts) == sum(alpha) + 1
    for i, (beta, gamma, how) in enumerate(cuts):
        assert sum(beta) == i
        assert (beta + gamma if how == CONCAT else near_concat(beta, gamma)) == alpha


def test_shape_conjugate_refines():
    assert shape((1, 3, 2, 3, 2)) == (3, 3, 2, 2, 1)
    assert conjugate((3, 3, 2, 1)) == (4, 3, 2)
    assert refines((1, 1, 1), (3,))
    assert not refines((3,), (1, 2))


@pytest.mark.parametrize("n", range(1, 8))
def test_conjugate_matches_cell_transpose(n):
    for lam in partitions_of(n):
        cells = {(j, i) for i, p in enumerate(lam) for j in range(p)}
        rows = [sum(1 for (r, _) in cells if r == k) for k in range(len(cells))]
        assert conjugate(lam) == tuple(r for r in rows if r)
        assert conjugate(conjugate(lam)) == lam


@pytest.mark.parametrize("n", range(1, 7))
def test_refinements_by_partial_sums(n):
    for a in compositions_of(n):
        brute = {b for b in compositions_of(n) if subset_of_comp(a) <= subset_of_comp(b)}
        assert set(refinements(a)) == brute


@pytest.mark.parametrize("n", range(1, 8))
def test_order_key_extends_dominance(n):
    ordered = sorted(partitions_of(n), key=lambda lam: order_key(lam))
    for i, lam in enumerate(ordered):
        for mu in ordered[i + 1:]:
            # anything later in the order never dominates something earlier
            assert not (dominance_leq(lam, mu) and lam != mu)


def test_dominance_needs_equal_weight():
    with pytest.raises(ValueError):
        dominance_leq((2,), (1, 1, 1))


def test_rearrangements():
    assert set(rearrangements((2, 1, 1))) == {(2, 1, 1), (1, 2, 1), (1, 1, 2)}


@given(compositions)
def test_text_round_trip(alpha):
    assert parse(format_composition(alpha)) == alpha


def test_bad_composition():
    with pytest.raises(ValueError):
        composition((2, 0))


@pytest.mark.parametrize("text,want", [("(1,)", (1,)), ("()", ()), ("", ()), (" (2, 3) ", (2, 3)), ("1,2", (1, 2))])
def test_parse_accepts_common_forms(text, want):
    assert parse(text) == want


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse("(1,,2)")
