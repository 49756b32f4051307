import pytest
from hypothesis import given, settings, strategies as st

from yrqsym.bijections import f_inverse, f_map, h_inverse, h_map, phi, phi_tilde, rho, rho_inverse
from yrqsym.compositions import compositions_of, partitions_of, shape, conjugate
from yrqsym.tableaux import Filling, Kind, SkewShape, enumerate_fillings, is_valid, standardize

pic = Filling.from_picture


def test_rho_example():
    t = pic(Kind.ROW_STRICT_SSYT, [[6], [2, 4, 5, 7], [1, 3, 5, 6], [1, 2, 3, 4, 6]])
    out = rho(t)
    assert out == pic(Kind.SSYRT, [[6], [2, 3, 5, 6], [1, 2, 3, 4, 6], [1, 4, 5, 7]])
    assert out.outer == (4, 5, 4, 1)
    assert rho_inverse(out) == t


def test_rho_single_column():
    t = Filling.straight(Kind.ROW_STRICT_SSYT, [[1], [1], [2], [3]])
    out = rho(t)
    assert out.outer == t.outer
    # first column weakly decreasing from top to bottom, read bottom-up here
    assert [r[0] for r in out.rows] == [1, 1, 2, 3]


@pytest.mark.parametrize("n", range(1, 6))
def test_rho_is_a_weight_preserving_bijection(n):
    for lam in partitions_of(n):
        sources = enumerate_fillings(Kind.ROW_STRICT_SSYT, lam, n)
        images = {rho(t) for t in sources}
        assert len(images) == len(sources)
        targets = {t for a in compositions_of(n) if shape(a) == lam
                   for t in enumerate_fillings(Kind.SSYRT, a, n)}
        assert images == targets
        for t in sources:
            assert rho(t).weight_vector(n) == t.weight_vector(n)
            assert rho_inverse(rho(t)) == t


@pytest.mark.parametrize("n", range(1, 5))
def test_rho_commutes_with_standardization(n):
    for lam in partitions_of(n):
        for t in enumerate_fillings(Kind.ROW_STRICT_SSYT, lam, n):
            assert rho(standardize(t)) == standardize(rho(t))


def test_f_example():
    t = pic(Kind.SSRRT, [[2], [3, 2, 1], [3, 2], [4, 3, 2], [4, 3]])
    out = f_map(t, 4)
    assert out == pic(Kind.SSYRT, [[3], [2, 3, 4], [2, 3], [1, 2, 3], [1, 2]])
    assert t.outer == (1, 3, 2, 3, 2) and out.outer == (2, 3, 2, 3, 1)
    assert t.weight_vector(4) == (1, 4, 4, 2)
    assert out.weight_vector(4) == (2, 4, 4, 1)


def test_f_small_and_errors():
    cell = Filling.straight(Kind.SSRRT, [[1]])
    assert f_map(cell, 1).rows == ((1,),)
    with pytest.raises(ValueError):
        f_map(Filling.straight(Kind.SSRRT, [[3]]), 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_f_is_an_involution(n):
    for alpha in compositions_of(n):
        for t in enumerate_fillings(Kind.SSRRT, alpha, n):
            image = f_map(t, n)
            assert is_valid(image) and image.kind is Kind.SSYRT
            assert image.outer == alpha[::-1]
            assert f_inverse(image, n) == t


def test_h_example():
    s = pic(Kind.SSYT, [[1, 4], ["*", 3, 4], ["*", "*", 2], ["*", "*", 1, 1]])
    out = h_map(s)
    assert out == pic(Kind.SSYRT, [[1, 2, 3, 4], [1], ["*", "*", "*", 1], ["*", "*", 4]])
    assert out.inner == (2, 3, 0, 0)
    assert h_inverse(out) == s


def test_h_on_straight_row():
    s = Filling.straight(Kind.SSYT, [[1, 1, 2]])
    out = h_map(s)
    transposed = Filling.straight(Kind.ROW_STRICT_SSYT, [[1], [1], [2]])
    assert out == rho(transposed)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(lam, mu) for n in range(2, 7) for lam in partitions_of(n)
                        for m in range(n) for mu in partitions_of(m)
                        if len(mu) <= len(lam) and all(b <= a for a, b in zip(lam, mu))]))
def test_h_round_trip(pair):
    lam, mu = pair
    for s in enumerate_fillings(Kind.SSYT, SkewShape(conjugate(lam), conjugate(mu)), 3):
        t = h_map(s)
        assert is_valid(t)
        assert shape(t.outer) == lam
        assert h_inverse(t) == s


def test_phi_example():
    t = pic(Kind.SSRCT, [[4, 2, 1], ["*", "*", 4, 4], ["*", "*", 3], ["*", 1]])
    assert phi(t) == pic(Kind.SSRRT, [[4, 3, 2, 1], [4], ["*", "*", "*", 4], ["*", "*", 1]])
    u = pic(Kind.SSYCT, [[1, 3, 4], ["*", "*", 1, 1], ["*", "*", 2], ["*", 4]])
    assert f_map(t, 4) == u
    assert phi_tilde(u) == pic(Kind.SSYRT, [[1, 2, 3, 4], [1], ["*", "*", "*", 1], ["*", "*", 4]])
    assert f_map(phi(t), 4) == phi_tilde(u)


def test_phi_single_cell():
    assert phi(Filling.straight(Kind.SSRCT, [[2]])).rows == ((2,),)
    assert phi_tilde(Filling.straight(Kind.SSYCT, [[2]])).rows == ((2,),)


@pytest.mark.parametrize("n", range(1, 5))
def test_phi_conjugates_the_shape(n):
    for alpha in compositions_of(n):
        for t in enumerate_fillings(Kind.SSRCT, alpha, n):
            out = phi(t)
            assert is_valid(out)
            assert shape(out.outer) == conjugate(shape(alpha))
            assert out.weight_vector(n) == t.weight_vector(n)
            assert f_map(out, n) == phi_tilde(f_map(t, n))


def test_wrong_kind_rejected():
    with pytest.raises(ValueError):
        rho(Filling.straight(Kind.SSYRT, [[1]]))
    with pytest.raises(ValueError):
        phi(Filling.straight(Kind.SSYCT, [[1]]))
