from fractions import Fraction

import pytest

from voa.root_system import (
    RankError,
    RootIndex,
    Weight,
    all_roots,
    check_rank,
    highest_root,
    is_dominant_integral,
    pairing,
    positive_roots,
    root_weight,
    simple_roots,
    sum_weights,
    weyl_vector,
)


def test_simple_and_highest_roots():
    assert simple_roots(2) == [RootIndex(1, 2), RootIndex(2, 3)]
    assert highest_root(2) == RootIndex(1, 3)
    roots = simple_roots(4)
    assert len(roots) == 4
    assert roots[-1] == RootIndex(4, 5)


@pytest.mark.parametrize("bad", [0, -2, 1, 3, 5, True])
def test_rank_must_be_even_and_positive(bad):
    with pytest.raises(RankError):
        check_rank(bad)
    with pytest.raises(RankError):
        simple_roots(bad)


def test_root_index_validation_and_negation():
    with pytest.raises(RankError):
        RootIndex(2, 2)
    alpha = RootIndex(1, 3)
    assert alpha.is_positive
    assert alpha.negate() == RootIndex(3, 1)
    assert not alpha.negate().is_positive
    assert alpha.height == 2
    assert alpha.negate().height == -2
    with pytest.raises(RankError):
        RootIndex(1, 4).check_rank(2)


def test_root_counts():
    for l in (2, 4, 6):
        assert len(positive_roots(l)) == l * (l + 1) // 2
        assert len(all_roots(l)) == l * (l + 1)


def test_pairing_sums_coordinates():
    mu = Weight(4, (1, Fraction(1, 2), -3, 2))
    assert pairing(mu, RootIndex(2, 4)) == Fraction(-5, 2)
    assert pairing(mu, RootIndex(4, 2)) == Fraction(5, 2)
    assert pairing(weyl_vector(2), highest_root(2)) == 2
    assert pairing(weyl_vector(4), RootIndex(5, 1)) == -4


def test_root_weight_rows_of_cartan_matrix():
    assert root_weight(2, RootIndex(1, 2)).coords == (2, -1)
    assert root_weight(2, RootIndex(2, 3)).coords == (-1, 2)
    assert root_weight(2, highest_root(2)).coords == (1, 1)
    assert root_weight(4, highest_root(4)).coords == (1, 0, 0, 1)
    for l in (2, 4):
        for alpha in all_roots(l):
            # (α, α) = 2
            assert pairing(root_weight(l, alpha), alpha) == 2


def test_coroot_coordinates():
    assert RootIndex(1, 3).coroot_coordinates(2) == (1, 1)
    assert RootIndex(3, 1).coroot_coordinates(2) == (-1, -1)
    assert RootIndex(2, 4).coroot_coordinates(4) == (0, 1, 1, 0)


def test_weight_arithmetic_and_rendering():
    l = 2
    w = Weight.fundamental(l, 1).scale(Fraction(-3, 2))
    assert str(w) == "-3/2*w1"
    assert str(Weight.zero(l)) == "0"
    assert w.support() == (1,)
    assert (w - w).is_zero()
    assert -w == Weight(l, (Fraction(3, 2), 0))
    assert Weight.from_support(4, {2: 1, 4: Fraction(1, 2)}).coords == (0, 1, 0, Fraction(1, 2))
    assert sum_weights(l, [Weight.fundamental(l, 1), Weight.fundamental(l, 2)]) == weyl_vector(l)
    with pytest.raises(RankError):
        Weight(2, (1, 2, 3))
    with pytest.raises(RankError):
        Weight.zero(2) + Weight.zero(4)


def test_dominant_integral():
    assert is_dominant_integral(weyl_vector(4))
    assert is_dominant_integral(Weight.zero(2))
    assert not is_dominant_integral(Weight(2, (Fraction(1, 2), 0)))
    assert not is_dominant_integral(Weight(2, (-1, 0)))
