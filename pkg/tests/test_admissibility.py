from fractions import Fraction

import pytest

from voa import admissibility
from voa.admissibility import (
    WitnessError,
    check_admissible,
    coroot_rank,
    expected_simple_coroots,
    is_violation,
    lambda_S,
    pi_check,
    slope_certificate,
    witness_coroots,
)
from voa.affine_lie import AffineWeight, RealRoot, affine_pairing, affine_rho
from voa.classification import SupportSet, all_supports
from voa.models import Outcome
from voa.root_system import RootIndex, Weight


def test_lambda_S():
    assert lambda_S(2, SupportSet(2)) == AffineWeight(Fraction(-3, 2), Weight.zero(2))
    lam = lambda_S(2, SupportSet(2, (1,)))
    assert lam.level == Fraction(-3, 2)
    assert lam.finite == Weight(2, (Fraction(-3, 2), 0))
    for l in (2, 4):
        assert (lambda_S(l, SupportSet(l)) + affine_rho(l)).level == Fraction(l + 1, 2)


def test_violation_predicate():
    assert is_violation(Fraction(0))
    assert is_violation(Fraction(-3))
    assert not is_violation(Fraction(-1, 2))
    assert not is_violation(Fraction(1))


def test_vacuum_weight_is_admissible_l2():
    report = check_admissible(2, SupportSet(2), 50)
    assert report.violations == []
    assert report.rank_of_span == 3
    assert report.verdict is Outcome.PASS
    assert RealRoot(RootIndex(3, 1), 2) in report.integer_paired
    assert RealRoot(RootIndex(3, 1), 1) not in report.integer_paired


@pytest.mark.parametrize("l", [2, 4])
def test_all_supports_are_admissible(l):
    for support in all_supports(l):
        report = check_admissible(l, support, 50)
        assert report.verdict is Outcome.PASS, (str(support), report.violations[:3])


def test_rank_is_monotone_in_cutoff():
    ranks = [check_admissible(2, SupportSet(2, (1,)), m).rank_of_span for m in range(2, 7)]
    assert ranks == sorted(ranks)
    assert max(ranks) <= 3


def test_cutoff_below_two_is_rejected():
    with pytest.raises(ValueError):
        check_admissible(2, SupportSet(2), 1)


def test_slope_certificate():
    certificate = slope_certificate(lambda_S(2, SupportSet(2)))
    assert certificate.slope == Fraction(3, 2)
    # −θ + mδ：−2 + 3m/2 ≤ 0 只在 m = 1
    assert certificate.last_nonpositive_m[RootIndex(3, 1)] == 1
    assert certificate.last_nonpositive_m[RootIndex(2, 1)] is None
    assert certificate.last_nonpositive_m[RootIndex(1, 2)] is None
    assert certificate.bound == 1
    assert certificate.covers(2)


def test_pi_check_l2():
    report = pi_check(2, 10)
    expected = {RealRoot(RootIndex(3, 1), 2), RealRoot(RootIndex(1, 2), 0), RealRoot(RootIndex(2, 3), 0)}
    assert set(report.minimal) == expected
    assert set(report.expected) == expected
    assert report.uncertified == []
    assert report.outcome is Outcome.PASS
    assert all(value == 1 for value in report.shifted_pairings.values())
    assert RealRoot(RootIndex(3, 1), 1) not in report.minimal


@pytest.mark.parametrize("max_m", [6, 10])
def test_pi_check_l4(max_m):
    report = pi_check(4, max_m)
    assert set(report.minimal) == set(expected_simple_coroots(4))
    assert report.outcome is Outcome.PASS


@pytest.mark.slow
def test_pi_check_l6():
    report = pi_check(6, 10)
    assert set(report.minimal) == set(expected_simple_coroots(6))
    assert report.outcome is Outcome.PASS
    assert all(value == 1 for value in report.shifted_pairings.values())


def test_pi_check_small_cutoff_is_inconclusive():
    assert pi_check(2, 1).outcome is Outcome.INCONCLUSIVE


def test_witness_coroots():
    assert witness_coroots(2, SupportSet(2)) == [RealRoot(RootIndex(1, 2), 0), RealRoot(RootIndex(2, 3), 0)]
    s1 = SupportSet(2, (1,))
    witnesses = witness_coroots(2, s1)
    assert witnesses == [RealRoot(RootIndex(2, 1), 1), RealRoot(RootIndex(2, 3), 0)]
    assert affine_pairing(lambda_S(2, s1), witnesses[0]) == 0
    s12 = SupportSet(2, (1, 2))
    witnesses = witness_coroots(2, s12)
    assert RealRoot(RootIndex(1, 3), 0) in witnesses
    assert affine_pairing(lambda_S(2, s12), RealRoot(RootIndex(1, 3), 0)) == -1
    for l in (2, 4):
        for support in all_supports(l):
            roots = witness_coroots(l, support)
            assert len(roots) == support.k + max(support.k - 1, 0) + (l - support.k)


def test_witness_failure_is_structured(monkeypatch):
    monkeypatch.setattr(admissibility, "lambda_S", lambda l, s: AffineWeight(Fraction(1, 3), Weight.zero(l)))
    with pytest.raises(WitnessError):
        witness_coroots(2, SupportSet(2, (1,)))


def test_coroot_rank():
    roots = [RealRoot(RootIndex(1, 2), 0), RealRoot(RootIndex(2, 3), 0), RealRoot(RootIndex(1, 3), 0)]
    assert coroot_rank(roots, 2) == 2
    assert coroot_rank(roots + [RealRoot(RootIndex(3, 1), 2)], 2) == 3
    assert coroot_rank([], 2) == 0
