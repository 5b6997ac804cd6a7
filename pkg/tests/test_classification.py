from fractions import Fraction

import pytest

from voa.classification import (
    ClassificationError,
    SupportSet,
    all_supports,
    elimination_factor,
    mu_S,
    pairwise_relation,
    satisfies_pairwise_relations,
    solve_support,
    solve_system,
    verify_classification,
)
from voa.enveloping import closed_form_polynomial
from voa.models import Outcome
from voa.polynomial import CartanPolynomial
from voa.root_system import Weight


def closed_forms(l):
    return [closed_form_polynomial(l, i) for i in range(1, l + 1)]


def test_support_sets():
    s = SupportSet(4, (1, 3))
    assert s.elements == (1, 3)
    assert s.k == 2
    assert s.complement() == (2, 4)
    assert str(s) == "{1,3}"
    assert SupportSet(2, ()) == SupportSet(2)
    with pytest.raises(ValueError):
        SupportSet(2, (2, 1))
    with pytest.raises(ValueError):
        SupportSet(2, (3,))
    assert len(all_supports(4)) == 16
    assert all_supports(2)[0] == SupportSet(2)


def test_mu_S_examples_l2():
    assert mu_S(2, SupportSet(2)) == Weight.zero(2)
    assert mu_S(2, SupportSet(2, (1,))) == Weight(2, (Fraction(-3, 2), 0))
    assert mu_S(2, SupportSet(2, (2,))) == Weight(2, (0, Fraction(-3, 2)))
    assert mu_S(2, SupportSet(2, (1, 2))) == Weight(2, (Fraction(-1, 2), Fraction(-1, 2)))


def test_elimination_factor_never_vanishes_for_even_l():
    assert elimination_factor(2, SupportSet(2)) == Fraction(3, 2)
    assert elimination_factor(2, SupportSet(2, (1, 2))) == Fraction(1, 2)
    assert elimination_factor(2, SupportSet(2, (2,))) == Fraction(-1, 2)
    for l in (2, 4, 6):
        for support in all_supports(l):
            assert elimination_factor(l, support) != 0


def test_pairwise_relation_l2():
    relation = pairwise_relation(closed_forms(2), 1, 2)
    assert relation == CartanPolynomial.linear(2, {1: 1, 2: 1}, 1)


def test_pairwise_relation_general_shape():
    # h_i + 2h_{i+1} + … + 2h_{j−1} + h_j + j − i
    l = 4
    relation = pairwise_relation(closed_forms(l), 1, 4)
    assert relation == CartanPolynomial.linear(l, {1: 1, 2: 2, 3: 2, 4: 1}, 3)


def test_solve_support_l2():
    polys = closed_forms(2)
    record = solve_support(2, polys, SupportSet(2, (1, 2)))
    assert record.solutions == [Weight(2, (Fraction(-1, 2), Fraction(-1, 2)))]
    assert record.is_unique
    record = solve_support(2, polys, SupportSet(2, (1,)))
    assert record.solutions == [Weight(2, (Fraction(-3, 2), 0))]


@pytest.mark.parametrize("l", [2, 4])
def test_solution_set_is_mu_S(l):
    polys = closed_forms(l)
    solutions = solve_system(l, polys, strict=True)
    assert solutions == frozenset(mu_S(l, s) for s in all_supports(l))
    assert len(solutions) == 2**l
    for mu in solutions:
        assert all(p.evaluate_weight(mu) == 0 for p in polys)
        assert satisfies_pairwise_relations(polys, mu)


@pytest.mark.parametrize("l", [2, 4])
def test_solution_set_ignores_scaling(l):
    polys = closed_forms(l)
    factors = [Fraction(-7, 3)] + [Fraction(i + 1, 5) for i in range(1, l)]
    scaled = [p.scale(c) for p, c in zip(polys, factors)]
    assert solve_system(l, scaled, strict=True) == solve_system(l, polys, strict=True)


@pytest.mark.parametrize("l", [2, 4])
def test_verify_classification(l):
    report = verify_classification(l)
    assert report.outcome is Outcome.PASS
    assert len(report.rows) == 2**l
    assert report.dominant_supports == [SupportSet(l)]
    assert all(row.matches for row in report.rows)


@pytest.mark.slow
@pytest.mark.parametrize("l", [6, 8])
def test_verify_classification_large(l):
    report = verify_classification(l)
    assert report.outcome is Outcome.PASS
    assert len(report.rows) == 2**l


def test_degenerate_system_is_reported():
    polys = [CartanPolynomial.zero(2)] * 2
    with pytest.raises(ClassificationError):
        solve_system(2, polys, strict=True)
    report = verify_classification(2, polys)
    assert report.outcome is Outcome.FAIL
    assert report.failures
