from fractions import Fraction

import pytest

from voa.affine_lie import (
    AffineElement,
    AffineWeight,
    RealRoot,
    admissible_level,
    affine_bracket,
    affine_pairing,
    affine_rho,
    affine_simple_root,
    critical_shift,
    dot_reflect,
    enumerate_positive_real_roots,
    vacuum_weight,
)
from voa.finite_lie import RankMismatchError, chevalley_e, chevalley_f, chevalley_h
from voa.root_system import RootIndex, Weight, highest_root, root_weight

from .conftest import SAMPLES, random_lie_element


def random_affine(l, rng):
    element = AffineElement(l)
    for _ in range(rng.randint(1, 3)):
        element = element + AffineElement.loop(random_lie_element(l, rng, density=0.25), rng.randint(-2, 2))
    return element + AffineElement.central_element(l, rng.randint(-2, 2))


def test_cocycle_term():
    l = 2
    h = chevalley_h(l, 1)
    result = affine_bracket(AffineElement.loop(h, 1), AffineElement.loop(h, -1))
    assert result.terms == ()
    assert result.central == 2
    e, f = chevalley_e(l, 1), chevalley_f(l, 1)
    result = affine_bracket(AffineElement.loop(e, 2), AffineElement.loop(f, -2))
    assert [(t.x, t.n) for t in result.terms] == [(chevalley_h(l, 1), 0)]
    assert result.central == 2
    # m = 0 时没有中心项
    result = affine_bracket(AffineElement.loop(e, 0), AffineElement.loop(f, 0))
    assert result.central == 0


@pytest.mark.parametrize("l", [2, 4])
def test_affine_jacobi_and_antisymmetry(l, rng):
    for _ in range(SAMPLES):
        a, b, c = (random_affine(l, rng) for _ in range(3))
        assert (affine_bracket(a, b) + affine_bracket(b, a)).is_zero()
        jacobi = (
            affine_bracket(a, affine_bracket(b, c))
            + affine_bracket(b, affine_bracket(c, a))
            + affine_bracket(c, affine_bracket(a, b))
        )
        assert jacobi.is_zero()


def test_central_element_is_central():
    l = 2
    c = AffineElement.central_element(l)
    x = AffineElement.loop(chevalley_e(l, 2), 3)
    assert affine_bracket(c, x).is_zero()


def test_elements_merge_by_degree():
    l = 2
    e = chevalley_e(l, 1)
    element = AffineElement.loop(e, 1) + AffineElement.loop(e, 1) - AffineElement.loop(e.scale(2), 1)
    assert element.is_zero()
    with pytest.raises(RankMismatchError):
        AffineElement.loop(e, 0) + AffineElement.loop(chevalley_e(4, 1), 0)


def test_levels_and_rho():
    assert critical_shift(2) == 3
    assert admissible_level(2) == Fraction(-3, 2)
    assert admissible_level(4) == Fraction(-5, 2)
    shifted = vacuum_weight(4) + affine_rho(4)
    assert shifted.level == Fraction(5, 2)


def test_pairings_of_simple_coroots():
    l = 2
    shifted = vacuum_weight(l) + affine_rho(l)
    assert affine_pairing(shifted, affine_simple_root(l, 1)) == 1
    assert affine_pairing(shifted, affine_simple_root(l, 2)) == 1
    assert affine_pairing(shifted, affine_simple_root(l, 0)) == Fraction(-1, 2)
    assert affine_pairing(shifted, RealRoot(highest_root(l).negate(), 2)) == 1
    for l in (2, 4, 6):
        shifted = vacuum_weight(l) + affine_rho(l)
        assert affine_pairing(shifted, affine_simple_root(l, 0)) == Fraction(-(l - 1), 2)
        # ⟨λ, α_0^∨⟩ 不是整数
        assert affine_pairing(vacuum_weight(l), affine_simple_root(l, 0)).denominator == 2


def test_dot_reflection_gives_singular_weights():
    for l in (2, 4):
        lam = vacuum_weight(l)
        reflected = dot_reflect(lam, RealRoot(highest_root(l).negate(), 2))
        assert reflected == AffineWeight(admissible_level(l), root_weight(l, highest_root(l)), -2)
        for p in range(1, l + 1):
            alpha = affine_simple_root(l, p)
            assert dot_reflect(lam, alpha) == AffineWeight(lam.level, root_weight(l, alpha.alpha).scale(-1))


def test_real_roots():
    root = RealRoot(RootIndex(3, 1), 2)
    assert root.is_positive
    assert root.height(2) == 4
    assert root.coroot_coordinates(2) == (-1, -1, 2)
    assert not RealRoot(RootIndex(2, 1), 0).is_positive
    with pytest.raises(ValueError):
        RealRoot(RootIndex(1, 2), -1)
    assert str(RealRoot(RootIndex(1, 2), 0)) == "e1-e2"
    assert str(root) == "e3-e1+2delta"


def test_enumerate_positive_real_roots():
    for l in (2, 4):
        roots = enumerate_positive_real_roots(l, 3)
        assert len(roots) == l * (l + 1) // 2 + 3 * l * (l + 1)
        assert all(r.is_positive for r in roots)
        assert len(set(roots)) == len(roots)
    assert enumerate_positive_real_roots(2, 0) == [RealRoot(a, 0) for a in (RootIndex(1, 2), RootIndex(1, 3), RootIndex(2, 3))]
    with pytest.raises(ValueError):
        enumerate_positive_real_roots(2, -1)


def test_affine_weight_arithmetic():
    l = 2
    a = AffineWeight(1, Weight.fundamental(l, 1), 2)
    b = AffineWeight(Fraction(1, 2), Weight.fundamental(l, 2))
    assert (a + b) - b == a
    assert a.scale(2) == AffineWeight(2, Weight.fundamental(l, 1).scale(2), 4)
    assert a.rank == l
