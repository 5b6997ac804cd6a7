"""λ = −½(l+1)Λ_0 与全部 λ_S 的可容许性验证。

两个条件：
- 对所有正实根 α̃，⟨λ + ρ̂, α̃^∨⟩ ∉ −Z₊（非正整数即为违例）；
- 整配对余根张成的有理空间维数为 l + 1。
无穷的 m 用截断 max_m 加上斜率证书处理：配对值关于 m 以斜率 (l+1)/2 递增。
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from .affine_lie import (
    AffineWeight,
    RealRoot,
    admissible_level,
    affine_pairing,
    affine_rho,
    affine_simple_root,
    enumerate_positive_real_roots,
    vacuum_weight,
)
from .classification import SupportSet, mu_S
from .models import Outcome
from .root_system import RootIndex, all_roots, check_rank, highest_root, pairing

logger = logging.getLogger(__name__)


class WitnessError(ValueError):
    """见证余根表中出现了非整数配对。"""


def lambda_S(l: int, support: SupportSet) -> AffineWeight:
    """λ_S = −½(l+1)Λ_0 + μ_S。"""

    return AffineWeight(admissible_level(l), mu_S(l, support))


def is_violation(value: Fraction) -> bool:
    """value ∈ Z 且 value ≤ 0。"""

    return value.denominator == 1 and value <= 0


def coroot_rank(roots: Sequence[RealRoot], l: int) -> int:
    """余根在 (单余根, c) 坐标下的精确秩。"""

    vectors = sorted({root.coroot_coordinates(l) for root in roots})
    if not vectors:
        return 0
    return sympy.Matrix(vectors).rank()


@dataclass
class SlopeCertificate:
    """每个有限根 α 上配对值 ≤ 0 的最大 m（无则为 None）。"""

    slope: Fraction
    last_nonpositive_m: Dict[RootIndex, Optional[int]]

    @property
    def bound(self) -> Optional[int]:
        values = [m for m in self.last_nonpositive_m.values() if m is not None]
        return max(values) if values else None

    def covers(self, max_m: int) -> bool:
        bound = self.bound
        return bound is None or bound <= max_m


def slope_certificate(weight: AffineWeight) -> SlopeCertificate:
    """对每个有限根求出使 (Λ̄+ρ̄, α) + m·slope ≤ 0 的最大允许 m。"""

    l = weight.rank
    shifted = weight + affine_rho(l)
    slope = shifted.level
    if slope <= 0:
        raise ValueError(f"斜率须为正：{slope}")
    last: Dict[RootIndex, Optional[int]] = {}
    for alpha in all_roots(l):
        base = pairing(shifted.finite, alpha)
        lowest = 0 if alpha.is_positive else 1
        top = math.floor(-base / slope)
        last[alpha] = top if top >= lowest else None
    return SlopeCertificate(slope=slope, last_nonpositive_m=last)


@dataclass
class AdmissibilityReport:
    l: int
    support: SupportSet
    max_m: int
    violations: List[Tuple[RealRoot, Fraction]]
    integer_paired: List[RealRoot]
    rank_of_span: int
    certificate: SlopeCertificate

    @property
    def verdict(self) -> Outcome:
        """截断 max_m 下的结论；违例为空且秩为 l+1 时通过。"""

        if self.violations:
            return Outcome.FAIL
        if self.rank_of_span != self.l + 1:
            return Outcome.INCONCLUSIVE
        if not self.certificate.covers(self.max_m):
            return Outcome.INCONCLUSIVE
        return Outcome.PASS


def check_admissible(l: int, support: SupportSet, max_m: int) -> AdmissibilityReport:
    """在 m ≤ max_m 的窗口内验证 λ_S 的可容许性。"""

    check_rank(l)
    if max_m < 2:
        raise ValueError(f"max_m 至少为 2：{max_m}")
    weight = lambda_S(l, support)
    shifted = weight + affine_rho(l)
    violations: List[Tuple[RealRoot, Fraction]] = []
    integer_paired: List[RealRoot] = []
    for root in enumerate_positive_real_roots(l, max_m):
        value = affine_pairing(shifted, root)
        if value.denominator != 1:
            continue
        integer_paired.append(root)
        if is_violation(value):
            violations.append((root, value))
    report = AdmissibilityReport(
        l=l,
        support=support,
        max_m=max_m,
        violations=violations,
        integer_paired=integer_paired,
        rank_of_span=coroot_rank(integer_paired, l),
        certificate=slope_certificate(weight),
    )
    logger.debug("l=%d S=%s：%d 个整配对根，秩 %d，违例 %d", l, support, len(integer_paired), report.rank_of_span, len(violations))
    return report


# ------------------------------------------------------------- Π̂^∨_λ --
def expected_simple_coroots(l: int) -> List[RealRoot]:
    """{(2δ − θ)^∨, α_1^∨, …, α_l^∨}。"""

    return [RealRoot(highest_root(l).negate(), 2)] + [affine_simple_root(l, p) for p in range(1, l + 1)]


@dataclass
class PiCheckReport:
    l: int
    max_m: int
    integer_paired_count: int
    minimal: List[RealRoot]
    uncertified: List[RealRoot]
    expected: List[RealRoot]
    shifted_pairings: Dict[RealRoot, Fraction] = field(default_factory=dict)

    @property
    def outcome(self) -> Outcome:
        if self.max_m < 2 or self.uncertified:
            return Outcome.INCONCLUSIVE
        return Outcome.of(set(self.minimal) == set(self.expected))


def _nonnegative_combination(target: Tuple[int, ...], generators: Sequence[Tuple[int, ...]]) -> bool:
    """target 是否为 generators 的非负整系数组合且总项数 ≥ 2（生成元须线性无关）。"""

    if not generators:
        return False
    matrix = sympy.Matrix(generators).T
    if matrix.rank() != len(generators):
        return False
    try:
        solution, params = matrix.gauss_jordan_solve(sympy.Matrix(target))
    except ValueError:
        return False
    if params.shape[0]:
        return False
    coeffs = list(solution)
    return all(c.is_integer and c >= 0 for c in coeffs) and sum(coeffs) >= 2


def pi_check(l: int, max_m: int) -> PiCheckReport:
    """计算 Δ̂^∨re_{λ,+} 在截断内的极小元，并与 {(2δ−θ)^∨, α_1^∨, …, α_l^∨} 比较。"""

    check_rank(l)
    weight = vacuum_weight(l)
    shifted = weight + affine_rho(l)
    members = [root for root in enumerate_positive_real_roots(l, max_m) if affine_pairing(weight, root).denominator == 1]
    members.sort(key=lambda r: (r.height(l), r.coroot_coordinates(l)))
    vectors = {root.coroot_coordinates(l): root for root in members}
    certified_height = max_m * (l + 1)
    minimal: List[RealRoot] = []
    uncertified: List[RealRoot] = []
    for root in members:
        target = root.coroot_coordinates(l)
        height = root.height(l)
        decomposable = False
        for other in members:
            if other.height(l) >= height:
                break
            rest = tuple(a - b for a, b in zip(target, other.coroot_coordinates(l)))
            if rest in vectors:
                decomposable = True
                break
        if not decomposable:
            decomposable = _nonnegative_combination(target, [m.coroot_coordinates(l) for m in minimal])
        if decomposable:
            continue
        if height > certified_height:
            uncertified.append(root)
        else:
            minimal.append(root)
    report = PiCheckReport(
        l=l,
        max_m=max_m,
        integer_paired_count=len(members),
        minimal=minimal,
        uncertified=uncertified,
        expected=expected_simple_coroots(l),
        shifted_pairings={root: affine_pairing(shifted, root) for root in minimal},
    )
    logger.info("l=%d 极小整配对余根：%s", l, [str(r) for r in minimal])
    return report


# ---------------------------------------------------------- witnesses --
def witness_coroots(l: int, support: SupportSet) -> List[RealRoot]:
    """(δ − α_{i_j})^∨；α_{i_j}^∨ + … + α_{i_{j+1}}^∨；α_i^∨（i ∉ S）。每个都须与 λ_S 整配对。"""

    idx = support.elements
    roots = [RealRoot(RootIndex(i + 1, i), 1) for i in idx]
    roots += [RealRoot(RootIndex(a, b + 1), 0) for a, b in zip(idx, idx[1:])]
    roots += [affine_simple_root(l, i) for i in support.complement()]
    weight = lambda_S(l, support)
    offending = [str(root) for root in roots if affine_pairing(weight, root).denominator != 1]
    if offending:
        raise WitnessError(f"S={support} 的见证余根配对非整数：{offending}")
    return roots
