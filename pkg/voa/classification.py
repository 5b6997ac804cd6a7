"""由 𝒫₀ 决定的多项式方程组的精确求解、最高权的完全分类，以及与 μ_S 闭式的对照。

求解器逐个支撑集枚举，不使用 μ_S 的闭式：在支撑集外令 h_i = 0，
由相邻支撑指标的两两关系把各 h 写成 h_{i_k} 的仿射函数，
代回 p_{i_k} 得到次数不超过 2 的一元方程，再对所有 p_i 精确验证。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .enveloping import polynomials_P0
from .models import Outcome
from .polynomial import CartanPolynomial, rational_roots
from .root_system import Weight, check_rank, is_dominant_integral

logger = logging.getLogger(__name__)


class ClassificationError(RuntimeError):
    """分类对照失败；消息中给出出问题的支撑集。"""


@dataclass(frozen=True, slots=True)
class SupportSet:
    """{i_1 < … < i_k} ⊆ {1, …, l}，可以为空。"""

    l: int
    elements: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        check_rank(self.l)
        elements = tuple(self.elements)
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise ValueError(f"支撑集须严格递增：{elements}")
        if any(not 1 <= i <= self.l for i in elements):
            raise ValueError(f"支撑集元素须在 1..{self.l} 内：{elements}")
        object.__setattr__(self, "elements", elements)

    @property
    def k(self) -> int:
        return len(self.elements)

    def complement(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.l + 1) if i not in self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.elements) + "}"


def all_supports(l: int) -> List[SupportSet]:
    """全部 2^l 个支撑集，按元素元组排序。"""

    check_rank(l)
    supports = [SupportSet(l, combo) for size in range(l + 1) for combo in combinations(range(1, l + 1), size)]
    return sorted(supports, key=lambda s: s.elements)


def mu_S(l: int, support: SupportSet) -> Weight:
    """μ_S = Σ_j (Σ_{s>j} (−1)^{s−j} i_s + Σ_{s<j} (−1)^{j−s+1} i_s + (−1)^{k−j+1} (l+1)/2) ω_{i_j}。"""

    check_rank(l)
    idx = support.elements
    k = len(idx)
    half = Fraction(l + 1, 2)
    values: Dict[int, Fraction] = {}
    for j in range(1, k + 1):
        value = Fraction(0)
        for s in range(j + 1, k + 1):
            value += (-1) ** (s - j) * idx[s - 1]
        for s in range(1, j):
            value += (-1) ** (j - s + 1) * idx[s - 1]
        value += (-1) ** (k - j + 1) * half
        values[idx[j - 1]] = value
    return Weight.from_support(l, values)


def elimination_factor(l: int, support: SupportSet) -> Fraction:
    """(l+1)/2 − i_k + i_{k−1} − … + (−1)^k i_1；l 为偶数时恒不为零。"""

    value = Fraction(l + 1, 2)
    for offset, i in enumerate(reversed(support.elements)):
        value += (-1) ** (offset + 1) * i
    return value


def pairwise_relation(polys: Sequence[CartanPolynomial], i: int, j: int) -> CartanPolynomial:
    """(h_j·p_i − h_i·p_j) / (h_i h_j)。"""

    l = polys[0].rank
    h_i = CartanPolynomial.variable(l, i)
    h_j = CartanPolynomial.variable(l, j)
    combined = h_j * polys[i - 1] - h_i * polys[j - 1]
    exps = tuple(int(t in (i, j)) for t in range(1, l + 1))
    return combined.divide_by_monomial(exps)


@dataclass
class SupportSolution:
    """单个支撑集上的求解记录。"""

    support: SupportSet
    solutions: List[Weight] = field(default_factory=list)
    univariate: List[Fraction] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def is_unique(self) -> bool:
        return len(self.solutions) == 1


def _vanishes_everywhere(polys: Sequence[CartanPolynomial], weight: Weight) -> bool:
    return all(not p.evaluate_weight(weight) for p in polys)


def solve_support(l: int, polys: Sequence[CartanPolynomial], support: SupportSet) -> SupportSolution:
    """在给定支撑集上求解 𝒫₀ 的公共零点。"""

    record = SupportSolution(support=support)
    if not support.elements:
        candidate = Weight.zero(l)
        if _vanishes_everywhere(polys, candidate):
            record.solutions.append(candidate)
        return record
    zeros = support.complement()
    idx = support.elements
    last = idx[-1]
    # h_i = const + slope·t，t = h_{i_k}
    assignment: Dict[int, Tuple[Fraction, Fraction]] = {last: (Fraction(0), Fraction(1))}
    for a in range(len(idx) - 2, -1, -1):
        left, right = idx[a], idx[a + 1]
        relation = pairwise_relation(polys, left, right).restrict(zeros)
        const, coeffs = relation.linear_form()
        stray = set(coeffs) - {left, right}
        if stray:
            record.notes.append(f"关系({left},{right}) 含有多余变量 h{sorted(stray)}")
            return record
        c_left = coeffs.get(left, Fraction(0))
        if not c_left:
            record.notes.append(f"关系({left},{right}) 不能确定 h{left}")
            return record
        c_right = coeffs.get(right, Fraction(0))
        r_const, r_slope = assignment[right]
        assignment[left] = (-(const + c_right * r_const) / c_left, -(c_right * r_slope) / c_left)
    final = polys[last - 1].restrict(zeros).substitute_affine(assignment)
    record.univariate = final
    if not any(final):
        record.notes.append("末方程恒为零")
        return record
    roots, discarded = rational_roots(final)
    if discarded:
        record.notes.append(f"舍弃 {discarded} 个非有理根")
    for t in roots:
        if not t:
            continue
        values = {i: const + slope * t for i, (const, slope) in assignment.items()}
        if any(not value for value in values.values()):
            continue
        candidate = Weight.from_support(l, values)
        if _vanishes_everywhere(polys, candidate):
            record.solutions.append(candidate)
        else:
            record.notes.append(f"候选 {candidate} 不满足完整方程组")
    if len(record.solutions) != 1:
        record.notes.append(f"该支撑集上有 {len(record.solutions)} 个解")
    return record


def solve_supports(l: int, polys: Sequence[CartanPolynomial]) -> List[SupportSolution]:
    check_rank(l)
    records = [solve_support(l, polys, support) for support in all_supports(l)]
    logger.info("l=%d：枚举 %d 个支撑集，得到 %d 个解", l, len(records), sum(len(r.solutions) for r in records))
    return records


def solve_system(l: int, polys: Sequence[CartanPolynomial], strict: bool = False) -> frozenset:
    """𝒫₀ 公共零点的全集（支撑集枚举的并）。strict 时任一支撑集解不唯一即抛出 ClassificationError。"""

    records = solve_supports(l, polys)
    if strict:
        for record in records:
            if not record.is_unique:
                raise ClassificationError(f"S={record.support} 上有 {len(record.solutions)} 个解：{record.notes}")
    return frozenset(w for record in records for w in record.solutions)


def satisfies_pairwise_relations(polys: Sequence[CartanPolynomial], weight: Weight) -> bool:
    """支撑集内任意 i < j 都满足 h_i h_j (h_i + 2h_{i+1} + … + h_j + j − i) = 0 的推导形式。"""

    support = weight.support()
    for i, j in combinations(support, 2):
        product = CartanPolynomial.variable(weight.rank, i) * CartanPolynomial.variable(weight.rank, j)
        if (product * pairwise_relation(polys, i, j)).evaluate_weight(weight):
            return False
    return True


@dataclass
class ClassificationRow:
    support: SupportSet
    mu: Weight
    solved: List[Weight]
    dominant_integral: bool
    elimination_factor: Fraction
    notes: List[str]

    @property
    def matches(self) -> bool:
        return self.solved == [self.mu]


@dataclass
class ClassificationReport:
    l: int
    rows: List[ClassificationRow]
    oracle_weights: frozenset
    closed_form_weights: frozenset
    failures: List[str]

    @property
    def outcome(self) -> Outcome:
        return Outcome.FAIL if self.failures else Outcome.PASS

    @property
    def dominant_supports(self) -> List[SupportSet]:
        return [row.support for row in self.rows if row.dominant_integral]


def verify_classification(l: int, polys: Optional[Sequence[CartanPolynomial]] = None) -> ClassificationReport:
    """支撑集枚举解集 = {μ_S}，基数 2^l，且只有 S = ∅ 给出支配整权。"""

    check_rank(l)
    polys = list(polys) if polys is not None else polynomials_P0(l)
    records = solve_supports(l, polys)
    rows: List[ClassificationRow] = []
    failures: List[str] = []
    for record in records:
        support = record.support
        mu = mu_S(l, support)
        factor = elimination_factor(l, support)
        row = ClassificationRow(
            support=support,
            mu=mu,
            solved=list(record.solutions),
            dominant_integral=is_dominant_integral(mu),
            elimination_factor=factor,
            notes=list(record.notes),
        )
        rows.append(row)
        if not row.matches:
            failures.append(f"S={support}：求解得 {[str(w) for w in record.solutions]}，闭式 μ_S 为 {mu}")
        if not factor:
            failures.append(f"S={support}：消元因子为零")
        if row.dominant_integral != (support.k == 0):
            failures.append(f"S={support}：支配整性判定为 {row.dominant_integral}")
        if not satisfies_pairwise_relations(polys, mu):
            failures.append(f"S={support}：两两关系不成立")
    oracle = frozenset(w for record in records for w in record.solutions)
    closed = frozenset(row.mu for row in rows)
    if oracle != closed:
        failures.append("解集与 {μ_S} 不同")
    if len(closed) != 2**l:
        failures.append(f"得到 {len(closed)} 个不同的权，应为 {2 ** l}")
    report = ClassificationReport(l=l, rows=rows, oracle_weights=oracle, closed_form_weights=closed, failures=failures)
    if failures:
        logger.warning("l=%d 分类对照失败：%s", l, failures[:3])
    return report


