"""真空广义 Verma 模 N(k, 0)，k = −(l+1)/2。

状态是 PBW 单项式 x_1(n_1)…x_m(n_m)·1 的有理组合，n_t ≤ −1。
规范序：次数降序（−1 在前），同次数按 finite_lie 的全局基顺序。
ĝ 的作用通过把算子逐个向右交换实现；非负次数的算子碰到真空即为零
（次数 0 时是因为 V(0) 为平凡模）。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .affine_lie import AffineElement, AffineWeight, admissible_level
from .finite_lie import LieAlgebraA, RankMismatchError, chevalley_e, lie_algebra, root_vector_f
from .root_system import Weight, check_rank
from .sparse import accumulate, format_coefficient, format_rational

logger = logging.getLogger(__name__)

Generator = Tuple[int, int]
# 规范序下的 ((基指标, 次数), …)
PBWMonomial = Tuple[Generator, ...]


class LevelMismatchError(ValueError):
    """两个向量或向量与模的秩、水平不一致。"""


def _order_key(generator: Generator) -> Tuple[int, int, int]:
    index, degree = generator
    if degree < 0:
        return (0, -degree, index)
    return (1, degree, index)


def is_canonical(monomial: Sequence[Generator]) -> bool:
    if any(degree > -1 for _, degree in monomial):
        return False
    return all(_order_key(a) <= _order_key(b) for a, b in zip(monomial, monomial[1:]))


@dataclass
class ModuleVector:
    """N(k,0) 中的向量：规范 PBW 单项式到有理系数的稀疏映射。"""

    rank: int
    level: Fraction
    terms: Dict[PBWMonomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.level = Fraction(self.level)
        self.terms = {mono: Fraction(c) for mono, c in self.terms.items() if c}
        for mono in self.terms:
            if not is_canonical(mono):
                raise ValueError(f"单项式不是规范序：{mono}")

    def _check(self, other: "ModuleVector") -> None:
        if self.rank != other.rank or self.level != other.level:
            raise LevelMismatchError(f"N(k,0) 不一致：秩 {self.rank}/{other.rank}，水平 {self.level}/{other.level}")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        total = dict(self.terms)
        accumulate(total, other.terms)
        return ModuleVector(self.rank, self.level, total)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        total = dict(self.terms)
        accumulate(total, other.terms, Fraction(-1))
        return ModuleVector(self.rank, self.level, total)

    def scale(self, factor: object) -> "ModuleVector":
        factor = Fraction(factor)
        return ModuleVector(self.rank, self.level, {m: factor * c for m, c in self.terms.items()})

    def degrees(self) -> List[int]:
        return sorted({conformal_degree(mono) for mono in self.terms})

    def render(self, algebra: Optional[LieAlgebraA] = None) -> str:
        algebra = algebra or lie_algebra(self.rank)
        if not self.terms:
            return "0"
        parts = []
        for position, mono in enumerate(sorted(self.terms, key=lambda m: [_order_key(g) for g in m])):
            body = "".join(f"{algebra.name(i)}({d})" for i, d in mono) + "1" if mono else ""
            parts.append(format_coefficient(self.terms[mono], body or "1", position == 0))
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()


def conformal_degree(monomial: PBWMonomial) -> int:
    return -sum(degree for _, degree in monomial)


def monomial_weight(algebra: LieAlgebraA, monomial: PBWMonomial) -> Weight:
    total = Weight.zero(algebra.l)
    for index, _ in monomial:
        total = total + algebra.basis[index].weight
    return total


class VacuumModule:
    """N(k, 0) 连同 ĝ 作用的规范化缓存。"""

    def __init__(self, l: int, level: Optional[Fraction] = None) -> None:
        self.l = check_rank(l)
        self.level = admissible_level(l) if level is None else Fraction(level)
        self.algebra = lie_algebra(l)
        self._cache: Dict[PBWMonomial, Dict[PBWMonomial, Fraction]] = {}

    # ----------------------------------------------------------- vectors --
    def vector(self, terms: Dict[PBWMonomial, Fraction]) -> ModuleVector:
        return ModuleVector(self.l, self.level, terms)

    def zero(self) -> ModuleVector:
        return self.vector({})

    def vacuum(self) -> ModuleVector:
        return self.vector({(): Fraction(1)})

    def state(self, *generators: Generator, coeff: object = 1) -> ModuleVector:
        """x_1(n_1)…x_m(n_m)·1，生成元按给定顺序作用后再规范化。"""

        result: Dict[PBWMonomial, Fraction] = {}
        accumulate(result, self.straighten(tuple(generators)), Fraction(coeff))
        return self.vector(result)

    # ------------------------------------------------------------ action --
    def straighten(self, word: Tuple[Generator, ...]) -> Dict[PBWMonomial, Fraction]:
        """把作用在真空上的圈生成元之积化为规范 PBW 组合。"""

        cached = self._cache.get(word)
        if cached is not None:
            return cached
        if word and word[-1][1] >= 0:
            # x(n)·1 = 0，n > 0 因 ĝ₊ 平凡，n = 0 因 V(0) 平凡
            self._cache[word] = {}
            return self._cache[word]
        descent = next((p for p in range(len(word) - 1) if _order_key(word[p]) > _order_key(word[p + 1])), None)
        if descent is None:
            result = {word: Fraction(1)}
            self._cache[word] = result
            return result
        (x, m), (y, n) = word[descent], word[descent + 1]
        prefix, suffix = word[:descent], word[descent + 2 :]
        result: Dict[PBWMonomial, Fraction] = {}
        accumulate(result, self.straighten(prefix + ((y, n), (x, m)) + suffix))
        for z, coeff in self.algebra.bracket_coords(x, y).items():
            accumulate(result, self.straighten(prefix + ((z, m + n),) + suffix), coeff)
        if m and m + n == 0:
            form = self.algebra.form_coords(x, y)
            if form:
                accumulate(result, self.straighten(prefix + suffix), m * form * self.level)
        self._cache[word] = result
        return result

    def act(self, a: AffineElement, v: ModuleVector) -> ModuleVector:
        """a·v：圈项逐项向右交换，中心元作用为 k。"""

        if a.rank != self.l or v.rank != self.l:
            raise RankMismatchError(f"秩不一致：算子 {a.rank}，向量 {v.rank}，模 {self.l}")
        if v.level != self.level:
            raise LevelMismatchError(f"向量水平 {v.level} 与模水平 {self.level} 不符")
        result: Dict[PBWMonomial, Fraction] = {}
        for term in a.terms:
            for index, coeff in self.algebra.decompose(term.x).items():
                for mono, value in v.terms.items():
                    accumulate(result, self.straighten(((index, term.n),) + mono), coeff * value)
        if a.central:
            accumulate(result, v.terms, a.central * self.level)
        return self.vector(result)

    # ----------------------------------------------------------- grading --
    def homogeneous_weight(self, v: ModuleVector) -> Optional[Tuple[int, Weight]]:
        """(共形次数, h-权)，v 非齐次或为零时返回 None。"""

        grades = {(conformal_degree(m), monomial_weight(self.algebra, m)) for m in v.terms}
        if len(grades) != 1:
            return None
        return grades.pop()

    def affine_weight_of(self, v: ModuleVector) -> Optional[AffineWeight]:
        """齐次向量的仿射权 k·Λ_0 + μ − d·δ。"""

        grade = self.homogeneous_weight(v)
        if grade is None:
            return None
        degree, weight = grade
        return AffineWeight(self.level, weight, Fraction(-degree))

    def graded_piece_dimension(self, degree: int, weight: Weight) -> int:
        """N(k,0) 中 (共形次数, h-权) 齐次分量的维数。"""

        count = 0
        for mono in self._monomials_of_degree(degree):
            if monomial_weight(self.algebra, mono) == weight:
                count += 1
        return count

    def _monomials_of_degree(self, degree: int) -> Iterable[PBWMonomial]:
        generators = sorted(
            ((index, -d) for d in range(1, degree + 1) for index in range(self.algebra.dimension)),
            key=_order_key,
        )

        def extend(start: int, remaining: int) -> Iterable[PBWMonomial]:
            if remaining == 0:
                yield ()
                return
            for position in range(start, len(generators)):
                generator = generators[position]
                if -generator[1] <= remaining:
                    for rest in extend(position, remaining + generator[1]):
                        yield (generator,) + rest

        return extend(0, degree)


@lru_cache(maxsize=None)
def vacuum_module(l: int) -> VacuumModule:
    return VacuumModule(l)


def singular_vector(l: int) -> ModuleVector:
    """奇异向量

    v = Σ_{i=1}^{l} (l−2i+1)/(l+1) h_i(−1)e_θ(−1)1
        − Σ_{i=1}^{l−1} e_{ε_1−ε_{i+1}}(−1) e_{ε_{i+1}−ε_{l+1}}(−1)1
        − ½(l−1) e_θ(−2)1，
    根向量取嵌套括号定义。
    """

    module = vacuum_module(check_rank(l))
    algebra = module.algebra
    theta = algebra.e(1, l + 1)
    v = module.zero()
    for i in range(1, l + 1):
        coeff = Fraction(l - 2 * i + 1, l + 1)
        v = v + module.state((algebra.h(i), -1), (theta, -1), coeff=coeff)
    for i in range(1, l):
        v = v - module.state((algebra.e(1, i + 1), -1), (algebra.e(i + 1, l + 1), -1))
    v = v - module.state((theta, -2), coeff=Fraction(l - 1, 2))
    logger.debug("l=%d 的奇异向量共 %d 项", l, len(v.terms))
    return v


@dataclass
class SingularityReport:
    """逐个升算子的零化结果。"""

    checks: List[Tuple[str, ModuleVector]]

    @property
    def is_singular(self) -> bool:
        return all(result.is_zero() for _, result in self.checks)

    def failures(self) -> List[str]:
        return [label for label, result in self.checks if not result.is_zero()]


def raising_operators(l: int) -> List[Tuple[str, AffineElement]]:
    """e_j(0)（j = 1…l）与 f_θ(1)。"""

    operators = [(f"e{j}(0)", AffineElement.loop(chevalley_e(l, j), 0)) for j in range(1, l + 1)]
    operators.append(("f_theta(1)", AffineElement.loop(root_vector_f(l, 1, l + 1), 1)))
    return operators


def is_singular(v: ModuleVector) -> SingularityReport:
    module = vacuum_module(v.rank)
    if v.level != module.level:
        raise LevelMismatchError(f"只支持水平 {format_rational(module.level)}")
    checks = [(label, module.act(op, v)) for label, op in raising_operators(v.rank)]
    report = SingularityReport(checks=checks)
    logger.info("l=%d 奇异性检查：%s", v.rank, "通过" if report.is_singular else f"失败 {report.failures()}")
    return report
