"""U(g) 的 PBW 形式、Zhu 映射 F、理想生成元 v′、伴随作用、
模 R 的生成以及零权多项式 𝒫₀ 的提取。

PBW 顺序沿用 finite_lie 的全局基顺序 f < h < e，于是“含 e 因子的词”
恰是 U(g)n₊ 中的元素，作用在最高权向量上为零。
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Deque, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import sympy

from .finite_lie import LieAlgebraA, LieElement, lie_algebra
from .polynomial import CartanPolynomial, span_rank
from .root_system import Weight, check_rank
from .sparse import accumulate, format_coefficient
from .verma import ModuleVector, singular_vector

logger = logging.getLogger(__name__)

# PBW 词：基指标的非降序列（重复即指数）
UEAWord = Tuple[int, ...]


class ProjectionError(ValueError):
    """投影到 S(h) 的输入不是零权，或规范化后残留纯 f 词。"""


class ClosureError(RuntimeError):
    """R 的伴随闭包在安全上界内没有稳定。"""


class ClosedFormMismatch(AssertionError):
    """伴随链算出的多项式与闭式不一致。"""


def word_factors(word: UEAWord) -> List[Tuple[int, int]]:
    """(基指标, 指数) 形式。"""

    factors: List[Tuple[int, int]] = []
    for index in word:
        if factors and factors[-1][0] == index:
            factors[-1] = (index, factors[-1][1] + 1)
        else:
            factors.append((index, 1))
    return factors


@dataclass
class UEAElement:
    """U(g) 的元素：PBW 词到有理系数的稀疏映射。"""

    rank: int
    terms: Dict[UEAWord, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = {w: Fraction(c) for w, c in self.terms.items() if c}
        for word in self.terms:
            if any(a > b for a, b in zip(word, word[1:])):
                raise ValueError(f"不是 PBW 词：{word}")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "UEAElement") -> "UEAElement":
        total = dict(self.terms)
        accumulate(total, other.terms)
        return UEAElement(self.rank, total)

    def __sub__(self, other: "UEAElement") -> "UEAElement":
        total = dict(self.terms)
        accumulate(total, other.terms, Fraction(-1))
        return UEAElement(self.rank, total)

    def scale(self, factor: object) -> "UEAElement":
        factor = Fraction(factor)
        return UEAElement(self.rank, {w: factor * c for w, c in self.terms.items()})

    def render(self, algebra: Optional[LieAlgebraA] = None) -> str:
        algebra = algebra or lie_algebra(self.rank)
        if not self.terms:
            return "0"
        parts = []
        for position, word in enumerate(sorted(self.terms, key=lambda w: (len(w), w))):
            body = "*".join(
                algebra.name(i) if power == 1 else f"{algebra.name(i)}^{power}" for i, power in word_factors(word)
            )
            parts.append(format_coefficient(self.terms[word], body, position == 0))
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()


class EnvelopingAlgebra:
    """U(sl(l+1)) 的 PBW 规范化与乘法（带缓存）。"""

    def __init__(self, l: int) -> None:
        self.l = check_rank(l)
        self.algebra = lie_algebra(l)
        self._cache: Dict[Tuple[int, ...], Dict[UEAWord, Fraction]] = {}

    def one(self) -> UEAElement:
        return UEAElement(self.l, {(): Fraction(1)})

    def generator(self, index: int, coeff: object = 1) -> UEAElement:
        return UEAElement(self.l, {(index,): Fraction(coeff)})

    def straighten(self, word: Tuple[int, ...]) -> Dict[UEAWord, Fraction]:
        """xy = yx + [x, y]，从第一个逆序处递归。"""

        cached = self._cache.get(word)
        if cached is not None:
            return cached
        descent = next((p for p in range(len(word) - 1) if word[p] > word[p + 1]), None)
        if descent is None:
            result = {word: Fraction(1)}
        else:
            x, y = word[descent], word[descent + 1]
            prefix, suffix = word[:descent], word[descent + 2 :]
            result = {}
            accumulate(result, self.straighten(prefix + (y, x) + suffix))
            for z, coeff in self.algebra.bracket_coords(x, y).items():
                accumulate(result, self.straighten(prefix + (z,) + suffix), coeff)
        self._cache[word] = result
        return result

    def normalize(self, word: Iterable[int]) -> UEAElement:
        """任意基元素之积的 PBW 形式。"""

        return UEAElement(self.l, dict(self.straighten(tuple(word))))

    def product(self, *elements: UEAElement) -> UEAElement:
        result = self.one()
        for element in elements:
            terms: Dict[UEAWord, Fraction] = {}
            for w1, c1 in result.terms.items():
                for w2, c2 in element.terms.items():
                    accumulate(terms, self.straighten(w1 + w2), c1 * c2)
            result = UEAElement(self.l, terms)
        return result

    def from_lie(self, x: LieElement) -> UEAElement:
        return UEAElement(self.l, self.algebra.decompose(x))

    def adjoint(self, x: object, f: UEAElement) -> UEAElement:
        """X_L f = X·f − f·X；x 可以是基指标或 LieElement。"""

        xs = self.generator(x) if isinstance(x, int) else self.from_lie(x)
        return self.product(xs, f) - self.product(f, xs)

    def adjoint_chain(self, chain: Sequence[int], f: UEAElement) -> UEAElement:
        """(x_1 x_2 … x_r)_L f = x_1_L(x_2_L(…x_r_L f))。"""

        for index in reversed(chain):
            f = self.adjoint(index, f)
        return f

    def weight_of(self, element: UEAElement) -> Optional[Weight]:
        """齐次元素的 h-权，非齐次或零元返回 None。"""

        weights = {self.word_weight(w) for w in element.terms}
        if len(weights) != 1:
            return None
        return weights.pop()

    def word_weight(self, word: UEAWord) -> Weight:
        total = Weight.zero(self.l)
        for index in word:
            total = total + self.algebra.basis[index].weight
        return total


@lru_cache(maxsize=None)
def enveloping_algebra(l: int) -> EnvelopingAlgebra:
    return EnvelopingAlgebra(l)


# ------------------------------------------------------------------ Zhu F --
def zhu_F(v: ModuleVector) -> UEAElement:
    """F([x_1(−n_1−1)⋯x_m(−n_m−1)1]) = (−1)^{n_1+⋯+n_m} x_m ⋯ x_1，线性延拓。"""

    uea = enveloping_algebra(v.rank)
    terms: Dict[UEAWord, Fraction] = {}
    for mono, coeff in v.terms.items():
        sign = (-1) ** sum(-degree - 1 for _, degree in mono)
        reversed_word = tuple(index for index, _ in reversed(mono))
        accumulate(terms, uea.straighten(reversed_word), coeff * sign)
    return UEAElement(v.rank, terms)


def zhu_F_raw(v: ModuleVector) -> List[Tuple[Fraction, Tuple[int, ...]]]:
    """未规范化的 F 像：(系数, 反序后的词) 列表，供报告展示。"""

    raw = []
    for mono, coeff in v.terms.items():
        sign = (-1) ** sum(-degree - 1 for _, degree in mono)
        raw.append((coeff * sign, tuple(index for index, _ in reversed(mono))))
    return sorted(raw, key=lambda item: item[1])


def v_prime_words(l: int) -> List[Tuple[Fraction, Tuple[int, ...]]]:
    """v′ 的显式写法（未规范化）：

    Σ (l−2i+1)/(l+1) h_i e_θ − Σ e_{ε_{i+1}−ε_{l+1}} e_{ε_1−ε_{i+1}} + ½(l−1) e_θ。
    """

    algebra = lie_algebra(check_rank(l))
    theta = algebra.e(1, l + 1)
    words: List[Tuple[Fraction, Tuple[int, ...]]] = []
    for i in range(1, l + 1):
        words.append((Fraction(l - 2 * i + 1, l + 1), (algebra.h(i), theta)))
    for i in range(1, l):
        words.append((Fraction(-1), (algebra.e(i + 1, l + 1), algebra.e(1, i + 1))))
    words.append((Fraction(l - 1, 2), (theta,)))
    return words


def v_prime(l: int) -> UEAElement:
    """理想生成元 v′ 的 PBW 形式。"""

    uea = enveloping_algebra(check_rank(l))
    terms: Dict[UEAWord, Fraction] = {}
    for coeff, word in v_prime_words(l):
        accumulate(terms, uea.straighten(word), coeff)
    return UEAElement(l, terms)


@dataclass
class ZhuComparison:
    """F([v]) 与显式 v′ 的对照。"""

    l: int
    computed: UEAElement
    displayed: UEAElement
    raw: List[Tuple[Fraction, Tuple[int, ...]]]

    @property
    def difference(self) -> UEAElement:
        return self.computed - self.displayed

    @property
    def matches(self) -> bool:
        return self.difference.is_zero()


def compare_zhu_image(l: int) -> ZhuComparison:
    v = singular_vector(l)
    comparison = ZhuComparison(l=l, computed=zhu_F(v), displayed=v_prime(l), raw=zhu_F_raw(v))
    if not comparison.matches:
        logger.warning("l=%d：F([v]) 与显式 v′ 相差 %s，后续使用 F([v])", l, comparison.difference)
    return comparison


def ideal_generator(l: int) -> UEAElement:
    """下游统一使用的生成元：计算出的 F([v])。"""

    return zhu_F(singular_vector(l))


# ----------------------------------------------------------- module R --
class _EchelonSpace:
    """稀疏行最简形，用于精确追踪线性无关性。"""

    def __init__(self) -> None:
        self.rows: Dict[UEAWord, Dict[UEAWord, Fraction]] = {}

    def reduce(self, vector: Mapping[UEAWord, Fraction]) -> Dict[UEAWord, Fraction]:
        remainder = dict(vector)
        for pivot in [p for p in remainder if p in self.rows]:
            coeff = remainder.get(pivot)
            if coeff:
                accumulate(remainder, self.rows[pivot], -coeff)
        return remainder

    def insert(self, vector: Mapping[UEAWord, Fraction]) -> bool:
        remainder = self.reduce(vector)
        if not remainder:
            return False
        pivot = min(remainder, key=lambda w: (len(w), w))
        scale = 1 / remainder[pivot]
        row = {w: c * scale for w, c in remainder.items()}
        for other in self.rows.values():
            coeff = other.get(pivot)
            if coeff:
                accumulate(other, row, -coeff)
        self.rows[pivot] = row
        return True

    def __len__(self) -> int:
        return len(self.rows)


@dataclass
class AdjointModule:
    """伴随作用下由 v′ 生成的子模 R，按 h-权分次的基。"""

    l: int
    highest: UEAElement
    basis_by_weight: Dict[Weight, List[UEAElement]]

    @property
    def dimension(self) -> int:
        return sum(len(vectors) for vectors in self.basis_by_weight.values())

    @property
    def zero_weight_basis(self) -> List[UEAElement]:
        return self.basis_by_weight.get(Weight.zero(self.l), [])

    def weight_multiplicities(self) -> Dict[Weight, int]:
        return {weight: len(vectors) for weight, vectors in self.basis_by_weight.items()}

    def exact_rank(self) -> int:
        """逐权空间用 sympy 重算基的秩，与增量消元的结果对照。"""

        return sum(_sympy_rank(vectors) for vectors in self.basis_by_weight.values())


def _sympy_rank(vectors: Sequence[UEAElement]) -> int:
    words = sorted({w for v in vectors for w in v.terms})
    if not words:
        return 0
    rows = [[_rational(v.terms.get(w, Fraction(0))) for w in words] for v in vectors]
    return sympy.Matrix(rows).rank()


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def generate_R(l: int, generator: Optional[UEAElement] = None, margin: int = 8) -> AdjointModule:
    """对 2l 个 Chevalley 生成元做广度优先的伴随闭包。"""

    uea = enveloping_algebra(check_rank(l))
    start = generator if generator is not None else ideal_generator(l)
    bound = uea.algebra.dimension + margin
    spaces: Dict[Weight, _EchelonSpace] = {}
    basis: Dict[Weight, List[UEAElement]] = {}

    def admit(element: UEAElement) -> bool:
        weight = uea.weight_of(element)
        if weight is None:
            raise ClosureError(f"伴随作用产生了非齐次元素：{element}")
        space = spaces.setdefault(weight, _EchelonSpace())
        if not space.insert(element.terms):
            return False
        basis.setdefault(weight, []).append(element)
        return True

    admit(start)
    queue: Deque[UEAElement] = deque([start])
    generators = uea.algebra.chevalley_generators()
    while queue:
        current = queue.popleft()
        for index in generators:
            image = uea.adjoint(index, current)
            if image.is_zero() or not admit(image):
                continue
            queue.append(image)
            total = sum(len(vectors) for vectors in basis.values())
            if total > bound:
                raise ClosureError(f"R 的维数超过安全上界 {bound}，括号或符号可能有误")
    module = AdjointModule(l=l, highest=start, basis_by_weight=basis)
    rank = module.exact_rank()
    if rank != module.dimension:
        raise ClosureError(f"R 的基不是线性无关的：秩 {rank}，基向量 {module.dimension} 个")
    logger.info("l=%d：R 稳定，dim R = %d，dim R₀ = %d", l, module.dimension, len(module.zero_weight_basis))
    return module


# --------------------------------------------------------- projection --
def project_to_polynomial(r: UEAElement) -> CartanPolynomial:
    """零权元 r 在最高权向量上的作用 r·v_μ = p_r(μ)·v_μ 对应的 p_r。"""

    uea = enveloping_algebra(r.rank)
    algebra = uea.algebra
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for word, coeff in r.terms.items():
        if not uea.word_weight(word).is_zero():
            raise ProjectionError(f"输入含非零权的词：{word}")
    normalized = uea.product(r)
    for word, coeff in normalized.terms.items():
        kinds = {algebra.kind(index) for index in word}
        if "e" in kinds:
            continue
        if "f" in kinds:
            raise ProjectionError(f"规范化后残留纯 f 词：{word}")
        exps = [0] * r.rank
        for index in word:
            exps[algebra.basis[index].label[0] - 1] += 1
        accumulate(terms, {tuple(exps): coeff})
    return CartanPolynomial(r.rank, terms)


def act_on_highest_weight(r: UEAElement, mu: Weight) -> Dict[UEAWord, Fraction]:
    """在 Verma 模 M(μ) 中计算 r·v_μ，逐个因子从右向左作用。

    结果以 f 词（U(n₋) 的 PBW 词）为键；零权 r 的结果应为 {(): p_r(μ)}。
    """

    uea = enveloping_algebra(r.rank)
    algebra = uea.algebra
    result: Dict[UEAWord, Fraction] = {}
    for word, coeff in r.terms.items():
        state: Dict[UEAWord, Fraction] = {(): Fraction(1)}
        for index in reversed(word):
            updated: Dict[UEAWord, Fraction] = {}
            for f_word, value in state.items():
                for new_word, c in uea.straighten((index,) + f_word).items():
                    lowering = tuple(i for i in new_word if algebra.kind(i) == "f")
                    rest = new_word[len(lowering) :]
                    if any(algebra.kind(i) == "e" for i in rest):
                        continue
                    scalar = c
                    for i in rest:
                        scalar *= mu.coord(algebra.basis[i].label[0])
                    accumulate(updated, {lowering: scalar * value})
            state = updated
        accumulate(result, state, coeff)
    return result


# ----------------------------------------------------------- 𝒫₀ basis --
def adjoint_chain_indices(l: int, i: int) -> List[int]:
    """f_i f_{i−1} … f_1 f_{i+1} … f_l 的基指标（左边最后作用）。"""

    algebra = lie_algebra(l)
    return [algebra.f(t) for t in range(i, 0, -1)] + [algebra.f(t) for t in range(i + 1, l + 1)]


def closed_form_polynomial(l: int, i: int) -> CartanPolynomial:
    """p_i(h) = h_i(Σ_{j<i} −2j/(l+1) h_j + (l−2i+1)/(l+1) h_i + Σ_{j>i} (2l−2j+2)/(l+1) h_j + ½(l+1) − i)。"""

    check_rank(l)
    coeffs: Dict[int, Fraction] = {}
    for j in range(1, i):
        coeffs[j] = Fraction(-2 * j, l + 1)
    coeffs[i] = Fraction(l - 2 * i + 1, l + 1)
    for j in range(i + 1, l + 1):
        coeffs[j] = Fraction(2 * l - 2 * j + 2, l + 1)
    factor = CartanPolynomial.linear(l, coeffs, Fraction(l + 1, 2) - i)
    return CartanPolynomial.variable(l, i) * factor


def adjoint_chain_polynomial(l: int, i: int, generator: Optional[UEAElement] = None) -> CartanPolynomial:
    """(−1)^i · 投影[(f_i … f_1 f_{i+1} … f_l)_L v′]。"""

    uea = enveloping_algebra(check_rank(l))
    start = generator if generator is not None else ideal_generator(l)
    image = uea.adjoint_chain(adjoint_chain_indices(l, i), start)
    return project_to_polynomial(image).scale((-1) ** i)


def polynomials_P0(l: int, generator: Optional[UEAElement] = None) -> List[CartanPolynomial]:
    """𝒫₀ 的基 p_1…p_l，由伴随链计算并与闭式逐一核对。"""

    start = generator if generator is not None else ideal_generator(l)
    computed: List[CartanPolynomial] = []
    for i in range(1, l + 1):
        poly = adjoint_chain_polynomial(l, i, start)
        expected = closed_form_polynomial(l, i)
        if poly != expected:
            raise ClosedFormMismatch(f"l={l}, i={i}：伴随链得到 {poly}，闭式为 {expected}")
        computed.append(poly)
    return computed


def zero_weight_span_matches(l: int, module: AdjointModule, polys: Sequence[CartanPolynomial]) -> bool:
    """R₀ 的投影与 span{p_1…p_l} 相同（比较精确秩）。"""

    projected = [project_to_polynomial(r) for r in module.zero_weight_basis]
    own = span_rank(projected)
    joint = span_rank(list(projected) + list(polys))
    return own == span_rank(polys) == joint == l


# ------------------------------------------------ intermediate relations --
@dataclass
class AdjointRelation:
    """形如 (链)_L x = 期望值 的恒等式。"""

    name: str
    i: int
    j: Optional[int]
    lhs: UEAElement
    expected: UEAElement

    @property
    def holds(self) -> bool:
        return self.lhs == self.expected


def lemma_relations(l: int) -> List[AdjointRelation]:
    """推导 p_i 闭式所用的五组伴随恒等式（j ≥ 1）。"""

    uea = enveloping_algebra(check_rank(l))
    algebra = uea.algebra
    theta = uea.generator(algebra.e(1, l + 1))
    relations: List[AdjointRelation] = []

    def f_chain(indices: Iterable[int]) -> List[int]:
        return [algebra.f(t) for t in indices]

    for i in range(1, l + 1):
        relations.append(
            AdjointRelation(
                name="full_chain_on_theta",
                i=i,
                j=None,
                lhs=uea.adjoint_chain(adjoint_chain_indices(l, i), theta),
                expected=uea.generator(algebra.h(i), (-1) ** i),
            )
        )
        for j in range(1, i):
            relations.append(
                AdjointRelation(
                    name="descending_chain_to_f",
                    i=i,
                    j=j,
                    lhs=uea.adjoint_chain(f_chain(range(i, 0, -1)), uea.generator(algebra.e(1, j + 1))),
                    expected=uea.generator(algebra.f(j + 1, i + 1), (-1) ** i),
                )
            )
            relations.append(
                AdjointRelation(
                    name="ascending_chain_to_e",
                    i=i,
                    j=j,
                    lhs=uea.adjoint_chain(f_chain(range(i + 1, l + 1)), uea.generator(algebra.e(j + 1, l + 1))),
                    expected=uea.generator(algebra.e(j + 1, i + 1)),
                )
            )
        for j in range(1, i - 1):
            relations.append(
                AdjointRelation(
                    name="shorter_descending_chain_to_f",
                    i=i,
                    j=j,
                    lhs=uea.adjoint_chain(f_chain(range(i - 1, 0, -1)), uea.generator(algebra.e(1, j + 1))),
                    expected=uea.generator(algebra.f(j + 1, i), (-1) ** (i - 1)),
                )
            )
            relations.append(
                AdjointRelation(
                    name="longer_ascending_chain_to_e",
                    i=i,
                    j=j,
                    lhs=uea.adjoint_chain(f_chain(range(i, l + 1)), uea.generator(algebra.e(j + 1, l + 1))),
                    expected=uea.generator(algebra.e(j + 1, i)),
                )
            )
    return relations
