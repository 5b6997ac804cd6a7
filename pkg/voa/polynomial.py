"""S(h) 中的多项式：变量 h_1…h_l，精确有理系数。"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import sympy

from .root_system import Weight
from .sparse import accumulate, cleaned, format_coefficient

Exponents = Tuple[int, ...]


@dataclass(eq=False)
class CartanPolynomial:
    """稀疏多项式：指数向量 → 有理系数，不保存零系数。"""

    rank: int
    terms: Dict[Exponents, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.terms = cleaned(self.terms)
        for exps in self.terms:
            if len(exps) != self.rank or any(e < 0 for e in exps):
                raise ValueError(f"指数向量 {exps} 与秩 {self.rank} 不符")

    # ------------------------------------------------------ constructors --
    @classmethod
    def zero(cls, l: int) -> "CartanPolynomial":
        return cls(l)

    @classmethod
    def constant(cls, l: int, value: object) -> "CartanPolynomial":
        return cls(l, {(0,) * l: Fraction(value)})

    @classmethod
    def variable(cls, l: int, i: int) -> "CartanPolynomial":
        return cls(l, {tuple(int(t == i) for t in range(1, l + 1)): Fraction(1)})

    @classmethod
    def linear(cls, l: int, coeffs: Mapping[int, object], const: object = 0) -> "CartanPolynomial":
        poly = cls.constant(l, const)
        for i, c in coeffs.items():
            poly = poly + cls.variable(l, i).scale(c)
        return poly

    # -------------------------------------------------------- arithmetic --
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CartanPolynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "CartanPolynomial") -> None:
        if self.rank != other.rank:
            raise ValueError(f"变量个数不一致：{self.rank} 与 {other.rank}")

    def __add__(self, other: "CartanPolynomial") -> "CartanPolynomial":
        self._check(other)
        total = dict(self.terms)
        accumulate(total, other.terms)
        return CartanPolynomial(self.rank, total)

    def __sub__(self, other: "CartanPolynomial") -> "CartanPolynomial":
        return self + other.scale(-1)

    def __neg__(self) -> "CartanPolynomial":
        return self.scale(-1)

    def scale(self, factor: object) -> "CartanPolynomial":
        factor = Fraction(factor)
        return CartanPolynomial(self.rank, {e: factor * c for e, c in self.terms.items()})

    def __mul__(self, other: "CartanPolynomial") -> "CartanPolynomial":
        self._check(other)
        product: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                accumulate(product, {tuple(a + b for a, b in zip(e1, e2)): c1 * c2})
        return CartanPolynomial(self.rank, product)

    @property
    def degree(self) -> int:
        """零多项式的次数记为 −1。"""

        return max((sum(e) for e in self.terms), default=-1)

    # ------------------------------------------------------- evaluation --
    def evaluate(self, values: Sequence[object]) -> Fraction:
        """在 h_i = values[i−1] 处求值。"""

        if len(values) != self.rank:
            raise ValueError(f"需要 {self.rank} 个值，得到 {len(values)} 个")
        points = [Fraction(v) for v in values]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for value, power in zip(points, exps):
                if power:
                    term *= value**power
            total += term
        return total

    def evaluate_weight(self, mu: Weight) -> Fraction:
        return self.evaluate(mu.coords)

    def restrict(self, zero_vars: Iterable[int]) -> "CartanPolynomial":
        """令 zero_vars 中的变量为 0。"""

        zeros = [i - 1 for i in zero_vars]
        return CartanPolynomial(
            self.rank, {e: c for e, c in self.terms.items() if not any(e[z] for z in zeros)}
        )

    def divide_by_monomial(self, exps: Exponents) -> "CartanPolynomial":
        """整除单项式 h^exps；有项不可整除时抛出 ValueError。"""

        quotient: Dict[Exponents, Fraction] = {}
        for term_exps, coeff in self.terms.items():
            reduced = tuple(a - b for a, b in zip(term_exps, exps))
            if any(r < 0 for r in reduced):
                raise ValueError(f"{term_exps} 不能被 {exps} 整除")
            quotient[reduced] = coeff
        return CartanPolynomial(self.rank, quotient)

    def linear_form(self) -> Tuple[Fraction, Dict[int, Fraction]]:
        """一次多项式的 (常数项, {i: h_i 的系数})。"""

        if self.degree > 1:
            raise ValueError(f"不是一次多项式：{self}")
        const = Fraction(0)
        coeffs: Dict[int, Fraction] = {}
        for exps, coeff in self.terms.items():
            if not any(exps):
                const = coeff
            else:
                coeffs[exps.index(1) + 1] = coeff
        return const, coeffs

    def substitute_affine(self, assignment: Mapping[int, Tuple[Fraction, Fraction]]) -> List[Fraction]:
        """代入 h_i = a_i + b_i·t，返回关于 t 的系数表 [c_0, c_1, …]。

        未出现在 assignment 中的变量必须不出现在多项式里。
        """

        result: List[Fraction] = [Fraction(0)]
        for exps, coeff in self.terms.items():
            term = [coeff]
            for i, power in enumerate(exps, start=1):
                if not power:
                    continue
                if i not in assignment:
                    raise ValueError(f"变量 h{i} 没有赋值")
                const, slope = assignment[i]
                for _ in range(power):
                    term = _multiply_univariate(term, [Fraction(const), Fraction(slope)])
            if len(term) > len(result):
                result.extend([Fraction(0)] * (len(term) - len(result)))
            for k, value in enumerate(term):
                result[k] += value
        while len(result) > 1 and not result[-1]:
            result.pop()
        return result

    # --------------------------------------------------------- interop --
    def monomials(self) -> List[Exponents]:
        return sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e)))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for position, exps in enumerate(self.monomials()):
            body = "*".join(
                f"h{i}" if power == 1 else f"h{i}^{power}" for i, power in enumerate(exps, start=1) if power
            )
            parts.append(format_coefficient(self.terms[exps], body, position == 0))
        return "".join(parts)


def _multiply_univariate(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    product = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] += x * y
    return product


def span_rank(polynomials: Sequence[CartanPolynomial]) -> int:
    """多项式张成空间的维数（系数矩阵的精确秩）。"""

    if not polynomials:
        return 0
    monomials = sorted({e for p in polynomials for e in p.terms})
    rows = [[_to_sympy_rational(p.terms.get(e, Fraction(0))) for e in monomials] for p in polynomials]
    if not monomials:
        return 0
    return sympy.Matrix(rows).rank()


def _to_sympy_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def rational_roots(coeffs: Sequence[Fraction]) -> Tuple[List[Fraction], int]:
    """一元多项式 Σ coeffs[k] t^k 的有理根（去重）及被舍弃的非有理根个数（计重数）。"""

    t = sympy.Symbol("t")
    poly = sympy.Poly([_to_sympy_rational(c) for c in reversed(list(coeffs))], t, domain="QQ")
    if poly.is_zero:
        raise ValueError("零多项式没有有限根集")
    found = poly.ground_roots()
    rational = sorted(Fraction(int(r.p), int(r.q)) for r in found)
    discarded = poly.degree() - sum(found.values())
    return rational, discarded
