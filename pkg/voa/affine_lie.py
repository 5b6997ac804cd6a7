"""仿射化 ĝ = g ⊗ C[t, t⁻¹] ⊕ Cc：圈元素、带上循环的括号、仿射权与实根。"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .finite_lie import LieElement, RankMismatchError, bracket, invariant_form
from .root_system import (
    RootIndex,
    Weight,
    all_roots,
    check_rank,
    highest_root,
    pairing,
    positive_roots,
    root_weight,
    weyl_vector,
)
from .sparse import format_rational


@dataclass(frozen=True)
class LoopTerm:
    """x(n) = x ⊗ t^n。"""

    x: LieElement
    n: int

    def __post_init__(self) -> None:
        if self.x.is_zero():
            raise ValueError("LoopTerm 的 x 不能为零")

    def __str__(self) -> str:
        return f"({self.x})({self.n})"


@dataclass(frozen=True)
class AffineElement:
    """有限个圈项加上中心元 c 的系数；同次数的项已合并。"""

    rank: int
    terms: Tuple[LoopTerm, ...] = ()
    central: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        merged: Dict[int, LieElement] = {}
        for term in self.terms:
            if term.x.rank != self.rank:
                raise RankMismatchError(f"圈项的秩 {term.x.rank} 与 {self.rank} 不符")
            merged[term.n] = merged[term.n] + term.x if term.n in merged else term.x
        canonical = tuple(LoopTerm(x, n) for n, x in sorted(merged.items()) if not x.is_zero())
        object.__setattr__(self, "terms", canonical)
        object.__setattr__(self, "central", Fraction(self.central))

    @classmethod
    def loop(cls, x: LieElement, n: int) -> "AffineElement":
        if x.is_zero():
            return cls(x.rank)
        return cls(x.rank, (LoopTerm(x, n),))

    @classmethod
    def central_element(cls, l: int, coeff: object = 1) -> "AffineElement":
        return cls(l, (), Fraction(coeff))

    def is_zero(self) -> bool:
        return not self.terms and not self.central

    def __add__(self, other: "AffineElement") -> "AffineElement":
        if self.rank != other.rank:
            raise RankMismatchError(f"秩不一致：{self.rank} 与 {other.rank}")
        return AffineElement(self.rank, self.terms + other.terms, self.central + other.central)

    def scale(self, factor: object) -> "AffineElement":
        factor = Fraction(factor)
        if not factor:
            return AffineElement(self.rank)
        return AffineElement(self.rank, tuple(LoopTerm(t.x.scale(factor), t.n) for t in self.terms), self.central * factor)

    def __sub__(self, other: "AffineElement") -> "AffineElement":
        return self + other.scale(-1)

    def __str__(self) -> str:
        parts = [str(t) for t in self.terms]
        if self.central:
            parts.append(f"{format_rational(self.central)}*c")
        return " + ".join(parts) or "0"


def affine_bracket(a: AffineElement, b: AffineElement) -> AffineElement:
    """[x(m), y(n)] = [x,y](m+n) + m·δ_{m+n,0}·(x,y)·c，双线性延拓；c 为中心。"""

    if a.rank != b.rank:
        raise RankMismatchError(f"秩不一致：{a.rank} 与 {b.rank}")
    terms: List[LoopTerm] = []
    central = Fraction(0)
    for left in a.terms:
        for right in b.terms:
            commutator = bracket(left.x, right.x)
            if not commutator.is_zero():
                terms.append(LoopTerm(commutator, left.n + right.n))
            if left.n + right.n == 0 and left.n:
                central += left.n * invariant_form(left.x, right.x)
    return AffineElement(a.rank, tuple(terms), central)


@dataclass(frozen=True, slots=True)
class AffineWeight:
    """level·Λ_0 + finite + delta·δ。"""

    level: Fraction
    finite: Weight
    delta: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "level", Fraction(self.level))
        object.__setattr__(self, "delta", Fraction(self.delta))

    @property
    def rank(self) -> int:
        return self.finite.rank

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.level + other.level, self.finite + other.finite, self.delta + other.delta)

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.level - other.level, self.finite - other.finite, self.delta - other.delta)

    def scale(self, factor: object) -> "AffineWeight":
        factor = Fraction(factor)
        return AffineWeight(self.level * factor, self.finite.scale(factor), self.delta * factor)

    def __str__(self) -> str:
        return f"{format_rational(self.level)}*L0 + ({self.finite}) + {format_rational(self.delta)}*delta"


@dataclass(frozen=True, slots=True)
class RealRoot:
    """实根 α + mδ；余根按单纯 laced 约定取 α^∨ + m·c。"""

    alpha: RootIndex
    m: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"δ 系数须非负：{self.m}")

    @property
    def is_positive(self) -> bool:
        return self.m > 0 or self.alpha.is_positive

    def coroot_coordinates(self, l: int) -> Tuple[int, ...]:
        """(α^∨ 在单余根下的坐标…, c 的系数 m)。"""

        return self.alpha.coroot_coordinates(l) + (self.m,)

    def height(self, l: int) -> int:
        """仿射高度 ht(α) + m·(l+1)。"""

        return self.alpha.height + self.m * (l + 1)

    def as_weight(self, l: int) -> AffineWeight:
        return AffineWeight(Fraction(0), root_weight(l, self.alpha), Fraction(self.m))

    def __str__(self) -> str:
        if not self.m:
            return str(self.alpha)
        return f"{self.alpha}+{self.m}delta"


def critical_shift(l: int) -> int:
    """对偶 Coxeter 数 h^∨ = l + 1。"""

    return check_rank(l) + 1


def admissible_level(l: int) -> Fraction:
    """k = −(l+1)/2。"""

    return Fraction(-(check_rank(l) + 1), 2)


def affine_rho(l: int) -> AffineWeight:
    """ρ̂ = h^∨·Λ_0 + ρ̄。"""

    return AffineWeight(Fraction(critical_shift(l)), weyl_vector(l))


def vacuum_weight(l: int) -> AffineWeight:
    """λ = −½(l+1)Λ_0。"""

    return AffineWeight(admissible_level(l), Weight.zero(l))


def affine_simple_root(l: int, p: int) -> RealRoot:
    """α_0 = δ − θ，α_p (p ≥ 1) 为有限单根。"""

    check_rank(l)
    if p == 0:
        return RealRoot(highest_root(l).negate(), 1)
    return RealRoot(RootIndex(p, p + 1), 0)


def affine_pairing(weight: AffineWeight, root: RealRoot) -> Fraction:
    """⟨Λ, (α + mδ)^∨⟩ = (Λ̄, α) + m·level(Λ)。"""

    return pairing(weight.finite, root.alpha) + root.m * weight.level


def dot_reflect(weight: AffineWeight, root: RealRoot) -> AffineWeight:
    """移位反射 r.Λ = Λ − ⟨Λ + ρ̂, r^∨⟩·r。"""

    shifted = weight + affine_rho(weight.rank)
    return weight - root.as_weight(weight.rank).scale(affine_pairing(shifted, root))


def enumerate_positive_real_roots(l: int, max_m: int) -> List[RealRoot]:
    """m ≤ max_m 的全部正实根：先 m = 0 的正根，再逐个 m 的所有根。"""

    if max_m < 0:
        raise ValueError(f"max_m 须非负：{max_m}")
    roots = [RealRoot(alpha, 0) for alpha in positive_roots(l)]
    finite = all_roots(l)
    for m in range(1, max_m + 1):
        roots.extend(RealRoot(alpha, m) for alpha in finite)
    return roots
