"""A_l 型根系的组合数据：根、单根、基本权、Weyl 向量与有限配对。

权一律以基本权 ω_1…ω_l 为坐标，系数为精确有理数。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from .sparse import format_rational


class RankError(ValueError):
    """秩 l 或根指标不合法。"""


def check_rank(l: int) -> int:
    """l 必须是不小于 2 的偶数。"""

    if isinstance(l, bool) or not isinstance(l, int) or l < 2 or l % 2:
        raise RankError(f"秩须为不小于 2 的偶数：{l!r}")
    return l


@dataclass(frozen=True, slots=True)
class RootIndex:
    """根 ε_i − ε_j（i ≠ j），i < j 时为正根。"""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < 1 or self.i == self.j:
            raise RankError(f"非法根指标：({self.i}, {self.j})")

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    def negate(self) -> "RootIndex":
        return RootIndex(self.j, self.i)

    @property
    def height(self) -> int:
        """带符号高度：正根为 j − i，负根为其相反数。"""

        return self.j - self.i

    def check_rank(self, l: int) -> None:
        if max(self.i, self.j) > l + 1:
            raise RankError(f"根 ({self.i}, {self.j}) 超出 A_{l} 的范围")

    def coroot_coordinates(self, l: int) -> Tuple[int, ...]:
        """α^∨ 在单余根 α_1^∨…α_l^∨ 下的坐标。"""

        self.check_rank(l)
        low, high = sorted((self.i, self.j))
        sign = 1 if self.is_positive else -1
        return tuple(sign if low <= t < high else 0 for t in range(1, l + 1))

    def __str__(self) -> str:
        return f"e{self.i}-e{self.j}"


@dataclass(frozen=True, slots=True)
class Weight:
    """sl(l+1) 的有限权，坐标为 ω_1…ω_l 的系数。"""

    rank: int
    coords: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        check_rank(self.rank)
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != self.rank:
            raise RankError(f"权的坐标个数 {len(coords)} 与秩 {self.rank} 不符")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, l: int) -> "Weight":
        return cls(l, (Fraction(0),) * l)

    @classmethod
    def fundamental(cls, l: int, i: int) -> "Weight":
        if not 1 <= i <= l:
            raise RankError(f"基本权指标越界：{i}")
        return cls(l, tuple(Fraction(int(t == i)) for t in range(1, l + 1)))

    @classmethod
    def from_support(cls, l: int, values: dict) -> "Weight":
        """由 {i: h_i} 构造，未出现的坐标为 0。"""

        return cls(l, tuple(Fraction(values.get(t, 0)) for t in range(1, l + 1)))

    def coord(self, i: int) -> Fraction:
        return self.coords[i - 1]

    def _check_same_rank(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise RankError(f"秩不一致：{self.rank} 与 {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_same_rank(other)
        return Weight(self.rank, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_same_rank(other)
        return Weight(self.rank, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(self.rank, tuple(-a for a in self.coords))

    def scale(self, factor: Fraction) -> "Weight":
        factor = Fraction(factor)
        return Weight(self.rank, tuple(factor * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords, start=1) if c)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c:
                parts.append(f"{format_rational(c)}*w{i}")
        return " + ".join(parts)


def simple_roots(l: int) -> List[RootIndex]:
    """α_p = ε_p − ε_{p+1}，p = 1…l。"""

    check_rank(l)
    return [RootIndex(p, p + 1) for p in range(1, l + 1)]


def highest_root(l: int) -> RootIndex:
    """θ = ε_1 − ε_{l+1}。"""

    check_rank(l)
    return RootIndex(1, l + 1)


def positive_roots(l: int) -> List[RootIndex]:
    check_rank(l)
    return [RootIndex(i, j) for i in range(1, l + 2) for j in range(i + 1, l + 2)]


def all_roots(l: int) -> List[RootIndex]:
    positives = positive_roots(l)
    return positives + [alpha.negate() for alpha in positives]


def pairing(mu: Weight, alpha: RootIndex) -> Fraction:
    """(μ, α) = ⟨μ, α^∨⟩，对正根是 coords[i..j−1] 之和。"""

    alpha.check_rank(mu.rank)
    if not alpha.is_positive:
        return -pairing(mu, alpha.negate())
    return sum(mu.coords[alpha.i - 1 : alpha.j - 1], Fraction(0))


def weyl_vector(l: int) -> Weight:
    """ρ̄ = ω_1 + … + ω_l。"""

    check_rank(l)
    return Weight(l, (Fraction(1),) * l)


def root_weight(l: int, alpha: RootIndex) -> Weight:
    """根 ε_i − ε_j 在基本权坐标下的表示（即 Cartan 矩阵的相应组合）。"""

    alpha.check_rank(l)

    def eps_pairing(a: int, p: int) -> int:
        # ⟨ε_a, α_p^∨⟩
        return int(a == p) - int(a == p + 1)

    return Weight(l, tuple(Fraction(eps_pairing(alpha.i, p) - eps_pairing(alpha.j, p)) for p in range(1, l + 1)))


def is_dominant_integral(mu: Weight) -> bool:
    return all(c.denominator == 1 and c >= 0 for c in mu.coords)


def sum_weights(l: int, weights: Iterable[Weight]) -> Weight:
    total = Weight.zero(l)
    for weight in weights:
        total = total + weight
    return total
