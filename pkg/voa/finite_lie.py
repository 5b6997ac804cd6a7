"""sl(l+1) 的矩阵实现：括号、嵌套括号根向量、余根与不变形式。

矩阵乘法是括号的唯一依据；根向量按嵌套括号定义计算，
其相对矩阵单位的符号只记录一次，后续所有构造都复用它。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from .root_system import RootIndex, Weight, check_rank, root_weight
from .sparse import accumulate, cleaned, format_rational

Position = Tuple[int, int]


class RankMismatchError(ValueError):
    """两个元素属于不同秩的李代数。"""


class RootError(ValueError):
    """根向量的指标不满足 i < j。"""


@dataclass(frozen=True)
class LieElement:
    """(l+1)×(l+1) 无迹有理矩阵，稀疏存储，不保存零元。"""

    rank: int
    entries: Tuple[Tuple[Position, Fraction], ...]

    def __post_init__(self) -> None:
        size = self.rank + 1
        trace = Fraction(0)
        for (row, col), value in self.entries:
            if not (1 <= row <= size and 1 <= col <= size):
                raise RankMismatchError(f"矩阵位置 ({row}, {col}) 超出 {size}×{size}")
            if row == col:
                trace += value
        if trace:
            raise ValueError(f"sl({size}) 的元素必须无迹，当前迹为 {trace}")

    @classmethod
    def from_dict(cls, rank: int, entries: Mapping[Position, object]) -> "LieElement":
        return cls(rank, tuple(sorted(cleaned(entries).items())))

    @classmethod
    def zero(cls, rank: int) -> "LieElement":
        return cls(rank, ())

    def as_dict(self) -> Dict[Position, Fraction]:
        return dict(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def _check(self, other: "LieElement") -> None:
        if self.rank != other.rank:
            raise RankMismatchError(f"秩不一致：{self.rank} 与 {other.rank}")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        total = self.as_dict()
        accumulate(total, other.as_dict())
        return LieElement.from_dict(self.rank, total)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + other.scale(-1)

    def __neg__(self) -> "LieElement":
        return self.scale(-1)

    def scale(self, factor: object) -> "LieElement":
        factor = Fraction(factor)
        return LieElement.from_dict(self.rank, {pos: factor * v for pos, v in self.entries})

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        return " + ".join(f"{format_rational(v)}*E{r}{c}" for (r, c), v in self.entries)


def _product(x: LieElement, y: LieElement) -> Dict[Position, Fraction]:
    """矩阵乘积 xy（结果未必无迹，故只返回字典）。"""

    by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
    for (row, col), value in y.entries:
        by_row.setdefault(row, []).append((col, value))
    result: Dict[Position, Fraction] = {}
    for (row, mid), value in x.entries:
        for col, other in by_row.get(mid, ()):
            accumulate(result, {(row, col): value * other})
    return result


def matrix_unit(l: int, row: int, col: int) -> LieElement:
    if row == col:
        raise RootError("对角矩阵单位不在 sl(l+1) 中")
    return LieElement.from_dict(l, {(row, col): 1})


def chevalley_e(l: int, i: int) -> LieElement:
    return matrix_unit(l, i, i + 1)


def chevalley_f(l: int, i: int) -> LieElement:
    return matrix_unit(l, i + 1, i)


def chevalley_h(l: int, i: int) -> LieElement:
    return LieElement.from_dict(l, {(i, i): 1, (i + 1, i + 1): -1})


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """[x, y] = xy − yx。"""

    x._check(y)
    result = _product(x, y)
    accumulate(result, _product(y, x), Fraction(-1))
    return LieElement.from_dict(x.rank, result)


def invariant_form(x: LieElement, y: LieElement) -> Fraction:
    """迹形式 tr(xy)，对 sl(l+1) 恰为 (θ, θ) = 2 归一化的不变形式。"""

    x._check(y)
    product = _product(x, y)
    return sum((v for (r, c), v in product.items() if r == c), Fraction(0))


def _single_unit(x: LieElement, position: Position) -> int:
    if len(x.entries) != 1 or x.entries[0][0] != position or abs(x.entries[0][1]) != 1:
        raise AssertionError(f"嵌套括号没有得到 {position} 处的 ±1 矩阵单位：{x}")
    return int(x.entries[0][1])


@lru_cache(maxsize=None)
def _root_vector_e(l: int, i: int, j: int) -> Tuple[LieElement, int]:
    if i >= j:
        raise RootError(f"e_(ε_{i}−ε_{j}) 要求 i < j")
    if j > l + 1:
        raise RootError(f"根 ({i}, {j}) 超出 A_{l}")
    x = chevalley_e(l, i)
    for t in range(i + 1, j):
        x = bracket(chevalley_e(l, t), x)
    return x, _single_unit(x, (i, j))


@lru_cache(maxsize=None)
def _root_vector_f(l: int, i: int, j: int) -> Tuple[LieElement, int]:
    if i >= j:
        raise RootError(f"f_(ε_{i}−ε_{j}) 要求 i < j")
    if j > l + 1:
        raise RootError(f"根 ({i}, {j}) 超出 A_{l}")
    x = chevalley_f(l, j - 1)
    for t in range(j - 2, i - 1, -1):
        x = bracket(chevalley_f(l, t), x)
    return x, _single_unit(x, (j, i))


def root_vector_e(l: int, i: int, j: int) -> LieElement:
    """e_{ε_i−ε_j} = [e_{j−1}, [e_{j−2}, … [e_{i+1}, e_i] …]]。"""

    return _root_vector_e(l, i, j)[0]


def root_vector_f(l: int, i: int, j: int) -> LieElement:
    """f_{ε_i−ε_j} = [f_i, [f_{i+1}, … [f_{j−2}, f_{j−1}] …]]。"""

    return _root_vector_f(l, i, j)[0]


def root_vector_sign(l: int, i: int, j: int) -> int:
    """e_{ε_i−ε_j} 相对矩阵单位 E_{ij} 的符号（f 的符号与之相同）。"""

    sign_e = _root_vector_e(l, i, j)[1]
    sign_f = _root_vector_f(l, i, j)[1]
    assert sign_e == sign_f, "e 与 f 的符号约定不一致"
    return sign_e


def coroot(l: int, alpha: RootIndex) -> LieElement:
    """h_α = [e_α, f_α]，只对正根定义。"""

    if not alpha.is_positive:
        raise RootError(f"余根只对正根定义：{alpha}")
    return bracket(root_vector_e(l, alpha.i, alpha.j), root_vector_f(l, alpha.i, alpha.j))


def weight_of(x: LieElement) -> Optional[Weight]:
    """x 若落在单个 ad(h) 权空间中则返回该权，否则（含零元）返回 None。"""

    weights = set()
    for (row, col), _ in x.entries:
        if row == col:
            weights.add(Weight.zero(x.rank))
        else:
            weights.add(root_weight(x.rank, RootIndex(row, col)))
    if len(weights) != 1:
        return None
    return weights.pop()


@dataclass(frozen=True, slots=True)
class BasisElement:
    """PBW 全局基中的一个元素。kind ∈ {"f", "h", "e"}。"""

    index: int
    kind: str
    label: Tuple[int, ...]
    element: LieElement
    weight: Weight

    @property
    def name(self) -> str:
        if self.kind == "h":
            return f"h{self.label[0]}"
        i, j = self.label
        if j == i + 1:
            return f"{self.kind}{i}"
        return f"{self.kind}({i},{j})"


class LieAlgebraA:
    """sl(l+1) 及其 PBW 全局基：f 按 (i,j) 字典序，然后 h_1…h_l，然后 e 按 (i,j) 字典序。"""

    def __init__(self, l: int) -> None:
        self.l = check_rank(l)
        self.basis: List[BasisElement] = []
        self._e_index: Dict[Tuple[int, int], int] = {}
        self._f_index: Dict[Tuple[int, int], int] = {}
        self._h_index: Dict[int, int] = {}
        self._bracket_cache: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        self._form_cache: Dict[Tuple[int, int], Fraction] = {}
        pairs = [(i, j) for i in range(1, l + 2) for j in range(i + 1, l + 2)]
        for i, j in pairs:
            self._f_index[(i, j)] = self._append("f", (i, j), root_vector_f(l, i, j))
        for i in range(1, l + 1):
            self._h_index[i] = self._append("h", (i,), chevalley_h(l, i))
        for i, j in pairs:
            self._e_index[(i, j)] = self._append("e", (i, j), root_vector_e(l, i, j))

    def _append(self, kind: str, label: Tuple[int, ...], element: LieElement) -> int:
        index = len(self.basis)
        weight = weight_of(element) if kind != "h" else Weight.zero(self.l)
        self.basis.append(BasisElement(index=index, kind=kind, label=label, element=element, weight=weight))
        return index

    @property
    def dimension(self) -> int:
        return len(self.basis)

    # ------------------------------------------------------------ lookup --
    def e(self, i: int, j: Optional[int] = None) -> int:
        """e_{ε_i−ε_j} 的基指标；只给 i 时为 Chevalley 生成元 e_i。"""

        return self._e_index[(i, i + 1 if j is None else j)]

    def f(self, i: int, j: Optional[int] = None) -> int:
        return self._f_index[(i, i + 1 if j is None else j)]

    def h(self, i: int) -> int:
        return self._h_index[i]

    def theta(self) -> Tuple[int, int]:
        return (1, self.l + 1)

    def kind(self, index: int) -> str:
        return self.basis[index].kind

    def name(self, index: int) -> str:
        return self.basis[index].name

    def chevalley_generators(self) -> List[int]:
        """e_1…e_l, f_1…f_l 的基指标。"""

        return [self.e(i) for i in range(1, self.l + 1)] + [self.f(i) for i in range(1, self.l + 1)]

    # ------------------------------------------------------ coordinates --
    def decompose(self, x: LieElement) -> Dict[int, Fraction]:
        """把 x 写成 PBW 基的有理组合。"""

        if x.rank != self.l:
            raise RankMismatchError(f"秩不一致：{x.rank} 与 {self.l}")
        coords: Dict[int, Fraction] = {}
        diagonal: Dict[int, Fraction] = {}
        for (row, col), value in x.entries:
            if row == col:
                diagonal[row] = value
            elif row < col:
                coords[self._e_index[(row, col)]] = value * root_vector_sign(self.l, row, col)
            else:
                coords[self._f_index[(col, row)]] = value * root_vector_sign(self.l, col, row)
        running = Fraction(0)
        # h_k 的系数是前 k 个对角元之和
        for k in range(1, self.l + 1):
            running += diagonal.get(k, Fraction(0))
            if running:
                coords[self._h_index[k]] = running
        return coords

    def compose(self, coords: Mapping[int, Fraction]) -> LieElement:
        total: Dict[Position, Fraction] = {}
        for index, coeff in coords.items():
            accumulate(total, self.basis[index].element.as_dict(), Fraction(coeff))
        return LieElement.from_dict(self.l, total)

    def bracket_coords(self, a: int, b: int) -> Dict[int, Fraction]:
        """[b_a, b_b] 的基坐标（缓存）。"""

        key = (a, b)
        cached = self._bracket_cache.get(key)
        if cached is None:
            cached = self.decompose(bracket(self.basis[a].element, self.basis[b].element))
            self._bracket_cache[key] = cached
        return cached

    def form_coords(self, a: int, b: int) -> Fraction:
        key = (a, b)
        cached = self._form_cache.get(key)
        if cached is None:
            cached = invariant_form(self.basis[a].element, self.basis[b].element)
            self._form_cache[key] = cached
        return cached


@lru_cache(maxsize=None)
def lie_algebra(l: int) -> LieAlgebraA:
    """按秩缓存的 sl(l+1) 实例。"""

    return LieAlgebraA(l)


def simple_coroot_sum(l: int, alpha: RootIndex) -> LieElement:
    """h_i + … + h_{j−1}，用于与 coroot(α) 对照。"""

    total = LieElement.zero(l)
    for p in range(alpha.i, alpha.j):
        total = total + chevalley_h(l, p)
    return total


__all__ = [
    "BasisElement",
    "LieAlgebraA",
    "LieElement",
    "RankMismatchError",
    "RootError",
    "bracket",
    "chevalley_e",
    "chevalley_f",
    "chevalley_h",
    "coroot",
    "invariant_form",
    "lie_algebra",
    "matrix_unit",
    "root_vector_e",
    "root_vector_f",
    "root_vector_sign",
    "simple_coroot_sum",
    "weight_of",
]
