"""稀疏有理线性组合的公共小工具。"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Mapping, TypeVar

K = TypeVar("K", bound=Hashable)


def accumulate(target: Dict[K, Fraction], source: Mapping[K, Fraction], scale: Fraction = Fraction(1)) -> None:
    """target += scale * source，就地删除零系数。"""

    if not scale:
        return
    for key, value in source.items():
        total = target.get(key, 0) + scale * value
        if total:
            target[key] = total
        else:
            target.pop(key, None)


def cleaned(terms: Mapping[K, object]) -> Dict[K, Fraction]:
    result: Dict[K, Fraction] = {}
    for key, value in terms.items():
        value = Fraction(value)
        if value:
            result[key] = value
    return result


def format_rational(value: Fraction) -> str:
    """规范的 "p/q" 文本，整数写作 "p"。"""

    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_coefficient(coeff: Fraction, body: str, first: bool) -> str:
    """渲染线性组合中的一项，body 为空表示常数项。"""

    sign = "-" if coeff < 0 else ("" if first else "+")
    magnitude = abs(coeff)
    if not body:
        text = format_rational(magnitude)
    elif magnitude == 1:
        text = body
    else:
        text = f"{format_rational(magnitude)}*{body}"
    if first:
        return f"{sign}{text}"
    return f" {sign} {text}"
