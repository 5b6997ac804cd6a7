"""运行配置与结论枚举。"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

DEFAULT_L_CAP = 12
DEFAULT_MAX_M = 50
DEFAULT_PI_MAX_M = 10


class ConfigError(ValueError):
    """命令行或 HTTP 参数不合法。"""


class Outcome(str, Enum):
    """验证结论。"""

    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"

    @classmethod
    def combine(cls, *outcomes: "Outcome") -> "Outcome":
        if any(o == cls.FAIL for o in outcomes):
            return cls.FAIL
        if any(o == cls.INCONCLUSIVE for o in outcomes):
            return cls.INCONCLUSIVE
        return cls.PASS

    @classmethod
    def of(cls, ok: bool) -> "Outcome":
        return cls.PASS if ok else cls.FAIL


class ReportFormat(str, Enum):
    JSON = "json"
    MARKDOWN = "md"


@dataclass(slots=True)
class RunConfig:
    """一次运行的全部可调参数。"""

    l: int
    max_m: int = DEFAULT_MAX_M
    pi_max_m: int = DEFAULT_PI_MAX_M
    subset: Optional[Tuple[int, ...]] = None
    l_cap: int = DEFAULT_L_CAP
    unsafe_large: bool = False
    report_format: ReportFormat = ReportFormat.JSON
    include_timing: bool = False
    closure_margin: int = 8

    def validate(self) -> "RunConfig":
        if isinstance(self.l, bool) or not isinstance(self.l, int) or self.l < 2 or self.l % 2:
            raise ConfigError(f"l 须为不小于 2 的偶数：{self.l}")
        if self.l > self.l_cap and not self.unsafe_large:
            raise ConfigError(f"l={self.l} 超过上限 {self.l_cap}，如确需运行请加 --unsafe-large")
        if self.max_m < 2:
            raise ConfigError(f"max_m 至少为 2：{self.max_m}")
        if self.pi_max_m < 0:
            raise ConfigError("pi_max_m 须非负")
        if self.max_m > DEFAULT_MAX_M and not self.unsafe_large:
            raise ConfigError(f"max_m={self.max_m} 超过默认上限 {DEFAULT_MAX_M}，如确需运行请加 --unsafe-large")
        if self.subset is not None:
            if any(not 1 <= i <= self.l for i in self.subset):
                raise ConfigError(f"子集元素须在 1..{self.l} 内：{self.subset}")
            if len(set(self.subset)) != len(self.subset):
                raise ConfigError(f"子集元素不能重复：{self.subset}")
            self.subset = tuple(sorted(self.subset))
        return self

    def params(self) -> dict:
        """报告中的 params 字段。"""

        return {
            "l": self.l,
            "max_m": self.max_m,
            "subset": list(self.subset) if self.subset is not None else None,
        }


def parse_subset(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    """"1,3" → (1, 3)；None 表示不过滤，空串表示空集。"""

    if text is None:
        return None
    text = text.strip().strip("{}")
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"无法解析子集：{text!r}") from exc
