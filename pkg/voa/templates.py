"""报告模板的加载与渲染。"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable

DEFAULT_TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"


class TemplateNotFoundError(KeyError):
    pass


@dataclass
class TemplateRepository:
    """负责加载 templates/ 目录下的所有 markdown 模板。"""

    base_dir: Path = DEFAULT_TEMPLATE_DIR
    _cache: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.base_dir = Path(self.base_dir).resolve()
        if not self.base_dir.is_dir():
            raise FileNotFoundError(f"未找到 templates 目录：{self.base_dir}")

    def load(self) -> None:
        if self._cache:
            return
        for file in sorted(self.base_dir.glob("*.md")):
            self._cache[file.stem] = file.read_text(encoding="utf-8")

    def list_templates(self) -> Iterable[str]:
        self.load()
        return sorted(self._cache.keys())

    def get(self, name: str) -> str:
        self.load()
        key = name.removesuffix(".md")
        if key not in self._cache:
            raise TemplateNotFoundError(name)
        return self._cache[key]

    def render(self, name: str, **kwargs: object) -> str:
        return self.get(name).format(**kwargs)
