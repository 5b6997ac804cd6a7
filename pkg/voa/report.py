"""报告结构、确定性 JSON 序列化与 markdown 渲染。"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .models import Outcome
from .sparse import format_rational
from .templates import TemplateRepository

SCHEMA_VERSION = 1


@dataclass
class Report:
    command: str
    params: Dict[str, Any]
    outcome: Outcome
    payload: Dict[str, Any] = field(default_factory=dict)
    timing_ms: Optional[float] = None

    def as_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        payload = self.payload
        if "sections" in payload:
            payload = {**payload, "sections": [s.as_dict(include_timing) for s in payload["sections"]]}
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "params": self.params,
            "outcome": self.outcome,
            "payload": payload,
            "timing_ms": round(self.timing_ms, 3) if include_timing and self.timing_ms is not None else None,
        }


def to_jsonable(value: Any) -> Any:
    """Fraction → "p/q"，元组 → 列表，枚举 → 值，dataclass → dict；其余对象用 str。"""

    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((to_jsonable(v) for v in value), key=str)
    if is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in fields(value)}
    return str(value)


def dumps(report: Report, include_timing: bool = False) -> str:
    data = to_jsonable(report.as_dict(include_timing))
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ------------------------------------------------------------ markdown --
def _table(headers: List[str], rows: List[List[Any]]) -> str:
    lines = ["| " + " | ".join(headers) + " |", "|" + "---|" * len(headers)]
    for row in rows:
        lines.append("| " + " | ".join(str(to_jsonable(cell)) for cell in row) + " |")
    return "\n".join(lines)


def _classify_body(payload: Dict[str, Any], repo: TemplateRepository) -> str:
    rows = [
        [r["support"], r["mu"], r["solved"], "是" if r["dominant_integral"] else "否", r["elimination_factor"]]
        for r in payload.get("rows", [])
    ]
    return repo.render(
        "classify",
        table=_table(["S", "μ_S", "求解结果", "支配整权", "消元因子"], rows),
        count=len(rows),
        dominant=", ".join(payload.get("dominant_supports", [])) or "无",
    )


def _admissible_body(payload: Dict[str, Any], repo: TemplateRepository) -> str:
    rows = [
        [r["support"], r["verdict"], len(r["violations"]), r["rank_of_span"], r["last_nonpositive_m"]]
        for r in payload.get("supports", [])
    ]
    pi = payload.get("pi_check", {})
    return repo.render(
        "admissible",
        table=_table(["S", "结论", "违例数", "整配对余根秩", "最大非正 m"], rows),
        pi_minimal=", ".join(pi.get("minimal", [])),
        pi_outcome=pi.get("outcome", ""),
    )


def _generic_body(payload: Dict[str, Any], repo: TemplateRepository) -> str:
    return repo.render("payload", payload=json.dumps(to_jsonable(payload), sort_keys=True, indent=2, ensure_ascii=False))


_BODIES = {
    "classify": _classify_body,
    "admissible": _admissible_body,
}


def render_markdown(report: Report, repo: Optional[TemplateRepository] = None, include_timing: bool = False) -> str:
    repo = repo or TemplateRepository()
    data = to_jsonable(report.as_dict(include_timing))
    if report.command == "all":
        body = "\n\n".join(
            render_markdown(sub, repo, include_timing) for sub in report.payload.get("sections", [])
        )
    else:
        body = _BODIES.get(report.command, _generic_body)(data["payload"], repo)
    return repo.render(
        "report",
        command=report.command,
        outcome=data["outcome"],
        params=", ".join(f"{k}={v}" for k, v in sorted(data["params"].items())),
        timing="" if data["timing_ms"] is None else f"耗时 {data['timing_ms']} ms",
        body=body,
    )

