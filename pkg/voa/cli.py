"""命令行入口：voa <命令> --l L [选项]。"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .models import DEFAULT_L_CAP, DEFAULT_MAX_M, DEFAULT_PI_MAX_M, ConfigError, Outcome, ReportFormat, RunConfig, parse_subset
from .pipeline import COMMANDS, Verifier
from .report import dumps, render_markdown
from .templates import TemplateRepository

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--l", type=int, required=True, help="秩 l（偶数，≥ 2）")
    common.add_argument("--max-m", type=int, default=DEFAULT_MAX_M, help="δ 系数截断")
    common.add_argument("--l-cap", type=int, default=DEFAULT_L_CAP, help="l 的上限")
    common.add_argument("--unsafe-large", action="store_true", help="允许超过 l 与 max_m 的上限")
    common.add_argument("--format", choices=[f.value for f in ReportFormat], default=ReportFormat.JSON.value)
    common.add_argument("--out", type=Path, default=None, help="报告输出文件，缺省写到标准输出")
    common.add_argument("--timing", action="store_true", help="在报告中写入耗时")
    common.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--subset", default=None, help='只看一个支撑集，如 "1,3"')
    common.add_argument("--pi-max-m", type=int, default=DEFAULT_PI_MAX_M, help="Π̂^∨_λ 极小性检查的截断")
    common.add_argument("--templates", type=Path, default=None, help="markdown 模板目录")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="voa", description="A_l^(1) 在水平 −(l+1)/2 上的精确验证")
    common = _common_options()
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "verify-singular": "检查奇异向量被 e_j(0) 与 f_θ(1) 零化",
        "zhu": "比较 F([v]) 与显式 v′",
        "polynomials": "计算 p_1…p_l 并核对 R、R₀ 与闭式",
        "classify": "枚举支撑集，分类全部不可约最高权",
        "admissible": "验证 λ_S 的可容许性与 Π̂^∨_λ",
        "all": "按依赖顺序运行全部验证",
    }
    for command in COMMANDS:
        sub.add_parser(command, parents=[common], help=helps[command])
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        l=args.l,
        max_m=args.max_m,
        pi_max_m=args.pi_max_m,
        subset=parse_subset(args.subset),
        l_cap=args.l_cap,
        unsafe_large=args.unsafe_large,
        report_format=ReportFormat(args.format),
        include_timing=args.timing,
    ).validate()


def run_cli(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT, stream=sys.stderr)

    try:
        config = config_from_args(args)
    except ConfigError as exc:
        parser.error(str(exc))

    if hasattr(sys.stdout, "reconfigure"):
        try:
            sys.stdout.reconfigure(encoding="utf-8")
        except ValueError:
            pass

    report = Verifier(config).run(args.command)
    if config.report_format is ReportFormat.MARKDOWN:
        repo = TemplateRepository(args.templates) if args.templates else TemplateRepository()
        text = render_markdown(report, repo, config.include_timing)
    else:
        text = dumps(report, config.include_timing)

    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.outcome is Outcome.PASS else EXIT_FAILED


def main() -> None:
    sys.exit(run_cli())


__all__ = ["build_parser", "run_cli", "main"]
