"""只读的 HTTP 报告接口。"""

from __future__ import annotations

import logging

from flask import Flask, Response, jsonify, request

from .models import DEFAULT_MAX_M, DEFAULT_PI_MAX_M, ConfigError, RunConfig, parse_subset
from .pipeline import COMMANDS, Verifier
from .report import dumps

logger = logging.getLogger(__name__)

app = Flask(__name__)
app.json.ensure_ascii = False


def _int_arg(name: str, default: int | None = None) -> int:
    raw = request.args.get(name)
    if raw is None:
        if default is None:
            raise ConfigError(f"缺少参数 {name}")
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"参数 {name} 须为整数：{raw!r}") from exc


def _config_from_request() -> RunConfig:
    return RunConfig(
        l=_int_arg("l"),
        max_m=_int_arg("max_m", DEFAULT_MAX_M),
        pi_max_m=_int_arg("pi_max_m", DEFAULT_PI_MAX_M),
        subset=parse_subset(request.args.get("subset")),
    ).validate()


@app.route("/", methods=["GET"])
def index():
    """API首页。"""
    return jsonify({
        "name": "A_l^(1) 水平 −(l+1)/2 精确验证服务",
        "version": "1.0.0",
        "endpoints": {
            f"GET /reports/{command}": "参数 l（必填）、max_m、pi_max_m、subset" for command in COMMANDS
        },
    })


@app.route("/reports/<command>", methods=["GET"])
def get_report(command: str):
    """运行一个验证命令并返回与命令行相同的 JSON 报告。"""
    if command not in COMMANDS:
        return jsonify({"error": f"未知命令：{command}"}), 404

    try:
        config = _config_from_request()
    except ConfigError as exc:
        return jsonify({"error": str(exc)}), 400

    report = Verifier(config).run(command)
    body = dumps(report)
    logger.info("GET /reports/%s l=%d → %s", command, config.l, report.outcome.value)
    return Response(body, mimetype="application/json")


def run_server(host: str = "127.0.0.1", port: int = 3001, debug: bool = False):
    """启动Web服务器。"""
    app.run(host=host, port=port, debug=debug)


if __name__ == "__main__":
    run_server()
