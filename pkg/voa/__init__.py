"""A_l^(1) 在水平 −(l+1)/2（l 为偶数）上的顶点算子代数数据：精确计算与验证。"""

from .cli import run_cli
from .web import run_server

__all__ = ["run_cli", "run_server"]
