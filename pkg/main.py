"""项目命令行入口。"""

import sys

from voa import run_cli


def main() -> None:
    """执行命令行验证。"""

    sys.exit(run_cli())


if __name__ == "__main__":
    main()
