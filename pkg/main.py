"""recoverybound - 恢复保真度界的数值验证与图表数据"""
import sys
from pathlib import Path

from src.cli import run


def print_banner():
    """打印启动横幅（stderr，避免污染数据输出）"""
    banner_path = Path(__file__).parent / "banner.txt"
    if banner_path.exists():
        print(banner_path.read_text(), file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    if sys.stderr.isatty():
        print_banner()
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
