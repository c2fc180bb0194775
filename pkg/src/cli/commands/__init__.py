"""命令行命令模块。"""
from __future__ import annotations

import argparse
from pathlib import Path

from src.core import FIG3_GAMMAS, FIG4_FE_PREV

from .base import COMMANDS, ReportAPIBase, RunConfig, float_list
from .compute import ComputeCommandsMixin
from .figures import FigureCommandsMixin
from .verify import VerifyCommandsMixin


class ReportAPI(
    VerifyCommandsMixin,
    ComputeCommandsMixin,
    FigureCommandsMixin,
    ReportAPIBase,
):
    """recoverybound 命令行 API - 组合所有命令"""

    pass


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="随机种子（默认取 RECOVERYBOUND_SEED）")
    common.add_argument("--workers", type=int, default=None, help="并行线程数")
    common.add_argument("--log-level", default=None, help="日志级别，如 DEBUG/INFO")
    common.add_argument("--out", type=Path, default=None, help="输出文件路径")
    return common


def build_parser(api: ReportAPI) -> argparse.ArgumentParser:
    """构建命令解析器，每个子命令绑定到 api 的处理方法"""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="recoverybound",
        description="不完全噪声知识下量子态恢复的数值界",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    # 图表数据
    p = sub.add_parser("fig3", parents=[common], help="旁观者估计下的保真度损失")
    p.add_argument("--gammas", type=float_list, default=list(FIG3_GAMMAS))
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--grid", type=float, default=None)
    p.set_defaults(handler=api.fig3)

    p = sub.add_parser("fig4", parents=[common], help="多周期上界区域")
    p.add_argument("--fe-prev", type=float_list, default=list(FIG4_FE_PREV))
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--grid", type=float, default=None)
    p.set_defaults(handler=api.fig4)

    p = sub.add_parser("fig5", parents=[common], help="各恢复方案的保真度比较")
    p.add_argument("--grid", type=float, default=None)
    p.set_defaults(handler=api.fig5)

    p = sub.add_parser("table", parents=[common], help="低阶展开系数表")
    p.add_argument("--with-sdp", action="store_true", help="附加数值最优恢复的拟合")
    p.set_defaults(handler=api.table)

    # 信道文件计算
    p = sub.add_parser("diamond", parents=[common], help="两个信道的菱形距离估计")
    p.add_argument("--a", type=Path, required=True)
    p.add_argument("--b", type=Path, required=True)
    p.add_argument("--starts", type=int, default=api.config.diamond.starts)
    p.add_argument("--max-iters", type=int, default=api.config.diamond.max_iters)
    p.set_defaults(handler=api.diamond)

    p = sub.add_parser("fe", parents=[common], help="纠缠保真度")
    p.add_argument("--channel", type=Path, required=True)
    p.set_defaults(handler=api.fe)

    p = sub.add_parser("optimize-recovery", parents=[common], help="数值最优恢复")
    p.add_argument("--channel", type=Path, required=True)
    p.add_argument("--starts", type=int, default=api.config.recovery.starts)
    p.add_argument("--max-iters", type=int, default=api.config.recovery.max_iters)
    p.add_argument("--env-dim", type=int, default=None)
    p.set_defaults(handler=api.optimize_recovery)

    # 验证
    p = sub.add_parser("verify", parents=[common], help="运行全部性质检查")
    p.add_argument("--filter", default=None, help="按名称过滤（子串或通配符）")
    p.add_argument("--quick", action="store_true", help="减少样本数")
    p.add_argument("--list", action="store_true", help="仅列出检查名称")
    p.set_defaults(handler=api.verify)

    return parser


__all__ = [
    "COMMANDS",
    "ReportAPI",
    "RunConfig",
    "build_parser",
    "float_list",
]
