"""Numerical constants and defaults for recoverybound."""

# 输出目录名，相对运行时的工作目录解析
OUTPUT_DIRNAME = "out"

# 容差
TOL_CPTP = 1e-9
TOL_PSD = -1e-9
TOL_REPORT = 1e-6
PRUNE_TOL = 1e-12

# 稠密表示的维度上限（4 比特码 + 环境足够）
DIM_CAP = 64

# 图表默认参数
DEFAULT_GRID_STEP = 0.005
FIG3_GAMMAS = (1.0, 2.0, 5.0, 10.0)
FIG4_FE_PREV = (0.99, 0.97, 0.95)
FIG5_THETA_MAX = 0.5
SERIES_FIT_WINDOW = 0.05

# 环境变量名
ENV_PREFIX = "RECOVERYBOUND_"
