from .commands import analytic_values, cmd_analytic, cmd_heatmap, cmd_simulate, cmd_verify
from .config import DEFAULT_ARC_CAP, RunConfig, build_config, build_parser, parse_range, read_config_file
from .main import main, run
from .output import read_trace_csv, write_heatmap_csv, write_key_values, write_trace_csv
from .verify import CheckResult, format_report, run_checks

__all__ = [
    "DEFAULT_ARC_CAP",
    "CheckResult",
    "RunConfig",
    "analytic_values",
    "build_config",
    "build_parser",
    "cmd_analytic",
    "cmd_heatmap",
    "cmd_simulate",
    "cmd_verify",
    "format_report",
    "main",
    "parse_range",
    "read_config_file",
    "read_trace_csv",
    "run",
    "run_checks",
    "write_heatmap_csv",
    "write_key_values",
    "write_trace_csv",
]
