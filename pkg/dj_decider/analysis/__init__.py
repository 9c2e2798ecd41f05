from .classify import affine_tables, bright_lines, classify, dark_lines, detect_monochromatic
from .counting import (
    BalancedCountTooLarge,
    count_balanced,
    count_monochromatic,
    count_monochromatic_pairs,
    render_count,
)
from .report import render_report

__all__ = [
    "BalancedCountTooLarge",
    "affine_tables",
    "bright_lines",
    "classify",
    "count_balanced",
    "count_monochromatic",
    "count_monochromatic_pairs",
    "dark_lines",
    "detect_monochromatic",
    "render_count",
    "render_report",
]
