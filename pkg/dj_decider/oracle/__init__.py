from .builders import (
    OracleError,
    combine,
    make_binary_periodic,
    make_constant,
    make_monochromatic,
    make_random_balanced,
    perfect_square_layer,
    periodic_basis,
    periodic_component_string,
    union_minus_intersection,
    xor_combination,
)
from .io import (
    TruthTableFormatError,
    format_truth_table,
    load_truth_table,
    parse_truth_table,
    save_truth_table,
)
from .registry import build, describe

__all__ = [
    "OracleError",
    "TruthTableFormatError",
    "build",
    "combine",
    "describe",
    "format_truth_table",
    "load_truth_table",
    "make_binary_periodic",
    "make_constant",
    "make_monochromatic",
    "make_random_balanced",
    "parse_truth_table",
    "perfect_square_layer",
    "periodic_basis",
    "periodic_component_string",
    "save_truth_table",
    "union_minus_intersection",
    "xor_combination",
]
