"""Truth-table text format.

Line 1 is `n=<decimal>`, line 2 holds exactly 2^n characters from {0,1}
with position x holding f(x), and the file ends with a newline. No other
whitespace is allowed.
"""

import logging
import re
from pathlib import Path

import numpy as np

from dj_decider.types.core import MAX_WIDTH, TruthTable

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"n=([1-9][0-9]*)")


class TruthTableFormatError(ValueError): ...


def format_truth_table(table: TruthTable) -> str:
    return f"n={table.n}\n{table.to_string()}\n"


def parse_truth_table(text: str) -> TruthTable:
    lines = text.split("\n")
    if len(lines) != 3 or lines[2] != "":
        raise TruthTableFormatError(
            "expected a header line and a bit line, each ending with a newline"
        )
    header, body = lines[0], lines[1]

    match = _HEADER.fullmatch(header)
    if match is None:
        raise TruthTableFormatError(f"malformed header {header!r}, expected 'n=<width>'")
    n = int(match.group(1))
    if n > MAX_WIDTH:
        raise TruthTableFormatError(f"width {n} exceeds the supported maximum {MAX_WIDTH}")

    stray = sorted(set(body) - {"0", "1"})
    if stray:
        raise TruthTableFormatError(f"unexpected characters in bit line: {stray!r}")
    if len(body) != 1 << n:
        raise TruthTableFormatError(
            f"wrong bit count: width {n} needs {1 << n} bits, got {len(body)}"
        )
    bits = np.frombuffer(body.encode("ascii"), dtype=np.uint8) - ord("0")
    return TruthTable(n=n, bits=bits)


def load_truth_table(path: Path) -> TruthTable:
    """Read a truth table file.

    Raises:
        TruthTableFormatError: If the content does not follow the format.
        OSError: If the file cannot be read.
    """
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as e:
        raise TruthTableFormatError(f"{path} is not an ASCII file") from e
    table = parse_truth_table(text)
    logger.debug(f"Loaded width-{table.n} truth table from {path}")
    return table


def save_truth_table(table: TruthTable, path: Path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(format_truth_table(table))
    logger.debug(f"Saved width-{table.n} truth table to {path}")
