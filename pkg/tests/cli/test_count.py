import time

import pytest
from click.testing import CliRunner

from dj_decider.cli import djctl


@pytest.mark.parametrize(
    "n,balanced,monochromatic",
    [
        (4, "12870", "15"),
        (1, "2", "1"),
        (2, "6", "3"),
        (3, "70", "7"),
    ],
)
def test_count(runner: CliRunner, n: int, balanced: str, monochromatic: str) -> None:
    result = runner.invoke(djctl, ["count", "--n", str(n)])
    assert result.exit_code == 0
    assert result.output == f"balanced={balanced}\nmonochromatic={monochromatic}\n"


def test_count_large(runner: CliRunner) -> None:
    result = runner.invoke(djctl, ["count", "--n", "14"])
    assert result.exit_code == 0
    balanced = result.output.splitlines()[0]
    assert balanced.startswith("balanced=")
    assert len(balanced) > 4300


@pytest.mark.parametrize(
    "n,expected_code,expected_output",
    [
        ("22", 5, "above the limit"),
        ("64", 5, "above the limit"),
        ("0", 2, "Invalid value"),
        ("65", 2, "Invalid value"),
    ],
)
def test_count_errors(
    runner: CliRunner, n: str, expected_code: int, expected_output: str
) -> None:
    result = runner.invoke(djctl, ["count", "--n", n])
    assert result.exit_code == expected_code
    assert expected_output in result.output


def test_count_requires_width(runner: CliRunner) -> None:
    result = runner.invoke(djctl, ["count"])
    assert result.exit_code == 2


@pytest.mark.parametrize("n,digits", [(20, 315_650), (21, 631_303)])
def test_count_below_cap_stays_responsive(runner: CliRunner, n: int, digits: int) -> None:
    start = time.perf_counter()
    result = runner.invoke(djctl, ["count", "--n", str(n)])
    assert time.perf_counter() - start < 10.0
    assert result.exit_code == 0
    balanced = result.output.splitlines()[0].removeprefix("balanced=")
    assert abs(len(balanced) - digits) <= 1
    assert balanced[0] != "0"
