from pathlib import Path
from typing import Callable

import pytest
from click.testing import CliRunner

from dj_decider.cli import djctl


@pytest.mark.parametrize(
    "file_name,golden_name",
    [
        ("periodic_m1_c1.txt", "classify_periodic.txt"),
        ("majority.txt", "classify_majority.txt"),
    ],
)
def test_classify_file(
    runner: CliRunner,
    data_path: Path,
    golden: Callable[[str], str],
    file_name: str,
    golden_name: str,
) -> None:
    result = runner.invoke(djctl, ["classify", "--input", str(data_path / file_name)])
    assert result.exit_code == 0
    assert result.output == golden(golden_name)


@pytest.mark.parametrize(
    "args,verdict",
    [
        (["--n", "4", "--constant", "--c", "1"], "verdict=Constant(1)"),
        (["--n", "4", "--periodic", "--m", "1", "--c", "1"], "verdict=Monochromatic k=2 c=1"),
        (["--n", "6", "--mono", "--k", "30"], "verdict=Monochromatic k=30 c=0"),
        (["--n", "4", "--perfect-square"], "verdict=Constant(1)"),
        (["--n", "3", "--perfect-square"], "verdict=Constant(0)"),
        (["--n", "4", "--constant", "--combine", "not"], "verdict=Constant(1)"),
    ],
)
def test_classify_flags(runner: CliRunner, args: list[str], verdict: str) -> None:
    result = runner.invoke(djctl, ["classify"] + args)
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == verdict


def test_classify_random_balanced(runner: CliRunner) -> None:
    result = runner.invoke(djctl, ["classify", "--n", "4", "--random-balanced", "--seed", "1"])
    assert result.exit_code == 0
    assert result.output.splitlines()[1] == "ones_count=8"
    assert not result.output.startswith(("verdict=Constant", "verdict=Unbalanced"))


def test_combine_with_file(runner: CliRunner, data_path: Path) -> None:
    other = str(data_path / "mono_k3.txt")
    result = runner.invoke(
        djctl,
        ["classify", "--n", "2", "--mono", "--k", "3", "--combine", "xor", "--other", other],
    )
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "verdict=Constant(0)"

    result = runner.invoke(
        djctl,
        ["classify", "--n", "2", "--mono", "--k", "1", "--combine", "and", "--other", other],
    )
    assert result.exit_code == 0
    assert result.output.splitlines()[:2] == ["verdict=Unbalanced", "ones_count=1"]


@pytest.mark.parametrize(
    "args,expected_code,expected_output",
    [
        (["--n", "3", "--constant", "--combine", "xor", "--other", "mono_k3.txt"], 2, "widths differ"),
        (["--n", "3", "--constant", "--combine", "or"], 2, "takes two operands"),
        (["--input", "bad_count.txt"], 3, "Malformed truth-table file"),
    ],
)
def test_classify_errors(
    runner: CliRunner,
    data_path: Path,
    args: list[str],
    expected_code: int,
    expected_output: str,
) -> None:
    args = [str(data_path / a) if a.endswith(".txt") else a for a in args]
    result = runner.invoke(djctl, ["classify"] + args)
    assert result.exit_code == expected_code
    assert expected_output in result.output
