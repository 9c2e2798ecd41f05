import os
from pathlib import Path
from typing import Callable

from click.testing import CliRunner

from dj_decider.cli import djctl


def _rows(path: Path) -> list[list[str]]:
    return [
        line.split() for line in path.read_text().splitlines() if not line.startswith("#")
    ]


def test_periodic_figure_golden(
    runner: CliRunner, tmp_path: Path, golden: Callable[[str], str]
) -> None:
    result = runner.invoke(
        djctl,
        ["emit-figure", "--n", "4", "--periodic", "--m", "1", "--c", "1", "-d", str(tmp_path)],
    )
    assert result.exit_code == 0
    assert "Wrote f.dat and psi.dat" in result.output
    assert (tmp_path / "f.dat").read_text() == golden("figure_periodic_f.dat")
    assert (tmp_path / "psi.dat").read_text() == golden("figure_periodic_psi.dat")


def test_monochromatic_figures(runner: CliRunner, tmp_path: Path) -> None:
    for n, k in ((4, 14), (6, 30)):
        target = tmp_path / f"n{n}"
        result = runner.invoke(
            djctl, ["emit-figure", "--n", str(n), "--mono", "--k", str(k), "-d", str(target)]
        )
        assert result.exit_code == 0
        nonzero = [row for row in _rows(target / "psi.dat") if row[1] != "0"]
        assert nonzero == [[str(k), "1"]]
        header = (target / "psi.dat").read_text().splitlines()[:3]
        assert header == [
            f"# n={n}",
            f"# oracle=Monochromatic k={k} c=0",
            "# columns: z probability",
        ]


def test_random_balanced_figure(runner: CliRunner, tmp_path: Path) -> None:
    args = ["emit-figure", "--n", "4", "--random-balanced", "--seed", "9"]
    first = tmp_path / "first"
    second = tmp_path / "second"
    assert runner.invoke(djctl, args + ["-d", str(first)]).exit_code == 0
    assert runner.invoke(djctl, args + ["-d", str(second)]).exit_code == 0

    assert _rows(first / "psi.dat")[0] == ["0", "0"]
    assert sum(int(f) for _, f in _rows(first / "f.dat")) == 8
    for name in ("f.dat", "psi.dat"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_profile_output_dir(runner: CliRunner) -> None:
    with runner.isolated_filesystem():
        result = runner.invoke(djctl, ["-p", "test", "emit-figure", "--n", "3", "--constant"])
        assert result.exit_code == 0
        assert os.path.exists(os.path.join("figures", "f.dat"))
        assert os.path.exists(os.path.join("figures", "psi.dat"))


def test_output_dir_is_a_file(runner: CliRunner, tmp_path: Path) -> None:
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    result = runner.invoke(
        djctl, ["emit-figure", "--n", "3", "--constant", "-d", str(blocker / "sub")]
    )
    assert result.exit_code == 3
