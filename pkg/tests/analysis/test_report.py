from dj_decider.analysis import classify, render_report
from dj_decider.oracle import make_binary_periodic, make_constant
from dj_decider.types import TruthTable


def test_report_monochromatic() -> None:
    report = render_report(classify(make_binary_periodic(4, 1, 1)))
    assert report == "verdict=Monochromatic k=2 c=1\nones_count=8\nline z=2 p=1\n"


def test_report_constant() -> None:
    report = render_report(classify(make_constant(4, 1)))
    assert report == "verdict=Constant(1)\nones_count=16\nline z=0 p=1\n"


def test_report_unbalanced() -> None:
    report = render_report(classify(TruthTable(n=2, bits=[0, 0, 0, 1])))
    assert report.splitlines()[:2] == ["verdict=Unbalanced", "ones_count=1"]
    assert report.splitlines()[2:] == [f"line z={z} p=0.25" for z in range(4)]
