import time

import numpy as np
import pytest

from dj_decider.analysis import (
    affine_tables,
    bright_lines,
    classify,
    dark_lines,
    detect_monochromatic,
)
from dj_decider.oracle import (
    combine,
    make_binary_periodic,
    make_constant,
    make_monochromatic,
    make_random_balanced,
)
from dj_decider.simulator import amplitudes_fwht
from dj_decider.types import CombineOp, TruthTable, Verdict


def _majority(n: int) -> TruthTable:
    return TruthTable.from_function(n, lambda x: int(bin(x).count("1") * 2 > n))


def _affine_lookup(n: int) -> dict[TruthTable, tuple[int, int]]:
    return {table: (k, c) for k, c, table in affine_tables(n)}


def test_classify_constant() -> None:
    result = classify(make_constant(3, 1))
    assert result.verdict == Verdict.constant
    assert result.c == 1
    assert result.ones_count == 8
    assert result.label == "Constant(1)"
    assert [line.z for line in result.lines] == [0]


def test_classify_monochromatic() -> None:
    result = classify(make_monochromatic(4, 14, 0))
    assert result.verdict == Verdict.monochromatic
    assert result.k is not None and result.k.value == 14
    assert result.c == 0
    assert result.label == "Monochromatic k=14 c=0"


def test_classify_majority() -> None:
    table = _majority(3)
    assert table.to_string() == "00010111"
    assert table not in _affine_lookup(3)

    result = classify(table)
    assert result.verdict == Verdict.balanced_non_affine
    assert result.ones_count == 4
    assert [(line.z, line.probability) for line in result.lines] == [
        (1, 0.25),
        (2, 0.25),
        (4, 0.25),
        (7, 0.25),
    ]


def test_classify_unbalanced() -> None:
    result = classify(TruthTable(n=2, bits=[1, 0, 0, 0]))
    assert result.verdict == Verdict.unbalanced
    assert result.ones_count == 1
    assert result.k is None and result.c is None


def test_classify_random_balanced_never_constant_or_unbalanced() -> None:
    for n in (2, 3, 4):
        for seed in range(1000):
            verdict = classify(make_random_balanced(n, seed)).verdict
            assert verdict in (Verdict.monochromatic, Verdict.balanced_non_affine)


@pytest.mark.parametrize("c", [0, 1])
def test_detect_binary_periodic(c: int) -> None:
    found = detect_monochromatic(make_binary_periodic(4, 1, c))
    assert found is not None
    k, c_found = found
    assert (k.value, c_found) == (2, c)


@pytest.mark.parametrize("n,c", [(1, 0), (3, 1), (5, 0)])
def test_detect_constant(n: int, c: int) -> None:
    found = detect_monochromatic(make_constant(n, c))
    assert found is not None
    assert (found[0].value, found[1]) == (0, c)


def test_detect_round_trip() -> None:
    start = time.perf_counter()
    for n in range(1, 7):
        for k in range(1 << n):
            for c in (0, 1):
                found = detect_monochromatic(make_monochromatic(n, k, c))
                assert found is not None
                assert (found[0].n, found[0].value, found[1]) == (n, k, c)
    assert time.perf_counter() - start < 1.0


def test_detect_agrees_with_affine_comparison() -> None:
    lookup = _affine_lookup(4)
    assert len(lookup) == 32

    for seed in range(100):
        table = make_random_balanced(4, seed)
        found = detect_monochromatic(table)
        expected = lookup.get(table)
        assert (found is None) == (expected is None)

    rng = np.random.default_rng(500)
    tables = [TruthTable(n=4, bits=rng.integers(0, 2, 16)) for _ in range(500)]
    tables += [table for table in lookup]
    for table in tables:
        found = detect_monochromatic(table)
        expected = lookup.get(table)
        if expected is None:
            assert found is None
        else:
            assert found is not None
            assert (found[0].value, found[1]) == expected


def test_xor_homomorphism() -> None:
    for n in range(1, 5):
        for k1, c1, t1 in affine_tables(n):
            for k2, c2, t2 in affine_tables(n):
                found = detect_monochromatic(combine(CombineOp.XOR, t1, t2))
                assert found is not None
                assert (found[0].value, found[1]) == (k1 ^ k2, c1 ^ c2)


def test_affine_tables() -> None:
    tables = list(affine_tables(3))
    assert len(tables) == 16
    assert [(k, c) for k, c, _ in tables[:3]] == [(0, 0), (0, 1), (1, 0)]
    assert len({table for _, _, table in tables}) == 16


def test_dark_lines() -> None:
    mono = amplitudes_fwht(make_monochromatic(4, 14, 0))
    assert dark_lines(mono) == [z for z in range(16) if z != 14]

    constant = amplitudes_fwht(make_constant(3, 0))
    assert dark_lines(constant) == list(range(1, 8))

    for seed in range(20):
        assert 0 in dark_lines(amplitudes_fwht(make_random_balanced(5, seed)))

    majority = amplitudes_fwht(_majority(3))
    assert dark_lines(majority, eps=0.6) == list(range(8))


def test_bright_lines() -> None:
    spectrum = amplitudes_fwht(make_binary_periodic(4, 2, 1))
    lines = bright_lines(spectrum)
    assert [(line.z, line.probability) for line in lines] == [(4, 1.0)]
