import logging
import math
from unittest import mock

import numpy as np
import pytest

from dj_decider.oracle import make_constant, make_monochromatic, make_random_balanced
from dj_decider.simulator import NormalizationError, amplitudes_fwht, sample_outcomes
from dj_decider.prng import SplitMix64
from dj_decider.types import Spectrum


def test_degenerate_distributions() -> None:
    assert sample_outcomes(amplitudes_fwht(make_monochromatic(4, 14, 0)), 1000, 1) == {
        14: 1000
    }
    assert sample_outcomes(amplitudes_fwht(make_constant(4, 1)), 5, 0) == {0: 5}


def test_deterministic_per_seed() -> None:
    spectrum = amplitudes_fwht(make_random_balanced(4, 3))
    first = sample_outcomes(spectrum, 500, 11)
    assert sample_outcomes(spectrum, 500, 11) == first
    assert sum(first.values()) == 500
    assert list(first) == sorted(first)


def test_frequencies_follow_probabilities() -> None:
    shots = 100_000
    spectrum = amplitudes_fwht(make_random_balanced(4, 17))
    histogram = sample_outcomes(spectrum, shots, 2024)
    assert 0 not in histogram
    for z, p in enumerate(spectrum.probabilities.tolist()):
        observed = histogram.get(z, 0)
        sigma = math.sqrt(shots * p * (1 - p))
        assert abs(observed - shots * p) <= 4 * sigma + 1e-9


def test_errors() -> None:
    with pytest.raises(NormalizationError, match="norm deviates"):
        sample_outcomes(Spectrum(n=1, amplitudes=[0.5, 0.5]), 10, 0)
    with pytest.raises(ValueError, match="shots must be positive"):
        sample_outcomes(amplitudes_fwht(make_constant(2, 0)), 0, 0)


def test_draw_past_total_is_clamped(caplog: pytest.LogCaptureFixture) -> None:
    spectrum = Spectrum(n=2, amplitudes=[0.0, 1.0, 0.0, 0.0])
    with mock.patch.object(SplitMix64, "uniforms", return_value=np.array([0.5, 1.0])):
        with caplog.at_level(logging.WARNING, logger="dj_decider"):
            histogram = sample_outcomes(spectrum, 2, 0)
    assert histogram == {1: 2}
    assert "Clamped 1 draw(s)" in caplog.text


def test_in_range_draws_log_no_clamp(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.WARNING, logger="dj_decider"):
        sample_outcomes(amplitudes_fwht(make_random_balanced(4, 3)), 500, 11)
    assert "Clamped" not in caplog.text
