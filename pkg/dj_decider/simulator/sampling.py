import logging

import numpy as np

from dj_decider.prng import SplitMix64
from dj_decider.settings import settings
from dj_decider.types.spectrum import Spectrum

logger = logging.getLogger(__name__)


class NormalizationError(ValueError): ...


def sample_outcomes(spectrum: Spectrum, shots: int, seed: int) -> dict[int, int]:
    """Draw `shots` outcomes z from |psi(z)|^2 by inverse-CDF sampling.

    Outcomes are searched in ascending z. Only observed outcomes appear in the
    returned histogram, keys ascending.

    Raises:
        NormalizationError: If the spectrum is not normalized.
    """
    if shots < 1:
        raise ValueError(f"shots must be positive, got {shots}")
    if not spectrum.is_normalized(settings.tolerance):
        raise NormalizationError(
            f"spectrum norm deviates from 1 by {spectrum.norm_deviation:.3e}"
        )

    probabilities = spectrum.probabilities
    cdf = np.cumsum(probabilities)
    draws = SplitMix64(seed).uniforms(shots) * cdf[-1]
    outcomes = np.searchsorted(cdf, draws, side="right")
    # a draw rounded up onto the total belongs to the last reachable outcome
    last = int(np.flatnonzero(probabilities)[-1])
    clamped = int(np.count_nonzero(outcomes > last))
    if clamped:
        logger.warning(f"Clamped {clamped} draw(s) past the CDF onto outcome z={last}")
        outcomes = np.minimum(outcomes, last)
    counts = np.bincount(outcomes, minlength=cdf.size)
    histogram = {int(z): int(counts[z]) for z in np.flatnonzero(counts)}
    logger.debug(f"Sampled {shots} shots over {len(histogram)} outcomes")
    return histogram
