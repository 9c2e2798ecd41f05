import logging
import math

import gmpy2

from dj_decider.settings import settings

logger = logging.getLogger(__name__)

MAX_COUNT_WIDTH = 64


class BalancedCountTooLarge(ValueError): ...


def _estimated_digits(n: int) -> int:
    """Decimal digits of C(2^n, 2^(n-1)), from log-gamma."""
    size = float(1 << n)
    log10 = (math.lgamma(size + 1) - 2 * math.lgamma(size / 2 + 1)) / math.log(10)
    return int(log10) + 1


def count_balanced(n: int) -> int:
    """Number of balanced indicator functions on {0,1}^n, C(2^n, 2^(n-1)).

    Raises:
        BalancedCountTooLarge: If the decimal rendering would exceed
            `settings.max_render_digits`.
    """
    if not 1 <= n <= MAX_COUNT_WIDTH:
        raise ValueError(f"width must be in [1, {MAX_COUNT_WIDTH}], got {n}")
    digits = _estimated_digits(n)
    if digits > settings.max_render_digits:
        logger.warning(f"Refusing to render the balanced count for n={n}")
        raise BalancedCountTooLarge(
            f"the balanced count for n={n} has about {digits} digits, "
            f"above the limit of {settings.max_render_digits}"
        )
    size = 1 << n
    return int(gmpy2.comb(size, size // 2))


def count_monochromatic(n: int) -> int:
    """2^n - 1: the balanced monochromatic languages (k != 0), c held fixed."""
    if n < 1:
        raise ValueError(f"width must be positive, got {n}")
    return (1 << n) - 1


def count_monochromatic_pairs(n: int) -> int:
    """2(2^n - 1): every (k, c) with k != 0, complements counted separately."""
    return 2 * count_monochromatic(n)


def render_count(value: int) -> str:
    # GMP radix conversion; str(int) is quadratic and capped at 4300 digits
    return gmpy2.mpz(value).digits(10)
