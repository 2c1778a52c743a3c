"""Utility functions for random seeds and console output."""

from fractions import Fraction

import numpy as np
from rich.console import Console

# Console used for all data output. Markup and highlighting are off so that
# slopes like [1/2] or words like a^-1 print verbatim.
console = Console(highlight=False, markup=False, emoji=False, soft_wrap=True)
err_console = Console(
    stderr=True, highlight=False, markup=False, emoji=False, soft_wrap=True
)


def split_seed(seed: int, N: int = 2, max_seed: int = 2**32 - 1) -> np.ndarray:
    """Split the random seed.

    Parameters
    ----------
    seed : int
        The initial seed
    N : int, default=2
        The number of seeds to produce
    max_seed : int, default=2**32 - 1
        The maximum allowed value for seeds
    """
    rng = np.random.default_rng(seed)
    return rng.integers(0, max_seed, size=N)


def format_fraction(x: Fraction | int) -> str:
    """Print a rational as 'p/q', or 'n' when it is an integer."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
