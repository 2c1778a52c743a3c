"""Parse the text syntax for rationals, slopes and mapping-class words."""

import re
from fractions import Fraction

from .constants import GENERATORS
from .errors import ParseError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")
_INFINITY = {"inf", "infinity", "∞", "1/0", "-1/0"}
_TOKEN = re.compile(r"\s*([a-zA-Z]+)\s*(?:\^\s*([+-]?\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'n' into an exact rational.

    Parameters
    ----------
    text : str
        The text to parse

    Returns
    -------
    Fraction
        The parsed rational

    Raises
    ------
    ParseError
        If the text is not a finite rational
    """
    match = _RATIONAL.match(text)
    if match is None:
        raise ParseError(f"'{text}' is not a rational number.")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"'{text}' has a zero denominator.")
    return Fraction(int(num), 1 if den is None else int(den))


def parse_slope_text(text: str) -> tuple[int, int]:
    """Parse slope text into an unreduced (p, q) pair.

    Accepts 'p/q', 'n' and 'inf' (also '1/0'). Reduction and sign
    normalization are left to the Slope constructor.

    Parameters
    ----------
    text : str
        The text to parse

    Returns
    -------
    tuple[int, int]
        Numerator and denominator
    """
    stripped = text.strip().lower().replace(" ", "")
    if stripped in _INFINITY:
        return 1, 0

    match = _RATIONAL.match(stripped)
    if match is None:
        raise ParseError(f"'{text}' is not a slope.")
    num, den = match.group(1), match.group(2)
    p, q = int(num), 1 if den is None else int(den)
    if p == 0 and q == 0:
        raise ParseError(f"'{text}' is the zero vector, not a slope.")
    return p, q


def parse_word_text(text: str) -> list[tuple[str, int]]:
    """Parse a word such as 'd^2 a^3 b^-1' into (letter, exponent) pairs.

    Whitespace between tokens is optional, so 'ab^-1' is the same as
    'a b^-1'. Multi-letter runs such as 'ab' are split into single letters,
    and '1' is the empty word.

    Parameters
    ----------
    text : str
        The text to parse

    Returns
    -------
    list[tuple[str, int]]
        Letters and exponents in written order, unmerged
    """
    letters: list[tuple[str, int]] = []
    pos = 0
    text = text.strip()
    if text in ("", "1"):
        return letters

    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise ParseError(f"Cannot parse word '{text}' at position {pos}.")
        run, exponent = match.group(1), match.group(2)

        # Every letter of a run is a generator, the exponent binds to the last
        for letter in run:
            if letter not in GENERATORS:
                raise ParseError(
                    f"Unknown generator '{letter}' in '{text}'. "
                    f"Available generators are {GENERATORS}."
                )
        for letter in run[:-1]:
            letters.append((letter, 1))
        power = 1 if exponent is None else int(exponent)
        if power == 0:
            raise ParseError(f"Zero exponent on '{run[-1]}' in '{text}'.")
        letters.append((run[-1], power))

        pos = match.end()

    return letters
