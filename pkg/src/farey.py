"""Exact arithmetic on the Farey graph.

Slopes are extended rationals p/q with the sign carried on p, q >= 0 and
infinity stored as 1/0. The Farey boundary is embedded in the unit circle by

    p/q -> (2pq / (p^2 + q^2), (q^2 - p^2) / (p^2 + q^2)),

so that 0 sits at the top, infinity at the bottom, 1 on the right and -1 on
the left. Travelling clockwise (decreasing standard angle) visits the slopes
in increasing order, -1 -> 0 -> 1 -> infinity -> -1. Every circular comparison
below reduces to the sign of a Farey multiplication, so no angle is ever
evaluated.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Integral

from .utils import (
    DegenerateArc,
    InfiniteFamily,
    InvalidParameter,
    format_fraction,
    parse_slope_text,
)

__all__ = [
    "Slope",
    "DiskPoint",
    "INFINITY",
    "disk_point",
    "fsum",
    "fmult",
    "has_edge",
    "in_clockwise_arc",
    "clockwise_order",
    "neighbors_in_arc",
]


@dataclass(frozen=True, init=False)
class Slope:
    """An extended rational number p/q in lowest terms.

    Any nonzero integer pair is accepted and normalized on construction, so
    Slope(2, -4) == Slope(-1, 2) and Slope(-3, 0) == Slope(1, 0).
    """

    p: int
    q: int

    def __init__(self, p: int, q: int = 1) -> None:
        if not (isinstance(p, Integral) and isinstance(q, Integral)):
            raise InvalidParameter(
                f"Slope entries must be integers, not ({p!r}, {q!r})."
            )
        p, q = int(p), int(q)
        if p == 0 and q == 0:
            raise InvalidParameter("(0, 0) does not define a slope.")

        # Reduce and move the sign onto the numerator
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q

        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def from_fraction(cls, x: Fraction | int) -> "Slope":
        """Create a finite slope from a rational number."""
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse 'p/q', 'n' or 'inf'."""
        return cls(*parse_slope_text(text))

    @property
    def is_infinite(self) -> bool:
        """Whether this is the slope 1/0."""
        return self.q == 0

    def to_fraction(self) -> Fraction | None:
        """Return the slope as a rational, or None for infinity."""
        if self.is_infinite:
            return None
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        return format_fraction(Fraction(self.p, self.q))

    def __repr__(self) -> str:
        return f"Slope({self.p}, {self.q})"


INFINITY = Slope(1, 0)


@dataclass(frozen=True)
class DiskPoint:
    """Exact position of a slope on the boundary of the Poincare disk."""

    x: Fraction
    y: Fraction


def disk_point(s: Slope) -> DiskPoint:
    """Embed a slope in the unit circle.

    Parameters
    ----------
    s : Slope
        The slope to embed

    Returns
    -------
    DiskPoint
        The exact point, which satisfies x^2 + y^2 = 1
    """
    norm = s.p**2 + s.q**2
    return DiskPoint(
        x=Fraction(2 * s.p * s.q, norm),
        y=Fraction(s.q**2 - s.p**2, norm),
    )


def fsum(r: Slope, s: Slope) -> Slope:
    """Farey sum (p_r + p_s) / (q_r + q_s), reduced.

    The sum of the numerators and denominators can vanish only for r = -s
    with both infinite, which the normalization of infinity rules out.
    """
    return Slope(r.p + s.p, r.q + s.q)


def fmult(r: Slope, s: Slope) -> int:
    """Farey multiplication p_r q_s - q_r p_s."""
    return r.p * s.q - r.q * s.p


def has_edge(r: Slope, s: Slope) -> bool:
    """Whether r and s are joined by an edge of the Farey graph."""
    return abs(fmult(r, s)) == 1


def _precedes(r: Slope, s: Slope) -> bool:
    """Whether r < s in the linear order with infinity as the maximum.

    With q >= 0 every slope is a vector in the closed upper half plane
    (q, p), and r < s exactly when the Farey multiplication is negative.
    """
    return fmult(r, s) < 0


def in_clockwise_arc(t: Slope, start: Slope, end: Slope) -> bool:
    """Whether t lies on the open clockwise arc from start to end.

    Parameters
    ----------
    t : Slope
        The slope to locate
    start : Slope
        Where the clockwise traversal starts (excluded)
    end : Slope
        Where the clockwise traversal stops (excluded)

    Returns
    -------
    bool
        True if t is met strictly between start and end

    Raises
    ------
    DegenerateArc
        If start == end
    """
    if start == end:
        raise DegenerateArc(f"Arc from {start} to itself is degenerate.")
    if t in (start, end):
        return False

    # Clockwise is increasing slope, wrapping from infinity to the negatives
    if _precedes(start, end):
        return _precedes(start, t) and _precedes(t, end)
    return _precedes(start, t) or _precedes(t, end)


def clockwise_order(slopes: list[Slope]) -> list[Slope]:
    """Sort slopes clockwise, starting just after infinity.

    Parameters
    ----------
    slopes : list[Slope]
        Slopes to sort

    Returns
    -------
    list[Slope]
        The slopes in increasing order, infinity last
    """

    def key(s: Slope) -> tuple[int, Fraction]:
        if s.is_infinite:
            return (1, Fraction(0))
        return (0, Fraction(s.p, s.q))

    return sorted(slopes, key=key)


def _to_infinity(s0: Slope) -> tuple[int, int]:
    """Find (alpha, beta) with alpha p0 + beta q0 = 1.

    The matrix [[alpha, beta], [-q0, p0]] lies in SL(2, Z) and sends the
    vector (p0, q0) to (1, 0), i.e. s0 to infinity.
    """
    # Extended Euclid on (|p0|, q0)
    old_r, r = abs(s0.p), s0.q
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_x, x = x, old_x - quotient * x
        old_y, y = y, old_y - quotient * y

    alpha = old_x if s0.p >= 0 else -old_x
    beta = old_y
    return alpha, beta


def neighbors_in_arc(s0: Slope, start: Slope, end: Slope) -> list[Slope]:
    """List every Farey neighbor of s0 on the open clockwise arc.

    The neighbors of s0 form the one-parameter family
    (p0 k - beta) / (q0 k + alpha), k in Z, which accumulates only at s0.
    Moving s0 to infinity with an orientation-preserving SL(2, Z) matrix
    turns the family into the integers and the arc into an open interval,
    so the answer is the set of integers in that interval mapped back.

    Parameters
    ----------
    s0 : Slope
        The slope whose neighbors are wanted
    start : Slope
        Start of the clockwise arc (excluded)
    end : Slope
        End of the clockwise arc (excluded)

    Returns
    -------
    list[Slope]
        The neighbors in clockwise order from start

    Raises
    ------
    DegenerateArc
        If start == end
    InfiniteFamily
        If s0 lies in the open arc or is one of its endpoints
    """
    if start == end:
        raise DegenerateArc(f"Arc from {start} to itself is degenerate.")
    if s0 in (start, end) or in_clockwise_arc(s0, start, end):
        raise InfiniteFamily(
            f"Neighbors of {s0} accumulate in the arc from {start} to {end}."
        )

    alpha, beta = _to_infinity(s0)

    def move(s: Slope) -> Fraction:
        # Image under [[alpha, beta], [-q0, p0]]; finite because s != s0
        return Fraction(alpha * s.p + beta * s.q, -s0.q * s.p + s0.p * s.q)

    # The arc avoids infinity after the move, so it is an interval (lo, hi)
    lo, hi = move(start), move(end)
    first = lo.numerator // lo.denominator + 1
    last = -((-hi.numerator) // hi.denominator) - 1

    # Map the integers k back with the inverse [[p0, -beta], [q0, alpha]]
    return [Slope(s0.p * k - beta, s0.q * k + alpha) for k in range(first, last + 1)]
