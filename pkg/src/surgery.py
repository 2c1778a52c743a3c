"""Surgery coefficients, framing changes and solid-torus bookkeeping.

The framing matrices act on the column (q, p) of a slope p/q. That
convention stays inside this module: every public function maps slopes to
slopes.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .farey import Slope, in_clockwise_arc, neighbors_in_arc
from .mcg import NTType, Word, fdtc, n_K, nt_classify
from .utils import (
    InfiniteFamily,
    InvalidCoefficient,
    InvalidTorus,
    UndefinedSlope,
)

__all__ = [
    "Side",
    "FramingKind",
    "SolidTorus",
    "MixedTorus",
    "STANDARD_MIXED_TORUS",
    "topological_coefficient",
    "transverse_framing_update",
    "meridian_conversion",
    "binding_neighborhood_slope",
    "menke_candidates",
    "unique_tight_lower",
    "mixed_framing_coefficient",
    "lens_from_mixed_surgery",
    "is_three_sphere",
    "product_framing_coefficient",
    "seifert_coefficient",
    "seifert_coefficient_matrix",
]


class Side(Enum):
    """Whether a solid torus has its meridian below or above the dividing slope."""

    LOWER = "l"
    UPPER = "u"


class FramingKind(Enum):
    """The two transverse surgeries whose framing effect is tracked."""

    ADMISSIBLE_MINUS_ONE = "admissible"
    INADMISSIBLE_PLUS_ONE = "inadmissible"


@dataclass(frozen=True)
class SolidTorus:
    """A convex solid torus S(meridian, dividing; side)."""

    meridian: Slope
    dividing: Slope
    side: Side = Side.LOWER

    def __post_init__(self) -> None:
        if self.meridian == self.dividing:
            raise InvalidTorus(
                f"Meridian and dividing slope coincide ({self.meridian})."
            )

    def admits(self, t: Slope) -> bool:
        """Whether t can be the dividing slope of a boundary-parallel torus."""
        if self.side is Side.LOWER:
            return in_clockwise_arc(t, self.meridian, self.dividing)
        return in_clockwise_arc(t, self.dividing, self.meridian)

    def __str__(self) -> str:
        return f"S({self.meridian},{self.dividing};{self.side.value})"


@dataclass(frozen=True)
class MixedTorus:
    """Dividing slopes of a mixed torus and the two tori bounding its neighborhood."""

    s_minus: Slope
    s_zero: Slope
    s_plus: Slope

    def __post_init__(self) -> None:
        if len({self.s_minus, self.s_zero, self.s_plus}) != 3:
            raise InvalidTorus(f"Slopes of {self} are not distinct.")
        if not in_clockwise_arc(self.s_zero, self.s_minus, self.s_plus):
            raise InvalidTorus(
                f"{self.s_zero} is not clockwise of {self.s_minus} and "
                f"anticlockwise of {self.s_plus}."
            )

    def __str__(self) -> str:
        return f"({self.s_minus}, {self.s_zero}, {self.s_plus})"


# Slopes of the mixed torus of S+S-(L') in the framing of S-(L')
STANDARD_MIXED_TORUS = MixedTorus(Slope(-1), Slope(0), Slope(1))


def topological_coefficient(r_contact: Fraction, tb: int) -> Fraction:
    """Contact (r)-surgery is topological (tb + r)-surgery."""
    return tb + Fraction(r_contact)


def transverse_framing_update(
    s: Slope,
    kind: FramingKind,
    times: int = 1,
) -> Slope:
    """Dividing slope after transverse surgery, in the page framing.

    Parameters
    ----------
    s : Slope
        Dividing slope p/q before the surgery
    kind : FramingKind
        Admissible -1 surgery acts by [[1, 1], [0, 1]] on (q, p), inadmissible
        +1 surgery by [[1, -1], [0, 1]]
    times : int, default=1
        Number of successive surgeries of this kind (the matrix power)

    Returns
    -------
    Slope
        The new dividing slope
    """
    if times < 0:
        raise InvalidCoefficient(f"times must be non-negative, got {times}.")
    shift = 1 if kind is FramingKind.ADMISSIBLE_MINUS_ONE else -1

    # (q, p) -> (q + shift * times * p, p)
    q = s.q + shift * times * s.p
    if q == 0 and s.p == 0:
        raise UndefinedSlope(f"Framing update of {s} produced the zero vector.")
    return Slope(s.p, q)


def meridian_conversion(s: Slope, inverse: bool = False) -> Slope:
    """Pass between the product framing and the meridional framing.

    The product framing becomes the meridian of the binding, which acts on
    (q, p) by [[0, -1], [1, 0]]; the inverse matrix [[0, 1], [-1, 0]] goes
    back.

    Parameters
    ----------
    s : Slope
        The slope to convert
    inverse : bool, default=False
        Apply the inverse matrix

    Returns
    -------
    Slope
        The converted slope
    """
    if inverse:
        # (q, p) -> (p, -q)
        return Slope(-s.q, s.p)
    # (q, p) -> (-p, q)
    return Slope(s.q, -s.p)


def binding_neighborhood_slope(w: Word, n: int) -> Slope:
    """Dividing slope of the binding neighborhood in the n-th structure.

    1 / ceil(c + n) for pseudo-Anosov monodromies and 1 / floor(c + n + 1)
    otherwise, where c is the twist coefficient.

    Parameters
    ----------
    w : Word
        The monodromy
    n : int
        Rotativity of the associated torus bundle, n >= 0

    Returns
    -------
    Slope
        The slope, which is infinity when the denominator vanishes
    """
    if n < 0:
        raise InvalidCoefficient(f"n must be non-negative, got {n}.")
    c = fdtc(w)
    if nt_classify(w) is NTType.PSEUDO_ANOSOV:
        return Slope(1, math.ceil(c + n))
    return Slope(1, math.floor(c + n + 1))


def menke_candidates(t: MixedTorus) -> list[Slope]:
    """Slopes along which a filling can be split at the mixed torus.

    These are the slopes anticlockwise of s_minus and clockwise of s_plus
    with an edge to s_zero, i.e. the neighbors of s_zero on the arc not
    containing it.

    Parameters
    ----------
    t : MixedTorus
        The mixed torus data

    Returns
    -------
    list[Slope]
        Candidates in clockwise order from s_plus
    """
    try:
        return neighbors_in_arc(t.s_zero, t.s_plus, t.s_minus)
    except InfiniteFamily as exc:
        raise AssertionError(f"Mixed torus {t} has an unbounded family.") from exc


def unique_tight_lower(r: Slope) -> bool:
    """Whether S(r, 0; l) carries a unique tight structure, i.e. r = 1/n."""
    if r == Slope(0):
        raise InvalidTorus("The meridian of S(r, 0; l) cannot be 0.")
    return abs(r.p) == 1


def mixed_framing_coefficient(r_contact: Fraction) -> Fraction:
    """Contact coefficient measured in the framing of the destabilized knot.

    That framing is one greater than the contact framing of the mixed knot.
    """
    return Fraction(r_contact) - 1


def lens_from_mixed_surgery(r: Fraction) -> Slope:
    """The lens space split off when a filling is cut at the mixed torus.

    Parameters
    ----------
    r : Fraction
        Contact surgery coefficient, r < 0

    Returns
    -------
    Slope
        p/q = 1 / (r - 1) in lowest terms; |p| = 1 is the three-sphere
    """
    r = Fraction(r)
    if r >= 0:
        raise InvalidCoefficient(
            f"Contact ({r})-surgery on a mixed knot is overtwisted; "
            "the decomposition needs r < 0."
        )
    shifted = mixed_framing_coefficient(r)
    return Slope(shifted.denominator, shifted.numerator)


def is_three_sphere(lens: Slope) -> bool:
    """Whether L(p, q) with p/q = lens is the three-sphere."""
    return abs(lens.p) == 1


def product_framing_coefficient(w: Word, r_contact: Fraction) -> Fraction:
    """Contact coefficient of the mixed knot against the product framing.

    The contact framing of the mixed knot sits n_K below the product framing
    of the rotative torus bundle.
    """
    return Fraction(r_contact) - n_K(w)


def _check_negative(r_contact: Fraction) -> Fraction:
    r_contact = Fraction(r_contact)
    if r_contact >= 0:
        raise InvalidCoefficient(
            f"Seifert coefficients are tracked for r < 0, got {r_contact}."
        )
    return r_contact


def seifert_coefficient(w: Word, r_contact: Fraction) -> Slope:
    """Seifert-framed coefficient of K after contact (r)-surgery, closed form.

    Equals 1 / (n_K - r). It is a slope because n_K - r vanishes when r is
    the negative integer n_K.

    Parameters
    ----------
    w : Word
        Monodromy of the genus one fibered knot K
    r_contact : Fraction
        Contact surgery coefficient on the mixed knot, r < 0

    Returns
    -------
    Slope
        The topological surgery coefficient on K
    """
    r_contact = _check_negative(r_contact)
    denom = n_K(w) - r_contact
    return Slope(denom.denominator, denom.numerator)


def seifert_coefficient_matrix(w: Word, r_contact: Fraction) -> Slope:
    """Seifert-framed coefficient computed through the framing matrix.

    The product-framed coefficient r - n_K is converted to the meridional
    framing of the binding by [[0, -1], [1, 0]].
    """
    r_contact = _check_negative(r_contact)
    return meridian_conversion(
        Slope.from_fraction(product_framing_coefficient(w, r_contact))
    )
