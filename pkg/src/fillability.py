"""Fillability verdicts with citation trails.

A tight status is an interval [lower, upper] in the chain
Tight < Weak < Strong < Liouville < Stein: lower is the strongest kind of
filling known to exist and upper the strongest kind not ruled out. Rules only
ever narrow the interval by what a cited statement gives.
"""

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from fractions import Fraction

from .farey import Slope
from .mcg import Word, n_K
from .utils import CITATIONS, InvalidParameter

__all__ = [
    "FillLevel",
    "Citation",
    "FillabilityStatus",
    "ExistenceVerdict",
    "Ambient",
    "RSet",
    "r_set_contains",
    "r_interval",
    "mixed_surgery_verdict",
    "legendrian_surgery_verdict",
    "planar_torsion_verdict",
    "fibered_surgery_verdict",
    "rotative_bundle_status",
    "rotative_bundle_torsion",
]


class FillLevel(IntEnum):
    """Kinds of symplectic filling, ordered by strength."""

    TIGHT = 0
    WEAK = 1
    STRONG = 2
    LIOUVILLE = 3
    STEIN = 4

    @property
    def label(self) -> str:
        return self.name.capitalize()


@dataclass(frozen=True)
class Citation:
    """A statement a verdict relies on.

    Attributes
    ----------
    key : str
        Registry key in CITATIONS
    anchor : str
        Name of the result the statement is quoted from
    statement : str
        The quoted statement
    state : str
        One of proved, cited, announced, conjectured
    """

    key: str
    anchor: str
    statement: str
    state: str

    @classmethod
    def lookup(cls, key: str) -> "Citation":
        """Build a citation from the registry."""
        if key not in CITATIONS:
            raise KeyError(f"Citation '{key}' not found in the registry.")
        anchor, statement, state = CITATIONS[key]
        return cls(key, anchor, statement, state)

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "anchor": self.anchor,
            "statement": self.statement,
            "state": self.state,
        }

    def __str__(self) -> str:
        return f"[{self.state}] {self.key} ({self.anchor}): \"{self.statement}\""


def _cite(*keys: str) -> tuple[Citation, ...]:
    return tuple(Citation.lookup(key) for key in keys)


@dataclass(frozen=True)
class FillabilityStatus:
    """Either overtwisted, or tight with bounds lower <= upper."""

    is_overtwisted: bool = False
    lower: FillLevel = FillLevel.TIGHT
    upper: FillLevel = FillLevel.STEIN
    citations: tuple[Citation, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not self.is_overtwisted and self.lower > self.upper:
            raise InvalidParameter(
                f"Lower bound {self.lower.label} exceeds upper bound "
                f"{self.upper.label}."
            )

    @classmethod
    def tight(
        cls,
        lower: FillLevel = FillLevel.TIGHT,
        upper: FillLevel = FillLevel.STEIN,
        citations: tuple[Citation, ...] = (),
    ) -> "FillabilityStatus":
        """A tight status with the given bounds."""
        return cls(False, lower, upper, citations)

    @classmethod
    def overtwisted(cls, citations: tuple[Citation, ...] = ()) -> "FillabilityStatus":
        """An overtwisted status."""
        return cls(True, FillLevel.TIGHT, FillLevel.TIGHT, citations)

    def to_dict(self) -> dict:
        if self.is_overtwisted:
            status, lower, upper = "Overtwisted", None, None
        else:
            status, lower, upper = "Tight", self.lower.label, self.upper.label
        return {
            "status": status,
            "lower": lower,
            "upper": upper,
            "citations": [c.to_dict() for c in self.citations],
        }

    def __str__(self) -> str:
        if self.is_overtwisted:
            return "Overtwisted"
        return f"Tight, lower = {self.lower.label}, upper = {self.upper.label}"


@dataclass(frozen=True)
class ExistenceVerdict:
    """Whether some contact structure with the given status exists.

    A verdict never describes every contact structure on the manifold, only
    the existence of one. status is None when no conclusion can be drawn.
    """

    status: FillabilityStatus | None

    @property
    def exists(self) -> bool:
        return self.status is not None

    def to_dict(self) -> dict:
        if self.status is None:
            return {
                "status": "NoConclusion",
                "lower": None,
                "upper": None,
                "citations": [],
            }
        record = self.status.to_dict()
        record["status"] = "Exists"
        return record

    def __str__(self) -> str:
        if self.status is None:
            return "No conclusion"
        return (
            f"Exists a contact structure with lower = {self.status.lower.label}, "
            f"upper = {self.status.upper.label}"
        )


class Ambient(Enum):
    """Ambient manifold of a fibered surgery."""

    QHS = "qhs"
    GENERAL = "general"


@dataclass(frozen=True)
class RSet:
    """The set R(s) of extended rationals.

    (0, s) for s > 0, (0, inf) for s = inf and (0, inf] U (-inf, s) for s < 0.
    """

    s: Slope

    def __post_init__(self) -> None:
        if self.s == Slope(0):
            raise InvalidParameter("R(s) is not defined for s = 0.")

    def __contains__(self, r: Slope) -> bool:
        if r.is_infinite:
            return not self.s.is_infinite and self.s.p < 0

        x = r.to_fraction()
        if self.s.is_infinite:
            return x > 0
        s = self.s.to_fraction()
        if s > 0:
            return 0 < x < s
        return x > 0 or x < s

    def __str__(self) -> str:
        if self.s.is_infinite:
            return "(0, inf)"
        if self.s.p > 0:
            return f"(0, {self.s})"
        return f"(0, inf] U (-inf, {self.s})"


def r_set_contains(s: Slope, r: Slope) -> bool:
    """Whether r lies in R(s).

    Parameters
    ----------
    s : Slope
        The slope defining the set, s != 0
    r : Slope
        The slope to test, infinity allowed

    Returns
    -------
    bool
        Membership of r in R(s)
    """
    return r in RSet(s)


def r_interval(w: Word) -> RSet:
    """The set R(1/n_K) of the fibered knot with monodromy w.

    1/n_K is infinity when n_K = 0.
    """
    return RSet(Slope(1, n_K(w)))


def mixed_surgery_verdict(base: FillabilityStatus, r: Fraction) -> FillabilityStatus:
    """Status after contact (r)-surgery on a mixed Legendrian knot.

    Non-negative surgery is overtwisted. Negative surgery cannot create a
    Liouville or weak filling that was missing before, and a weak filling
    survives it.

    Parameters
    ----------
    base : FillabilityStatus
        Status of the ambient contact manifold containing the knot
    r : Fraction
        Contact surgery coefficient

    Returns
    -------
    FillabilityStatus
        Status of the surgered contact manifold
    """
    r = Fraction(r)
    if r >= 0:
        return FillabilityStatus.overtwisted(_cite("mixed-overtwisted"))
    if base.is_overtwisted:
        raise InvalidParameter(
            "A mixed Legendrian knot is taken in a tight contact manifold."
        )

    # Upper bound: only the non-fillability statements carry over
    if base.upper < FillLevel.WEAK:
        upper = FillLevel.TIGHT
    elif base.upper < FillLevel.LIOUVILLE:
        upper = FillLevel.STRONG
    else:
        upper = FillLevel.STEIN

    # Lower bound: only weak fillability is known to survive
    keys = ["mixed-surgery"]
    lower = FillLevel.TIGHT
    if base.lower >= FillLevel.WEAK:
        lower = FillLevel.WEAK
        keys.append("negative-surgery-weak")

    return FillabilityStatus.tight(lower, upper, base.citations + _cite(*keys))


def legendrian_surgery_verdict(base: FillabilityStatus) -> FillabilityStatus:
    """Contact (-1)-surgery on a mixed Legendrian knot."""
    return mixed_surgery_verdict(base, Fraction(-1))


def planar_torsion_verdict(k: int, r: Fraction) -> FillabilityStatus:
    """Contact (r)-surgery on a mixed knot in a manifold with planar k-torsion.

    Parameters
    ----------
    k : int
        Order of the planar torsion, k >= 0
    r : Fraction
        Contact surgery coefficient

    Returns
    -------
    FillabilityStatus
        Overtwisted for r >= 0, otherwise tight and not Liouville fillable
    """
    if k < 0:
        raise InvalidParameter(f"Planar torsion order must be >= 0, got {k}.")

    # Planar torsion rules out strong fillings of the ambient manifold
    base = FillabilityStatus.tight(
        FillLevel.TIGHT, FillLevel.WEAK, _cite("planar-torsion")
    )
    verdict = mixed_surgery_verdict(base, r)
    if verdict.is_overtwisted:
        return verdict
    return FillabilityStatus.tight(FillLevel.TIGHT, verdict.upper, verdict.citations)


def fibered_surgery_verdict(
    w: Word, r: Slope, ambient: Ambient
) -> ExistenceVerdict:
    """Existence of a fillable but not Liouville fillable structure on Y_r(K).

    Parameters
    ----------
    w : Word
        Monodromy of the genus one fibered knot K
    r : Slope
        Topological surgery coefficient with respect to the Seifert framing
    ambient : Ambient
        Whether Y is a rational homology sphere

    Returns
    -------
    ExistenceVerdict
        A verdict when r lies in R(1/n_K), otherwise no conclusion
    """
    if r == Slope(0):
        raise InvalidParameter("0-surgery is never in R(1/n_K).")

    if r not in r_interval(w):
        return ExistenceVerdict(None)

    if ambient is Ambient.QHS:
        status = FillabilityStatus.tight(
            FillLevel.STRONG,
            FillLevel.STRONG,
            _cite("fibered-strong", "weak-to-strong"),
        )
    else:
        status = FillabilityStatus.tight(
            FillLevel.WEAK, FillLevel.STRONG, _cite("fibered-weak")
        )
    return ExistenceVerdict(status)


def rotative_bundle_status(n: int) -> FillabilityStatus:
    """Status of the n-th rotative contact structure on a torus bundle.

    Parameters
    ----------
    n : int
        Rotativity, n >= 0

    Returns
    -------
    FillabilityStatus
        Weakly but not strongly fillable for n >= 1; no claim for n = 0
    """
    if n < 0:
        raise InvalidParameter(f"Rotativity must be >= 0, got {n}.")
    if n == 0:
        return FillabilityStatus.tight()
    return FillabilityStatus.tight(
        FillLevel.WEAK, FillLevel.WEAK, _cite("rotative-bundle")
    )


def rotative_bundle_torsion(n: int) -> int | None:
    """Order of planar torsion in the n-th rotative structure, None if not known."""
    if n < 0:
        raise InvalidParameter(f"Rotativity must be >= 0, got {n}.")
    return 1 if n >= 1 else None

