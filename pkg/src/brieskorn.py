"""Tight contact structures on the Brieskorn spheres -Sigma(2,3,6n -+ 1).

The structures eta^n_{i,j} on -Sigma(2,3,6n-1) and xi^n_{i,j} on
-Sigma(2,3,6n+1) come from Legendrian surgery on knots L_{l,r} in the i-th
rotative structure on a torus bundle, with j = l - r and n - i = l + r plus a
family offset (2 for eta, 1 for xi).
"""

from dataclasses import dataclass, field
from enum import Enum

from .fillability import (
    Citation,
    FillabilityStatus,
    FillLevel,
    legendrian_surgery_verdict,
    planar_torsion_verdict,
    rotative_bundle_status,
    rotative_bundle_torsion,
)
from .utils import STATUS_CODES, InvalidParameter

__all__ = [
    "Family",
    "BrieskornCell",
    "StatusKind",
    "CellStatus",
    "LegendrianParams",
    "enumerate_cells",
    "status",
    "lr_params",
    "cell_from_lr",
    "certify_via_mixed_surgery",
    "render_triangle",
    "to_records",
]


class Family(Enum):
    """The two families of Brieskorn spheres."""

    ETA = "eta"
    XI = "xi"

    @property
    def offset(self) -> int:
        """n - i - (l + r) for the family."""
        return 2 if self is Family.ETA else 1

    @property
    def min_n(self) -> int:
        return 2 if self is Family.ETA else 1

    @property
    def classification(self) -> str:
        return "eta-classification" if self is Family.ETA else "xi-classification"


@dataclass(frozen=True)
class BrieskornCell:
    """One tight contact structure eta^n_{i,j} or xi^n_{i,j}."""

    family: Family
    n: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.n < self.family.min_n:
            raise InvalidParameter(
                f"{self.family.value} needs n >= {self.family.min_n}, got {self.n}."
            )
        if not 0 <= self.i <= self.n - self.family.offset:
            raise InvalidParameter(f"i = {self.i} out of range for {self}.")
        if abs(self.j) > self.span:
            raise InvalidParameter(f"|j| = {abs(self.j)} out of range for {self}.")
        if (self.span - self.j) % 2 != 0:
            raise InvalidParameter(f"j = {self.j} has the wrong parity for {self}.")

    @property
    def span(self) -> int:
        """n - i - offset, the largest allowed |j|."""
        return self.n - self.i - self.family.offset

    def __str__(self) -> str:
        return f"{self.family.value}^{self.n}_{{{self.i},{self.j}}}"


class StatusKind(Enum):
    """Fillability status of a Brieskorn cell."""

    STEIN_FILLABLE = "SteinFillable"
    STRONG_NOT_LIOUVILLE = "StrongNotLiouville"
    EDGE_CONJECTURED_STEIN = "EdgeConjecturedStein"


@dataclass(frozen=True)
class CellStatus:
    """Status of a cell with the statements it rests on.

    Every cell is strongly fillable; edge cells carry Strong as their proven
    lower bound and Stein only as a conjecture.
    """

    kind: StatusKind
    citations: tuple[Citation, ...] = field(default=(), compare=False)

    @property
    def code(self) -> str:
        return STATUS_CODES[self.kind.value]

    @property
    def conjectural(self) -> bool:
        return self.kind is StatusKind.EDGE_CONJECTURED_STEIN

    @property
    def lower(self) -> FillLevel:
        if self.kind is StatusKind.STEIN_FILLABLE:
            return FillLevel.STEIN
        return FillLevel.STRONG

    @property
    def upper(self) -> FillLevel:
        if self.kind is StatusKind.STRONG_NOT_LIOUVILLE:
            return FillLevel.STRONG
        return FillLevel.STEIN


@dataclass(frozen=True)
class LegendrianParams:
    """Stabilization counts (l, r) of the surgery knot L_{l,r}."""

    l: int  # noqa: E741
    r: int

    def __post_init__(self) -> None:
        if self.l < 0 or self.r < 0:
            raise InvalidParameter(f"l and r must be >= 0, got ({self.l}, {self.r}).")

    @property
    def mixed(self) -> bool:
        """Whether L_{l,r} is stabilized with both signs."""
        return self.l > 0 and self.r > 0


def enumerate_cells(family: Family, n: int) -> list[BrieskornCell]:
    """List the tight contact structures of one Brieskorn sphere.

    Parameters
    ----------
    family : Family
        eta for -Sigma(2,3,6n-1), xi for -Sigma(2,3,6n+1)
    n : int
        The index n

    Returns
    -------
    list[BrieskornCell]
        n(n-1)/2 cells for eta and n(n+1)/2 for xi, i descending then j
        ascending
    """
    if n < family.min_n:
        raise InvalidParameter(f"{family.value} needs n >= {family.min_n}, got {n}.")

    cells = []
    for i in range(n - family.offset, -1, -1):
        span = n - i - family.offset
        for j in range(-span, span + 1, 2):
            cells.append(BrieskornCell(family, n, i, j))
    return cells


def status(cell: BrieskornCell) -> CellStatus:
    """Fillability status of a cell.

    Parameters
    ----------
    cell : BrieskornCell
        The cell

    Returns
    -------
    CellStatus
        Exactly one status, with citations
    """
    n, i, j = cell.n, cell.i, cell.j
    base = Citation.lookup(cell.family.classification)

    def make(kind: StatusKind, key: str) -> CellStatus:
        return CellStatus(kind, (base, Citation.lookup(key)))

    if i == 0:
        return CellStatus(StatusKind.STEIN_FILLABLE, (base,))

    if cell.family is Family.ETA:
        if (n, i, abs(j)) == (4, 1, 1):
            return make(StatusKind.STEIN_FILLABLE, "eta-four-stein")
        if i == n - 2 and j == 0 and n >= 3:
            return make(StatusKind.STRONG_NOT_LIOUVILLE, "eta-apex")
        if 0 < i < n - 3 and abs(j) < n - i - 2:
            return make(StatusKind.STRONG_NOT_LIOUVILLE, "inner-triangle")
    else:
        if j == 0 and 1 <= i <= n - 1 and n >= 2:
            return make(StatusKind.STRONG_NOT_LIOUVILLE, "xi-center")
        if 0 < i < n - 2 and abs(j) < n - i - 1:
            return make(StatusKind.STRONG_NOT_LIOUVILLE, "inner-triangle")

    return make(StatusKind.EDGE_CONJECTURED_STEIN, "edge-conjecture")


def lr_params(cell: BrieskornCell) -> LegendrianParams:
    """Stabilization counts of the knot whose Legendrian surgery gives the cell."""
    return LegendrianParams((cell.span + cell.j) // 2, (cell.span - cell.j) // 2)


def cell_from_lr(family: Family, i: int, params: LegendrianParams) -> BrieskornCell:
    """The cell obtained from L_{l,r} in the i-th rotative structure."""
    n = params.l + params.r + i + family.offset
    return BrieskornCell(family, n, i, params.l - params.r)


def certify_via_mixed_surgery(cell: BrieskornCell) -> FillabilityStatus | None:
    """Rederive the status of a cell from Legendrian surgery on a mixed knot.

    The i-th rotative structure is weakly but not strongly fillable for i >= 1.
    Legendrian surgery on the mixed knot L_{l,r} keeps the weak filling and
    excludes a Liouville one, and since the result is a homology sphere the
    weak filling can be made strong.

    Parameters
    ----------
    cell : BrieskornCell
        The cell

    Returns
    -------
    FillabilityStatus or None
        Strong but not Liouville, or None when L_{l,r} is not mixed or i = 0
    """
    if cell.i == 0 or not lr_params(cell).mixed:
        return None

    verdict = legendrian_surgery_verdict(rotative_bundle_status(cell.i))

    # Giroux torsion gives the same cap
    order = rotative_bundle_torsion(cell.i)
    torsion = planar_torsion_verdict(0 if order is None else order, -1)
    if torsion.upper != verdict.upper:
        raise RuntimeError(f"Upper bounds disagree for {cell}!")

    # Weak fillings of homology spheres are strong
    return FillabilityStatus.tight(
        max(verdict.lower, FillLevel.STRONG),
        verdict.upper,
        verdict.citations + (Citation.lookup("weak-to-strong"),),
    )


def render_triangle(family: Family, n: int) -> str:
    """Render the cells of one Brieskorn sphere as a centered triangle.

    Each cell prints as '(i,j)X' where X is the one-letter status code. The
    apex row comes first.

    Parameters
    ----------
    family : Family
        The family
    n : int
        The index n

    Returns
    -------
    str
        The triangle followed by a legend line
    """
    cells = enumerate_cells(family, n)

    # Group by row
    rows: dict[int, list[str]] = {}
    for cell in cells:
        label = f"({cell.i},{cell.j}){status(cell).code}"
        rows.setdefault(cell.i, []).append(label)

    width = max(len(label) for row in rows.values() for label in row)
    lines = [
        " ".join(label.center(width) for label in rows[i])
        for i in sorted(rows, reverse=True)
    ]
    total = max(len(line) for line in lines)

    legend = ", ".join(f"{code} = {name}" for name, code in STATUS_CODES.items())
    header = f"{family.value} n={n}"
    body = [line.center(total).rstrip() for line in lines]
    return "\n".join([header, *body, legend])


def to_records(family: Family, n: int) -> list[dict]:
    """JSON-ready records of every cell of one Brieskorn sphere."""
    records = []
    for cell in enumerate_cells(family, n):
        cell_status = status(cell)
        params = lr_params(cell)
        records.append(
            {
                "family": family.value,
                "n": cell.n,
                "i": cell.i,
                "j": cell.j,
                "status": cell_status.kind.value,
                "l": params.l,
                "r": params.r,
                "mixed": params.mixed,
                "citations": [c.to_dict() for c in cell_status.citations],
            }
        )
    return records
