"""Mapping classes of the genus one surface with one boundary component.

A mapping class is a word in the positive Dehn twists a, b about two curves
meeting once and the boundary twist d. Words evaluate to SL(2, Z) through

    a -> [[1, 1], [0, 1]],    b -> [[1, 0], [-1, 1]],    d -> (ab)^6 = I,

with the rightmost letter acting first on column vectors. Both a and b move
every non-fixed oriented direction clockwise by less than half a turn, which
is what makes the twist coefficient computable exactly: it is the translation
number of the composite of the canonical lifts of the letters to the universal
cover of the circle of directions, measured in full clockwise turns.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Iterable, Iterator

import numpy as np

from .utils import (
    BRACKET_ITERATIONS,
    BRACKET_STARTS,
    DELTA_EXPANSION,
    MATRIX_A,
    MATRIX_B,
    ORACLE_ITERATIONS,
    InvalidParameter,
    parse_word_text,
)

__all__ = [
    "Word",
    "MatSL2",
    "Direction",
    "LiftedPoint",
    "NTType",
    "Veering",
    "NormalForm",
    "Fdtc",
    "evaluate",
    "nt_classify",
    "fdtc",
    "fdtc_estimate",
    "right_veering",
    "recognize_normal_form",
    "n_K",
    "is_identity_class",
    "random_word",
]

# The twist coefficient is an exact rational
Fdtc = Fraction


class Word:
    """A reduced word in the generators a, b and d.

    Adjacent letters never share a generator and zero exponents are never
    stored; both are enforced as letters are added.
    """

    def __init__(self, letters: Iterable[tuple[str, int]] = ()) -> None:
        """Create a word.

        Parameters
        ----------
        letters : Iterable[tuple[str, int]], default=()
            (generator, exponent) pairs in written order. They are merged as
            they are added, so the input need not be reduced.
        """
        self._letters: list[tuple[str, int]] = []
        for gen, power in letters:
            self._add(gen, power)

    def _add(self, gen: str, power: int) -> None:
        """Append a letter, merging with the last one if they share a generator."""
        if gen not in ("a", "b", "d"):
            raise InvalidParameter(f"Unknown generator '{gen}'.")
        if power == 0:
            return
        if self._letters and self._letters[-1][0] == gen:
            merged = self._letters[-1][1] + power
            self._letters.pop()
            if merged != 0:
                self._letters.append((gen, merged))
        else:
            self._letters.append((gen, power))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the token syntax, e.g. 'd^2 a^3 b^-1'."""
        return cls(parse_word_text(text))

    @classmethod
    def delta(cls, k: int = 1) -> "Word":
        """The k-th power of the boundary twist."""
        return cls([("d", k)])

    @property
    def letters(self) -> tuple[tuple[str, int], ...]:
        """The reduced letters."""
        return tuple(self._letters)

    def __iter__(self) -> Iterator[tuple[str, int]]:
        return iter(self._letters)

    def __len__(self) -> int:
        return len(self._letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word((gen, -power) for gen, power in reversed(self._letters))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        return Word(self.letters * n)

    def conjugate(self, g: "Word") -> "Word":
        """Return g w g^-1."""
        return g * self * ~g

    def __str__(self) -> str:
        if not self._letters:
            return "1"
        return " ".join(
            gen if power == 1 else f"{gen}^{power}" for gen, power in self._letters
        )

    def __repr__(self) -> str:
        return f"Word('{self}')"


@dataclass(frozen=True)
class MatSL2:
    """An integer 2x2 matrix of determinant one."""

    m11: int
    m12: int
    m21: int
    m22: int

    def __post_init__(self) -> None:
        if self.m11 * self.m22 - self.m12 * self.m21 != 1:
            raise InvalidParameter(f"{self} does not have determinant 1.")

    @classmethod
    def identity(cls) -> "MatSL2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows: tuple[tuple[int, int], tuple[int, int]]) -> "MatSL2":
        (m11, m12), (m21, m22) = rows
        return cls(m11, m12, m21, m22)

    def __matmul__(self, other: "MatSL2") -> "MatSL2":
        return MatSL2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def __neg__(self) -> "MatSL2":
        return MatSL2(-self.m11, -self.m12, -self.m21, -self.m22)

    def __pow__(self, n: int) -> "MatSL2":
        # Square and multiply
        base = self if n >= 0 else self.inverse()
        result = MatSL2.identity()
        n = abs(n)
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def inverse(self) -> "MatSL2":
        return MatSL2(self.m22, -self.m12, -self.m21, self.m11)

    @property
    def trace(self) -> int:
        return self.m11 + self.m22

    @property
    def is_central(self) -> bool:
        """Whether the matrix is plus or minus the identity."""
        return self.m12 == 0 and self.m21 == 0 and self.m11 == self.m22

    def apply(self, d: "Direction") -> "Direction":
        """Act on an oriented direction."""
        return Direction(
            self.m11 * d.u + self.m12 * d.v,
            self.m21 * d.u + self.m22 * d.v,
        )

    def to_rows(self) -> list[list[int]]:
        return [[self.m11, self.m12], [self.m21, self.m22]]


@dataclass(frozen=True, init=False)
class Direction:
    """A primitive integer vector, i.e. an oriented slope.

    (u, v) and (-u, -v) are different points, so the circle of directions
    double covers the Farey boundary.
    """

    u: int
    v: int

    def __init__(self, u: int, v: int) -> None:
        if u == 0 and v == 0:
            raise InvalidParameter("(0, 0) is not a direction.")
        g = gcd(u, v)
        object.__setattr__(self, "u", u // g)
        object.__setattr__(self, "v", v // g)

    def __neg__(self) -> "Direction":
        return Direction(-self.u, -self.v)


@dataclass(frozen=True)
class LiftedPoint:
    """A direction together with the number of signed crossings of the cut."""

    point: Direction
    height: int = 0


class NTType(Enum):
    """Nielsen-Thurston type of the capped monodromy."""

    PSEUDO_ANOSOV = "PseudoAnosov"
    PERIODIC = "Periodic"
    REDUCIBLE = "Reducible"


class Veering(Enum):
    """Answer of the right-veering test."""

    YES = "Yes"
    NO = "No"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class NormalForm:
    """A word recognized as one of the six conjugacy normal forms.

    Attributes
    ----------
    kind : int
        Template index 1-6
    n : int
        Power of the boundary twist
    r : tuple[int, ...]
        Block exponents r_1..r_k for kinds 1 and 2, empty otherwise
    m : int | None
        The exponent m for kinds 3-6, None otherwise
    """

    kind: int
    n: int
    r: tuple[int, ...] = ()
    m: int | None = None

    @property
    def expected_type(self) -> NTType:
        """The Nielsen-Thurston type the template is assigned."""
        if self.kind in (1, 2):
            return NTType.PSEUDO_ANOSOV
        if self.kind in (3, 4):
            return NTType.PERIODIC
        return NTType.REDUCIBLE


# Cut used by the lift tracker; crossing it clockwise adds one to the height
_CUT = Direction(1, 0)
_MATRICES = {"a": MatSL2.from_rows(MATRIX_A), "b": MatSL2.from_rows(MATRIX_B)}


def _expand(w: Word) -> list[tuple[str, int]]:
    """Replace every d^k by (ab)^(6k), keeping a and b letters as they are."""
    letters = []
    for gen, power in w:
        if gen == "d":
            block = list(DELTA_EXPANSION)
            if power < 0:
                block = [(g, -p) for g, p in reversed(block)]
            letters.extend(block * abs(power))
        else:
            letters.append((gen, power))
    return letters


def evaluate(w: Word) -> MatSL2:
    """Evaluate a word to its matrix in SL(2, Z).

    Parameters
    ----------
    w : Word
        The word

    Returns
    -------
    MatSL2
        Product of the letter matrices in written order
    """
    # d evaluates to the identity
    _, rest = _split_delta(w)
    result = MatSL2.identity()
    for gen, power in rest:
        result = result @ _MATRICES[gen] ** power
    return result


def nt_classify(w: Word) -> NTType:
    """Nielsen-Thurston type from the trace of the capped monodromy.

    Words evaluating to plus or minus the identity are labelled periodic.
    """
    mat = evaluate(w)
    if abs(mat.trace) > 2:
        return NTType.PSEUDO_ANOSOV
    if abs(mat.trace) < 2 or mat.is_central:
        return NTType.PERIODIC
    return NTType.REDUCIBLE


def is_identity_class(w: Word) -> bool:
    """Whether the capped monodromy is trivial."""
    return evaluate(w) == MatSL2.identity()


def _cross(p: Direction, q: Direction) -> int:
    """Positive when q is anticlockwise of p by less than half a turn."""
    return p.u * q.v - p.v * q.u


def _half(p: Direction) -> int:
    """0 if p is within the first half turn clockwise from the cut, else 1."""
    if p == _CUT or _cross(_CUT, p) < 0:
        return 0
    return 1


def _frac_less(p: Direction, q: Direction) -> bool:
    """Whether p is met before q travelling clockwise from the cut."""
    if _half(p) != _half(q):
        return _half(p) < _half(q)
    return _cross(p, q) < 0


def _crosses_cut(p: Direction, q: Direction) -> bool:
    """Whether the cut lies on the clockwise arc (p, q], shorter than a half turn."""
    return _cross(p, _CUT) < 0 and _cross(_CUT, q) <= 0


def _apply_letter(pt: LiftedPoint, gen: str, power: int) -> LiftedPoint:
    """Apply the canonical lift of gen^power.

    The lift fixes the two fixed directions of the parabolic matrix and moves
    every other direction within its half circle, clockwise for positive
    powers.
    """
    image = _MATRICES[gen] ** power
    new = image.apply(pt.point)
    if new == pt.point:
        return pt
    if power > 0:
        step = 1 if _crosses_cut(pt.point, new) else 0
    else:
        step = -1 if _crosses_cut(new, pt.point) else 0
    return LiftedPoint(new, pt.height + step)


def _track(letters: list[tuple[str, int]], start: Direction, times: int) -> LiftedPoint:
    """Push a lifted point through the composite lift `times` times."""
    pt = LiftedPoint(start, 0)
    for _ in range(times):
        # Rightmost letter acts first
        for gen, power in reversed(letters):
            pt = _apply_letter(pt, gen, power)
    return pt


def _central_displacement(letters: list[tuple[str, int]], times: int) -> Fraction:
    """Exact displacement of a composite lift whose matrix is central.

    A lift of plus or minus the identity is a rigid translation by an integer
    or half-integer number of turns, so one tracked point determines it.
    """
    start = _CUT
    end = _track(letters, start, times)
    if end.point == start:
        return Fraction(end.height)

    # The end point is the antipode; add the exact half-turn offset
    offset = Fraction(1, 2) if _frac_less(start, end.point) else Fraction(-1, 2)
    return end.height + offset


def _integer_translation(letters: list[tuple[str, int]], times: int) -> int:
    """Translation number of a composite lift with a fixed direction.

    For a lift F with a fixed point, F^n(x) - x lies strictly within one turn
    of n * tau. The tracked height pins F^n(x) - x to a unit interval, which
    leaves two candidates for n * tau; with n = 3 at most one is divisible
    by n. Two start directions are intersected for robustness.
    """
    n = BRACKET_ITERATIONS
    candidates = None
    for u, v in BRACKET_STARTS:
        start = Direction(u, v)
        end = _track(letters, start, n * times)
        h = end.height
        window = (h - 1, h) if _frac_less(end.point, start) else (h, h + 1)
        found = {x // n for x in window if x % n == 0}
        candidates = found if candidates is None else candidates & found

    if candidates is None or len(candidates) != 1:
        raise RuntimeError("Edge case in twist coefficient bracket!")
    return candidates.pop()


def fdtc(w: Word) -> Fdtc:
    """Exact fractional Dehn twist coefficient.

    Parameters
    ----------
    w : Word
        The monodromy

    Returns
    -------
    Fraction
        The translation number of the composite canonical lift, in turns
    """
    # The lift of d is the unit translation and commutes with every lift
    shift, rest = _split_delta(w)
    letters = list(rest)
    mat = evaluate(rest)

    # Plus or minus the identity: a rigid translation
    if mat.is_central:
        return shift + _central_displacement(letters, 1)

    # Elliptic: a power is central
    if abs(mat.trace) < 2:
        order = 2 if mat.trace == 0 else 3
        return shift + _central_displacement(letters, order) / order

    # Parabolic or hyperbolic: integer for positive trace, and the square has
    # positive trace otherwise
    times = 1 if mat.trace >= 2 else 2
    return shift + Fraction(_integer_translation(letters, times), times)


def fdtc_estimate(w: Word, iterations: int = ORACLE_ITERATIONS) -> float:
    """Floating-point estimate of the twist coefficient.

    Iterates the composite lift on a fan of start directions and averages the
    displacement per iteration. The error is below 1 / iterations.

    Parameters
    ----------
    w : Word
        The monodromy
    iterations : int, default=ORACLE_ITERATIONS
        Number of times the word is applied

    Returns
    -------
    float
        Estimated twist coefficient
    """
    # Letter matrices in the order they act
    letters = list(reversed(_expand(w)))
    if not letters:
        return 0.0
    mats = [
        np.array((_MATRICES[gen] ** power).to_rows(), dtype=float)
        for gen, power in letters
    ]
    signs = [np.sign(power) for _, power in letters]

    # Fan of start directions, one per column
    theta = np.linspace(0, 2 * np.pi, 8, endpoint=False) + 0.1
    vecs = np.vstack([np.cos(theta), np.sin(theta)])
    turns = np.zeros(theta.size)

    for _ in range(iterations):
        for mat, sign in zip(mats, signs):
            new = mat @ vecs
            new /= np.linalg.norm(new, axis=0)

            # Clockwise angle moved, taken on the side the letter moves points
            before = np.arctan2(vecs[1], vecs[0])
            after = np.arctan2(new[1], new[0])
            step = np.mod(before - after, 2 * np.pi) / (2 * np.pi)
            if sign < 0:
                step = step - (step > 0)
            turns += step
            vecs = new

    return float(np.mean(turns) / iterations)


def right_veering(w: Word) -> Veering:
    """Decide right-veering from the type and the twist coefficient."""
    kind = nt_classify(w)
    c = fdtc(w)
    if kind is NTType.PSEUDO_ANOSOV:
        return Veering.YES if c > 0 else Veering.NO
    if kind is NTType.PERIODIC:
        return Veering.YES if c >= 0 else Veering.NO
    if c > 0:
        return Veering.YES
    if c < 0:
        return Veering.NO
    return Veering.INDETERMINATE


def _split_delta(w: Word) -> tuple[int, Word]:
    """Commute the central d letters to the front."""
    n = sum(power for gen, power in w if gen == "d")
    return n, Word((gen, power) for gen, power in w if gen != "d")


def _blocks(w: Word) -> tuple[int, ...] | None:
    """Read w as a^{r_1} b^-1 ... a^{r_k} b^-1 with r_i >= 0, some r_i > 0."""
    letters = w.letters
    if not letters or letters[-1][0] != "b":
        return None

    r: list[int] = []
    pending = 0
    for gen, power in letters:
        if gen == "a":
            if power < 0:
                return None
            pending = power
        else:
            if power > 0:
                return None
            # b^-e closes e blocks, the first carrying the pending a power
            r.append(pending)
            r.extend([0] * (-power - 1))
            pending = 0

    if not any(r):
        return None
    return tuple(r)


def _short(w: Word, gens: tuple[str, ...]) -> bool:
    return tuple(gen for gen, _ in w) == gens


def recognize_normal_form(w: Word) -> NormalForm | None:
    """Match a word literally against the six normal-form templates.

    The match is syntactic: the d letters are collected in front, and the
    rest must equal a template after exponent merging. No conjugation is
    attempted.

    Parameters
    ----------
    w : Word
        The word to recognize

    Returns
    -------
    NormalForm or None
        The template and its parameters, or None if w is not in normal form
    """
    n, rest = _split_delta(w)

    # delta^n b^m
    if len(rest) == 0:
        return NormalForm(5, n, m=0)
    if _short(rest, ("b",)):
        return NormalForm(5, n, m=rest.letters[0][1])

    # delta^n a^m b^-1 with m in {-1, -2, -3}
    if _short(rest, ("a", "b")):
        (_, m), (_, e) = rest.letters
        if e == -1 and m in (-1, -2, -3):
            return NormalForm(3, n, m=m)

    r = _blocks(rest)
    if r is not None:
        return NormalForm(1, n, r=r)

    # The remaining templates start with ab^2ab^2
    body = ~Word.parse("a b^2 a b^2") * rest
    if len(body) == 0:
        return NormalForm(6, n, m=0)
    if _short(body, ("b",)):
        return NormalForm(6, n, m=body.letters[0][1])
    if _short(body, ("a", "b")):
        (_, m), (_, e) = body.letters
        if e == -1 and m in (-1, -2, -3):
            return NormalForm(4, n, m=m)
    r = _blocks(body)
    if r is not None:
        return NormalForm(2, n, r=r)

    return None


def n_K(w: Word) -> int:
    """The integer n_K entering the surgery intervals.

    3 + ceil(c) for pseudo-Anosov monodromies, 4 + floor(c) otherwise.
    """
    c = fdtc(w)
    if nt_classify(w) is NTType.PSEUDO_ANOSOV:
        return 3 + ceil(c)
    return 4 + floor(c)


def random_word(seed: int, max_length: int = 20, max_power: int = 3) -> Word:
    """Draw a random word in a and b.

    Parameters
    ----------
    seed : int
        Seed for the numpy random generator
    max_length : int, default=20
        Maximum number of letters before merging
    max_power : int, default=3
        Maximum absolute exponent of a letter

    Returns
    -------
    Word
        The merged word, of length at most max_length
    """
    rng = np.random.default_rng(seed)
    length = rng.integers(0, max_length + 1)
    gens = rng.choice(["a", "b"], size=length)
    powers = rng.integers(1, max_power + 1, size=length) * rng.choice([-1, 1], length)
    return Word((str(gen), int(power)) for gen, power in zip(gens, powers))
