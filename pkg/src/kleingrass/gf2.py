"""Points, lines and quadratic forms of PG(5, 2).

A point is a nonzero vector of GF(2)^6.  Over GF(2) the only nonzero scalar
is 1, so every nonzero vector is its own projective representative and a
point can be stored as the integer ``x1*2**0 + x2*2**1 + ... + x6*2**5``.
A line is the set ``{p, q, p ^ q}`` for two distinct points.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import EqualPoints, GeometryError

DIM = 6
NUM_POINTS = 2**DIM - 1


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A point of PG(5, 2), identified by its 6-bit integer code."""

    code: int

    def __post_init__(self):
        if not 0 < self.code <= NUM_POINTS:
            raise GeometryError(f"point code must lie in 1..{NUM_POINTS}, got {self.code}")

    @classmethod
    def from_coords(cls, coords) -> "ProjPoint":
        coords = tuple(int(c) for c in coords)
        if len(coords) != DIM or any(c not in (0, 1) for c in coords):
            raise GeometryError(f"expected {DIM} bits, got {coords!r}")
        return cls(sum(bit << i for i, bit in enumerate(coords)))

    @property
    def coords(self) -> tuple[int, ...]:
        return tuple((self.code >> i) & 1 for i in range(DIM))

    @property
    def label(self) -> str:
        return str(self.code)

    def __xor__(self, other: "ProjPoint") -> "ProjPoint":
        return ProjPoint(self.code ^ other.code)

    def __repr__(self):
        return "ProjPoint(" + "".join(map(str, self.coords)) + ")"


@dataclass(frozen=True)
class QuadraticForm:
    """Quadratic form over GF(2) in six variables.

    ``terms`` holds the 0-based index pairs ``(i, j)``, ``i <= j``, whose
    monomial ``x_i x_j`` has coefficient 1.
    """

    terms: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.terms:
            if not 0 <= i <= j < DIM:
                raise GeometryError(f"term ({i}, {j}) is not upper-triangular in a {DIM}x{DIM} matrix")

    @classmethod
    def canonical(cls) -> "QuadraticForm":
        """The hyperbolic form x1 x2 + x3 x4 + x5 x6."""
        return cls(frozenset({(0, 1), (2, 3), (4, 5)}))

    @classmethod
    def from_matrix(cls, matrix) -> "QuadraticForm":
        rows = [[int(v) % 2 for v in row] for row in matrix]
        if len(rows) != DIM or any(len(r) != DIM for r in rows):
            raise GeometryError(f"coefficient matrix must be {DIM}x{DIM}")
        if any(rows[i][j] for i in range(DIM) for j in range(i)):
            raise GeometryError("coefficient matrix must be upper-triangular")
        return cls(frozenset((i, j) for i in range(DIM) for j in range(i, DIM) if rows[i][j]))

    @property
    def matrix(self) -> list[list[int]]:
        return [[int((i, j) in self.terms) for j in range(DIM)] for i in range(DIM)]

    def __call__(self, p: ProjPoint) -> int:
        return eval_form(self, p)


@dataclass(frozen=True, order=True)
class Line:
    """Three collinear points, kept sorted by code."""

    points: tuple[ProjPoint, ProjPoint, ProjPoint]

    def __post_init__(self):
        pts = tuple(sorted(self.points))
        if len(pts) != 3 or len(set(pts)) != 3:
            raise GeometryError(f"a line needs three distinct points, got {self.points!r}")
        if pts[0] ^ pts[1] != pts[2]:
            raise GeometryError(f"points {pts!r} are not collinear")
        object.__setattr__(self, "points", pts)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return p in self.points

    @cached_property
    def codes(self) -> tuple[int, int, int]:
        return tuple(p.code for p in self.points)


class LineClass(enum.Enum):
    """How a line meets the zero set of a form, keyed by the number of common points."""

    EXTERNAL = 0
    TANGENT = 1
    SECANT = 2
    FULLY_CONTAINED = 3


def enumerate_points() -> list[ProjPoint]:
    return [ProjPoint(c) for c in range(1, NUM_POINTS + 1)]


def eval_form(f: QuadraticForm, p: ProjPoint) -> int:
    x = p.code
    value = 0
    for i, j in f.terms:
        value ^= (x >> i) & (x >> j) & 1
    return value


def off_quadric_points(f: QuadraticForm) -> set[ProjPoint]:
    return {p for p in enumerate_points() if eval_form(f, p)}


def on_quadric_points(f: QuadraticForm) -> set[ProjPoint]:
    return {p for p in enumerate_points() if not eval_form(f, p)}


def line_through(p: ProjPoint, q: ProjPoint) -> Line:
    if p == q:
        raise EqualPoints(f"cannot join {p!r} to itself")
    return Line((p, q, p ^ q))


def all_lines() -> list[Line]:
    """All 651 lines of PG(5, 2), in sorted order."""
    lines = set()
    for a, b in itertools.combinations(range(1, NUM_POINTS + 1), 2):
        if a ^ b > b:
            lines.add(Line((ProjPoint(a), ProjPoint(b), ProjPoint(a ^ b))))
    return sorted(lines)


def classify_line(f: QuadraticForm, line: Line) -> LineClass:
    zeros = sum(1 for p in line if not eval_form(f, p))
    return LineClass(zeros)


def external_lines(f: QuadraticForm) -> set[Line]:
    return {line for line in all_lines() if classify_line(f, line) is LineClass.EXTERNAL}


def off_quadric_structure(f: QuadraticForm | None = None):
    """The off-quadric points and external lines as an incidence structure.

    Points are labelled by their integer code (as a string) in ascending order.
    """
    from .incidence import IncidenceStructure

    f = QuadraticForm.canonical() if f is None else f
    points = sorted(off_quadric_points(f))
    lines = sorted(external_lines(f))
    return IncidenceStructure(
        [p.label for p in points],
        [[p.label for p in line] for line in lines],
        name="off-quadric",
    )
