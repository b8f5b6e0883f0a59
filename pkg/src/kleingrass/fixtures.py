"""Tables of the off-quadric (28_6, 56_3) configuration, transcribed verbatim.

Point and line numbers are 1-based, as printed.  ``TABLE1[i - 1]`` is the
coordinate vector (x1, ..., x6) of point ``i``; ``TABLE2[j - 1]`` lists the
three points of external line ``j``; ``BIJECTION[i]`` is the 2-subset of
{1, ..., 8} assigned to point ``i``; ``NESTED`` lists, for each number of
removed heptads, the expected parameters, the matching Grassmannian and the
remark.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .incidence import ConfigParams

TABLE1 = (
    (1, 1, 1, 0, 0, 0),
    (1, 1, 0, 0, 1, 0),
    (1, 1, 0, 0, 0, 1),
    (1, 1, 0, 1, 0, 0),
    (1, 1, 1, 0, 1, 0),
    (1, 1, 1, 0, 0, 1),
    (1, 1, 0, 1, 1, 0),
    (1, 1, 0, 1, 0, 1),
    (0, 0, 1, 1, 0, 0),
    (0, 0, 1, 1, 1, 0),
    (0, 0, 1, 1, 0, 1),
    (0, 1, 1, 1, 0, 0),
    (1, 0, 1, 1, 1, 0),
    (1, 0, 1, 1, 0, 1),
    (0, 0, 0, 0, 1, 1),
    (1, 0, 0, 0, 1, 1),
    (0, 0, 1, 0, 1, 1),
    (0, 0, 0, 1, 1, 1),
    (0, 1, 1, 0, 1, 1),
    (0, 1, 0, 1, 1, 1),
    (1, 1, 1, 1, 1, 1),
    (1, 1, 0, 0, 0, 0),
    (1, 0, 1, 1, 0, 0),
    (0, 1, 1, 1, 1, 0),
    (0, 1, 1, 1, 0, 1),
    (0, 1, 0, 0, 1, 1),
    (1, 0, 1, 0, 1, 1),
    (1, 0, 0, 1, 1, 1),
)

TABLE2 = (
    (1, 4, 9), (1, 7, 10), (1, 8, 11), (1, 16, 19), (1, 18, 21),
    (2, 3, 15), (2, 6, 17), (2, 8, 18), (2, 11, 21), (2, 12, 13),
    (3, 5, 17), (3, 7, 18), (3, 10, 21), (3, 12, 14), (4, 5, 10),
    (4, 6, 11), (4, 16, 20), (4, 17, 21), (5, 6, 15), (5, 7, 9),
    (5, 14, 20), (6, 8, 9), (6, 13, 20), (7, 8, 15), (7, 14, 19),
    (8, 13, 19), (9, 17, 18), (9, 19, 20), (10, 11, 15), (10, 14, 16),
    (11, 13, 16), (12, 16, 21), (12, 17, 20), (12, 18, 19), (13, 14, 15),
    (1, 26, 27), (2, 23, 24), (3, 23, 25), (4, 26, 28), (5, 25, 28),
    (6, 24, 28), (7, 25, 27), (8, 24, 27), (9, 27, 28), (10, 25, 26),
    (11, 24, 26), (12, 22, 23), (13, 22, 24), (14, 22, 25), (15, 24, 25),
    (16, 22, 26), (17, 23, 28), (18, 23, 27), (19, 22, 27), (20, 22, 28),
    (21, 23, 26),
)

BIJECTION = {
    1: (1, 4), 2: (3, 5), 3: (2, 5), 4: (4, 6), 5: (2, 6), 6: (3, 6), 7: (1, 2),
    8: (1, 3), 9: (1, 6), 10: (2, 4), 11: (3, 4), 12: (5, 7), 13: (3, 7), 14: (2, 7),
    15: (2, 3), 16: (4, 7), 17: (5, 6), 18: (1, 5), 19: (1, 7), 20: (6, 7), 21: (4, 5),
    22: (7, 8), 23: (5, 8), 24: (3, 8), 25: (2, 8), 26: (4, 8), 27: (1, 8), 28: (6, 8),
}


@dataclass(frozen=True)
class NestedRow:
    removed: int
    params: ConfigParams | None
    grassmannian: tuple[int, int] | None
    remark: str


NESTED = (
    NestedRow(0, ConfigParams(28, 6, 56, 3), (2, 8), ""),
    NestedRow(1, ConfigParams(21, 5, 35, 3), (2, 7), ""),
    NestedRow(2, ConfigParams(15, 4, 20, 3), (2, 6), "Cayley-Salmon"),
    NestedRow(3, ConfigParams(10, 3, 10, 3), (2, 5), "Desargues"),
    NestedRow(4, ConfigParams(6, 2, 4, 3), (2, 4), "Pasch"),
    NestedRow(5, ConfigParams(3, 1, 1, 3), (2, 3), "single line"),
    NestedRow(6, ConfigParams(1, 0, 0, 3), (2, 2), "single point"),
    NestedRow(7, None, None, "empty set"),
)

# points 22..28 form a heptad whose images share mark 8
LAST_HEPTAD_ROWS = tuple(range(22, 29))
LAST_HEPTAD_MARK = 8


@dataclass(frozen=True)
class PublishedTables:
    table1: tuple = TABLE1
    table2: tuple = TABLE2
    bijection: dict = field(default_factory=lambda: dict(BIJECTION))
    nested: tuple = NESTED

    def with_table2_row(self, row: int, points) -> "PublishedTables":
        """Copy with line ``row`` (1-based) replaced; for fault-injection tests."""
        table2 = list(self.table2)
        table2[row - 1] = tuple(points)
        return replace(self, table2=tuple(table2))


PUBLISHED = PublishedTables()


def row_points(fixtures: PublishedTables = PUBLISHED):
    """``{row number: ProjPoint}`` for the first table."""
    from .gf2 import ProjPoint

    return {i: ProjPoint.from_coords(v) for i, v in enumerate(fixtures.table1, start=1)}


def row_labels(fixtures: PublishedTables = PUBLISHED) -> dict[int, str]:
    return {i: p.label for i, p in row_points(fixtures).items()}


def tagged_off_structure(fixtures: PublishedTables = PUBLISHED):
    """Off-quadric structure with each point tagged by its coordinates and table row."""
    from .gf2 import ProjPoint, off_quadric_structure
    from .incidence import IncidenceStructure

    rows = {p.label: i for i, p in row_points(fixtures).items()}
    s = off_quadric_structure()
    tags = {}
    for label in s.points:
        tags[label] = {"coords": "".join(map(str, ProjPoint(int(label)).coords))}
        if label in rows:
            tags[label]["row"] = rows[label]
    return IncidenceStructure(s.points, s.lines, name=s.name, tags=tags)


def published_certificate(fixtures: PublishedTables = PUBLISHED):
    """The published point bijection as a certificate from the off-quadric structure to G_2(8)."""
    from .grassmannian import subset_label
    from .incidence import IsoCertificate

    labels = row_labels(fixtures)
    return IsoCertificate({labels[i]: subset_label(m) for i, m in fixtures.bijection.items()})
