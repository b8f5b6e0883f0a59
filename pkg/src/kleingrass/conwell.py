"""Conwell heptads and the nested removal sequence.

Two off-quadric points are adjacent in the collinearity graph when the line
joining them is external.  A Conwell heptad is a 7-clique of this graph.
Removing heptads one at a time from the off-quadric configuration (dropping
every line that loses a point) walks down through G_2(7), G_2(6), ... G_2(2)
and finally the empty structure.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InconsistentInput, NoCommonMark, PropertyViolated, UnknownPoint
from .gf2 import Line, ProjPoint, line_through
from .grassmannian import build_grassmannian, parse_marks
from .incidence import (
    ConfigParams,
    IncidenceStructure,
    IsoCertificate,
    find_isomorphism,
    induced_substructure,
    measure_params,
)

HEPTAD_SIZE = 7


@dataclass(frozen=True)
class CollinearityGraph:
    vertices: tuple[ProjPoint, ...]
    adjacency: Mapping[ProjPoint, frozenset[ProjPoint]]

    @property
    def edges(self) -> list[tuple[ProjPoint, ProjPoint]]:
        return sorted((p, q) for p in self.vertices for q in self.adjacency[p] if p < q)

    def degree(self, p: ProjPoint) -> int:
        return len(self.adjacency[p])

    def has_edge(self, p: ProjPoint, q: ProjPoint) -> bool:
        return q in self.adjacency.get(p, ())


@dataclass(frozen=True, order=True)
class Heptad:
    points: tuple[ProjPoint, ...]

    def __post_init__(self):
        pts = tuple(sorted(set(self.points)))
        if len(pts) != HEPTAD_SIZE:
            raise ValueError(f"a heptad has {HEPTAD_SIZE} distinct points, got {len(pts)}")
        object.__setattr__(self, "points", pts)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return p in self.points

    @property
    def labels(self) -> list[str]:
        return [p.label for p in self.points]

    def joining_lines(self) -> list[Line]:
        """The 21 lines spanned by pairs of heptad points.

        Raises :class:`PropertyViolated` if three heptad points are collinear,
        since the pairwise lines would then not be distinct.
        """
        lines = {}
        for p, q in itertools.combinations(self.points, 2):
            line = line_through(p, q)
            if line in lines:
                raise PropertyViolated(f"heptad contains the collinear triple {line!r}", line)
            lines[line] = (p, q)
        return sorted(lines)


def build_collinearity_graph(off_points: Iterable[ProjPoint], ext_lines: Iterable[Line]) -> CollinearityGraph:
    vertices = tuple(sorted(off_points))
    adjacency = {p: set() for p in vertices}
    for line in ext_lines:
        for p in line:
            if p not in adjacency:
                raise InconsistentInput(f"line {line!r} contains {p!r}, which is not an off-quadric point")
        for p, q in itertools.combinations(line, 2):
            adjacency[p].add(q)
            adjacency[q].add(p)
    return CollinearityGraph(vertices, {p: frozenset(n) for p, n in adjacency.items()})


def maximal_cliques(adjacency: Mapping) -> list[frozenset]:
    """Bron-Kerbosch enumeration with pivoting."""
    cliques = []

    def expand(r, p, x):
        if not p and not x:
            cliques.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(adjacency[u] & p))
        for v in sorted(p - adjacency[pivot]):
            expand(r | {v}, p & adjacency[v], x & adjacency[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), frozenset(adjacency), frozenset())
    return cliques


def find_heptads(g: CollinearityGraph) -> list[Heptad]:
    """All maximal cliques of size seven, sorted by their point codes."""
    return sorted(Heptad(tuple(c)) for c in maximal_cliques(g.adjacency) if len(c) == HEPTAD_SIZE)


@dataclass(frozen=True)
class HeptadReport:
    intersections: dict[tuple[int, int], frozenset[ProjPoint]]
    coverage: Counter

    @property
    def incidences(self) -> int:
        return sum(self.coverage.values())


def heptad_pair_intersections(heptads: Sequence[Heptad], points: Iterable[ProjPoint] | None = None) -> HeptadReport:
    """Check that two heptads share exactly one point and each point lies in two heptads.

    ``points`` is the set expected to be covered; it defaults to the union of
    the heptads.
    """
    intersections = {}
    for (i, a), (j, b) in itertools.combinations(enumerate(heptads), 2):
        common = frozenset(a.points) & frozenset(b.points)
        if len(common) != 1:
            raise PropertyViolated(f"heptads {i} and {j} share {len(common)} points", (i, j))
        intersections[(i, j)] = common
    coverage = Counter(p for h in heptads for p in h)
    for p in set(coverage) | set(points or ()):
        if coverage[p] != 2:
            raise PropertyViolated(f"{p!r} lies in {coverage[p]} heptads", p)
    return HeptadReport(intersections, coverage)


def heptads_vs_marks(heptads: Sequence[Heptad], cert: IsoCertificate | Mapping[str, str]) -> dict[Heptad, int]:
    """Map each heptad to the single mark shared by the images of its points."""
    mapping = cert.mapping if isinstance(cert, IsoCertificate) else cert
    result = {}
    for h in heptads:
        common = frozenset.intersection(*(parse_marks(mapping[p.label]) for p in h))
        if len(common) != 1:
            raise NoCommonMark(f"images of {h.labels} share marks {sorted(common)}", h)
        result[h] = next(iter(common))
    if len(set(result.values())) != len(result):
        raise PropertyViolated("two heptads share the same mark", result)
    return result


def remove_heptad(s: IncidenceStructure, h: Heptad | Iterable[str], allow_missing: bool = False) -> IncidenceStructure:
    """Drop the points of ``h`` and every line through any of them.

    Heptads overlap in single points, so after the first removal a later
    heptad may have points that are already gone; pass ``allow_missing`` to
    skip those instead of raising :class:`UnknownPoint`.
    """
    labels = set(h.labels if isinstance(h, Heptad) else (str(p) for p in h))
    missing = labels - set(s.points)
    if missing and not allow_missing:
        raise UnknownPoint(f"points {sorted(missing)} are not in the structure", missing)
    return induced_substructure(s, [p for p in s.points if p not in labels])


@dataclass(frozen=True)
class RemovalStep:
    step: int
    heptad: int | None
    removed_points: tuple[str, ...]
    removed_lines: int
    structure: IncidenceStructure
    params: ConfigParams
    grassmannian: tuple[int, int] | None
    certificate: IsoCertificate | None

    @property
    def is_empty(self) -> bool:
        return not self.structure.points


def removal_sequence(
    s: IncidenceStructure,
    heptads: Sequence[Heptad],
    order: Sequence[int] | None = None,
    line_size: int = 3,
) -> list[RemovalStep]:
    """Remove heptads in ``order`` and certify every intermediate structure.

    Returns one record per step, starting with the untouched structure
    (step 0).  After ``t`` removals the structure is checked isomorphic to
    G_2(n - t), where ``n`` is the number of heptads, as long as ``n - t >= 2``.
    """
    n = len(heptads)
    order = list(range(n)) if order is None else list(order)
    if sorted(order) != list(range(n)):
        raise ValueError(f"order must be a permutation of 0..{n - 1}")
    known = {p.label for h in heptads for p in h}
    if not known <= set(s.points):
        raise UnknownPoint("heptads mention points outside the structure", known - set(s.points))

    steps = []
    current = s
    for t in range(n):
        if t > 0:
            h = heptads[order[t - 1]]
            before = current
            current = remove_heptad(current, h, allow_missing=True)
            removed_points = tuple(p for p in before.points if p not in current)
            removed_lines = len(before.lines) - len(current.lines)
        else:
            removed_points, removed_lines = (), 0
        params = measure_params(current, expected_line_size=line_size)
        target = n - t
        cert = None
        if target >= 2:
            cert = find_isomorphism(current, build_grassmannian(2, target))
            if cert is None:
                raise PropertyViolated(f"step {t} is not isomorphic to G_2({target})", t)
        steps.append(
            RemovalStep(
                step=t,
                heptad=order[t - 1] if t else None,
                removed_points=removed_points,
                removed_lines=removed_lines,
                structure=current,
                params=params,
                grassmannian=(2, target) if target >= 2 else None,
                certificate=cert,
            )
        )
    return steps


def random_orders(n: int, count: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [rng.sample(range(n), n) for _ in range(count)]
