"""Point-line incidence structures and isomorphism search.

Points are opaque string labels; a line is a frozenset of point labels.
Isomorphisms are found by ordered backtracking over the points of the first
structure, with candidates restricted by a colour refinement computed on both
structures at once and by forward checks on pair collinearity and on lines
whose points are all mapped.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import DomainMismatch, GeometryError, LimitExceeded, NotAConfiguration, UnknownPoint


class ConfigParams(NamedTuple):
    """Parameters of an (n_r, m_k) configuration."""

    num_points: int
    point_degree: int
    num_lines: int
    line_size: int | None

    def __str__(self):
        k = "?" if self.line_size is None else self.line_size
        return f"({self.num_points}_{self.point_degree}, {self.num_lines}_{k})"


class IncidenceStructure:
    """Immutable set of labelled points together with lines given as point sets."""

    __slots__ = ("points", "lines", "name", "tags", "_index", "_lines_at")

    def __init__(self, points: Iterable, lines: Iterable[Iterable] = (), name: str = "", tags=None):
        points = tuple(str(p) for p in points)
        index = {p: i for i, p in enumerate(points)}
        if len(index) != len(points):
            dup = next(p for p, c in Counter(points).items() if c > 1)
            raise GeometryError(f"duplicate point label {dup!r}")
        frozen = []
        seen = set()
        for line in lines:
            labels = [str(p) for p in line]
            line_set = frozenset(labels)
            if len(line_set) != len(labels):
                raise GeometryError(f"line {labels!r} repeats a point")
            unknown = line_set - index.keys()
            if unknown:
                raise UnknownPoint(f"line {sorted(line_set)} uses unknown points {sorted(unknown)}", unknown)
            if line_set in seen:
                raise GeometryError(f"repeated line {sorted(line_set)}")
            seen.add(line_set)
            frozen.append(line_set)
        self.points = points
        self.lines = tuple(frozen)
        self.name = name
        self.tags = {p: dict(t) for p, t in (tags or {}).items()}
        self._index = index
        lines_at = {p: [] for p in points}
        for j, line in enumerate(self.lines):
            for p in line:
                lines_at[p].append(j)
        self._lines_at = {p: tuple(js) for p, js in lines_at.items()}

    def __repr__(self):
        name = f" {self.name!r}" if self.name else ""
        return f"<IncidenceStructure{name}: {len(self.points)} points, {len(self.lines)} lines>"

    def __eq__(self, other):
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return set(self.points) == set(other.points) and set(self.lines) == set(other.lines)

    def __hash__(self):
        return hash((frozenset(self.points), frozenset(self.lines)))

    def __contains__(self, label):
        return label in self._index

    @property
    def point_set(self) -> frozenset[str]:
        return frozenset(self.points)

    @property
    def line_set(self) -> frozenset[frozenset[str]]:
        return frozenset(self.lines)

    def lines_through(self, p: str) -> list[frozenset[str]]:
        return [self.lines[j] for j in self._lines_at[p]]

    def degree(self, p: str) -> int:
        return len(self._lines_at[p])

    def degrees(self) -> dict[str, int]:
        return {p: len(js) for p, js in self._lines_at.items()}

    def num_flags(self) -> int:
        return sum(len(line) for line in self.lines)

    def is_partial_linear_space(self) -> bool:
        seen = set()
        for line in self.lines:
            for pair in itertools.combinations(sorted(line), 2):
                if pair in seen:
                    return False
                seen.add(pair)
        return True

    def relabel(self, mapping: Mapping[str, str], name: str | None = None) -> "IncidenceStructure":
        return IncidenceStructure(
            [mapping[p] for p in self.points],
            [[mapping[p] for p in line] for line in self.lines],
            name=self.name if name is None else name,
            tags={mapping[p]: t for p, t in self.tags.items()},
        )


@dataclass(frozen=True)
class IsoCertificate:
    """Point bijection from structure A to structure B."""

    mapping: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mapping", dict(self.mapping))

    def __getitem__(self, p):
        return self.mapping[p]

    def __len__(self):
        return len(self.mapping)

    def image(self, points: Iterable[str]) -> frozenset[str]:
        return frozenset(self.mapping[p] for p in points)

    def inverse(self) -> "IsoCertificate":
        return IsoCertificate({v: k for k, v in self.mapping.items()})

    @classmethod
    def identity(cls, s: IncidenceStructure) -> "IsoCertificate":
        return cls({p: p for p in s.points})


def measure_params(s: IncidenceStructure, expected_line_size: int | None = None) -> ConfigParams:
    """Measure ``(n, r, m, k)`` for a structure with uniform degrees and line sizes.

    With no lines the line size is vacuous and ``expected_line_size`` is
    reported in its place; with no points the degree is reported as 0.
    """
    degrees = s.degrees()
    r = None
    for p in s.points:
        if r is None:
            r = degrees[p]
        elif degrees[p] != r:
            raise NotAConfiguration(f"point {p!r} has degree {degrees[p]}, expected {r}", p)
    k = None
    for line in s.lines:
        if k is None:
            k = len(line)
        elif len(line) != k:
            raise NotAConfiguration(f"line {sorted(line)} has {len(line)} points, expected {k}", line)
    if k is None:
        k = expected_line_size
    return ConfigParams(len(s.points), r or 0, len(s.lines), k)


def induced_substructure(s: IncidenceStructure, keep_points: Iterable[str], name: str | None = None) -> IncidenceStructure:
    keep = {str(p) for p in keep_points}
    unknown = keep - set(s.points)
    if unknown:
        raise UnknownPoint(f"unknown points {sorted(unknown)}", unknown)
    return IncidenceStructure(
        [p for p in s.points if p in keep],
        [sorted(line, key=s._index.__getitem__) for line in s.lines if line <= keep],
        name=s.name if name is None else name,
        tags={p: t for p, t in s.tags.items() if p in keep},
    )


def verify_certificate(a: IncidenceStructure, b: IncidenceStructure, cert: IsoCertificate | Mapping[str, str]) -> bool:
    mapping = cert.mapping if isinstance(cert, IsoCertificate) else dict(cert)
    if set(mapping) != set(a.points):
        raise DomainMismatch("certificate domain differs from the point set of the first structure")
    if set(mapping.values()) != set(b.points) or len(b.points) != len(a.points):
        return False
    if len(a.lines) != len(b.lines):
        return False
    b_lines = b.line_set
    images = {frozenset(mapping[p] for p in line) for line in a.lines}
    return images == b_lines


# Isomorphism search.


def _refine(a: IncidenceStructure, b: IncidenceStructure):
    """Stable colouring of the Levi graphs of ``a`` and ``b`` with a shared palette."""
    structures = (a, b)
    point_colours = [{p: s.degree(p) for p in s.points} for s in structures]
    line_colours = [{j: len(line) for j, line in enumerate(s.lines)} for s in structures]
    n_classes = None
    while True:
        line_sigs = [
            {j: (lc[j], tuple(sorted(pc[p] for p in s.lines[j]))) for j in lc}
            for s, pc, lc in zip(structures, point_colours, line_colours)
        ]
        palette = {sig: i for i, sig in enumerate(sorted({v for d in line_sigs for v in d.values()}))}
        line_colours = [{j: palette[sig] for j, sig in d.items()} for d in line_sigs]
        point_sigs = [
            {p: (pc[p], tuple(sorted(lc[j] for j in s._lines_at[p]))) for p in s.points}
            for s, pc, lc in zip(structures, point_colours, line_colours)
        ]
        palette = {sig: i for i, sig in enumerate(sorted({v for d in point_sigs for v in d.values()}))}
        point_colours = [{p: palette[sig] for p, sig in d.items()} for d in point_sigs]
        count = len(palette)
        if count == n_classes:
            return point_colours, line_colours
        n_classes = count


def _pair_counts(s: IncidenceStructure) -> dict[str, Counter]:
    """For each point, how many lines it shares with every other point."""
    shared = {p: Counter() for p in s.points}
    for line in s.lines:
        for p, q in itertools.permutations(line, 2):
            shared[p][q] += 1
    return shared


class _Search:
    def __init__(self, a: IncidenceStructure, b: IncidenceStructure):
        self.a, self.b = a, b
        self.feasible = self._quick_invariants_match()
        if not self.feasible:
            return
        (self.colour_a, self.colour_b), (lc_a, lc_b) = _refine(a, b)
        if Counter(self.colour_a.values()) != Counter(self.colour_b.values()) or Counter(
            lc_a.values()
        ) != Counter(lc_b.values()):
            self.feasible = False
            return
        self.shared_a = _pair_counts(a)
        self.shared_b = _pair_counts(b)
        self.b_line_set = b.line_set
        self.by_colour_b = {}
        for q in b.points:
            self.by_colour_b.setdefault(self.colour_b[q], []).append(q)
        self.order = self._point_order()
        pos = {p: i for i, p in enumerate(self.order)}
        # lines of A that become fully mapped once the i-th point is placed
        self.closing = [[] for _ in self.order]
        for line in a.lines:
            self.closing[max(pos[p] for p in line)].append(line)
        # earlier points sharing a line with the i-th point, and how many lines
        self.earlier = [
            [(q, c) for q, c in self.shared_a[p].items() if pos[q] < i] for i, p in enumerate(self.order)
        ]

    def _quick_invariants_match(self) -> bool:
        a, b = self.a, self.b
        return (
            len(a.points) == len(b.points)
            and len(a.lines) == len(b.lines)
            and sorted(a.degrees().values()) == sorted(b.degrees().values())
            and sorted(map(len, a.lines)) == sorted(map(len, b.lines))
        )

    def _point_order(self) -> list[str]:
        a = self.a
        index = {p: i for i, p in enumerate(a.points)}
        class_size = Counter(self.colour_a.values())
        remaining = set(a.points)
        order = []
        links = Counter()
        while remaining:
            p = min(remaining, key=lambda x: (-links[x], class_size[self.colour_a[x]], index[x]))
            order.append(p)
            remaining.discard(p)
            for q in self.shared_a[p]:
                if q in remaining:
                    links[q] += 1
        return order

    def _candidates(self, i: int, image: dict[str, str], used: set[str]) -> Iterator[str]:
        p = self.order[i]
        earlier = self.earlier[i]
        if earlier:
            anchor, _ = earlier[0]
            pool = [q for q in self.shared_b[image[anchor]] if self.colour_b[q] == self.colour_a[p]]
            pool.sort(key=self.b._index.__getitem__)
        else:
            pool = self.by_colour_b[self.colour_a[p]]
        n_links = len(earlier)
        for q in pool:
            if q in used:
                continue
            shared_q = self.shared_b[q]
            if any(shared_q.get(image[r], 0) != c for r, c in earlier):
                continue
            # q must not be collinear with images of points that p is not collinear with
            if sum(1 for r in shared_q if r in used) != n_links:
                continue
            yield q

    def _consistent(self, i: int, image: dict[str, str]) -> bool:
        return all(frozenset(image[p] for p in line) in self.b_line_set for line in self.closing[i])

    def solutions(self) -> Iterator[dict[str, str]]:
        if not self.feasible:
            return
        n = len(self.order)
        if n == 0:
            yield {}
            return
        image: dict[str, str] = {}
        used: set[str] = set()
        stack = [self._candidates(0, image, used)]
        while stack:
            i = len(stack) - 1
            p = self.order[i]
            if p in image:
                used.discard(image.pop(p))
            q = next(stack[-1], None)
            if q is None:
                stack.pop()
                continue
            image[p] = q
            used.add(q)
            if not self._consistent(i, image):
                continue
            if i + 1 == n:
                yield dict(image)
                continue
            stack.append(self._candidates(i + 1, image, used))


def iter_isomorphisms(a: IncidenceStructure, b: IncidenceStructure) -> Iterator[IsoCertificate]:
    """Yield every isomorphism from ``a`` onto ``b`` in a fixed, deterministic order."""
    for mapping in _Search(a, b).solutions():
        yield IsoCertificate({p: mapping[p] for p in a.points})


def find_isomorphism(a: IncidenceStructure, b: IncidenceStructure) -> IsoCertificate | None:
    """Return a verified isomorphism ``a -> b``, or ``None`` if none exists.

    The search is exhaustive, so ``None`` means the structures are not
    isomorphic.
    """
    cert = next(iter_isomorphisms(a, b), None)
    if cert is not None and not verify_certificate(a, b, cert):
        raise AssertionError("isomorphism search produced an invalid certificate")
    return cert


def is_isomorphic(a: IncidenceStructure, b: IncidenceStructure) -> bool:
    return find_isomorphism(a, b) is not None


def count_automorphisms(s: IncidenceStructure, limit: int = 10**6) -> int:
    """Count the automorphisms of ``s`` by exhaustive search.

    Raises :class:`LimitExceeded` once more than ``limit`` have been found.
    """
    count = 0
    for _ in _Search(s, s).solutions():
        count += 1
        if count > limit:
            raise LimitExceeded(f"more than {limit} automorphisms")
    return count
