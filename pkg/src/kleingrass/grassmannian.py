"""Combinatorial Grassmannians G_k(N).

The points of G_k(N) are the k-subsets of {1, ..., N}, the lines are the
(k+1)-subsets, and a point lies on a line when it is contained in it.
A point is labelled by its marks joined with commas, e.g. ``"1,8"``.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterable

from .errors import InvalidArity
from .incidence import ConfigParams, IncidenceStructure


def subset_label(marks: Iterable[int]) -> str:
    return ",".join(str(m) for m in sorted(marks))


def parse_marks(label: str) -> frozenset[int]:
    return frozenset(int(m) for m in label.split(","))


def _check(k: int, n: int):
    if not 1 <= k <= n:
        raise InvalidArity(f"need 1 <= k <= N, got k={k}, N={n}")


def build_grassmannian(k: int, n: int) -> IncidenceStructure:
    _check(k, n)
    marks = range(1, n + 1)
    points = [subset_label(s) for s in itertools.combinations(marks, k)]
    lines = [
        [subset_label(sub) for sub in itertools.combinations(big, k)]
        for big in itertools.combinations(marks, k + 1)
    ]
    return IncidenceStructure(points, lines, name=f"G_{k}({n})")


def grassmannian_params(k: int, n: int) -> ConfigParams:
    """``(C(N,k), N-k, C(N,k+1), k+1)``, computed without building anything."""
    _check(k, n)
    return ConfigParams(comb(n, k), n - k, comb(n, k + 1), k + 1)


def mark_permutation_map(k: int, n: int, perm) -> dict[str, str]:
    """Point map of G_k(N) induced by relabelling the marks.

    ``perm`` maps each mark in 1..N to its image (a dict, or a sequence whose
    ``i``-th entry is the image of mark ``i + 1``).
    """
    _check(k, n)
    if not isinstance(perm, dict):
        perm = {i + 1: m for i, m in enumerate(perm)}
    if sorted(perm) != list(range(1, n + 1)) or sorted(perm.values()) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {perm!r}")
    return {
        subset_label(s): subset_label(perm[m] for m in s)
        for s in itertools.combinations(range(1, n + 1), k)
    }
