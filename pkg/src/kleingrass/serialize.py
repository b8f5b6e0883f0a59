"""JSON, DOT and CSV renderings of structures, certificates, heptads and removal steps.

JSON layout for a structure::

    {"points": [{"id": "7", "tags": {...}}, ...],
     "lines": [["7", "12", "11"], ...],
     "meta": {"params": [n, r, m, k], "name": "off-quadric"}}
"""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .errors import NotAConfiguration
from .incidence import IncidenceStructure, IsoCertificate, measure_params


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def structure_to_dict(s: IncidenceStructure, line_size: int | None = 3) -> dict:
    try:
        params = list(measure_params(s, expected_line_size=line_size))
    except NotAConfiguration:
        params = None
    order = {p: i for i, p in enumerate(s.points)}
    return {
        "points": [{"id": p, "tags": s.tags.get(p, {})} for p in s.points],
        "lines": [sorted(line, key=order.__getitem__) for line in s.lines],
        "meta": {"params": params, "name": s.name},
    }


def structure_from_dict(data: dict) -> IncidenceStructure:
    try:
        points = [rec["id"] if isinstance(rec, dict) else rec for rec in data["points"]]
        tags = {rec["id"]: rec["tags"] for rec in data["points"] if isinstance(rec, dict) and rec.get("tags")}
        lines = data["lines"]
        name = data.get("meta", {}).get("name", "")
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed structure document: {exc}") from exc
    return IncidenceStructure(points, lines, name=name, tags=tags)


def structure_to_json(s: IncidenceStructure) -> str:
    return _dumps(structure_to_dict(s))


def structure_from_json(text: str) -> IncidenceStructure:
    return structure_from_dict(json.loads(text))


def certificate_to_json(cert: IsoCertificate, source: str = "", target: str = "") -> str:
    return _dumps({"source": source, "target": target, "mapping": dict(cert.mapping)})


def certificate_from_json(text: str) -> IsoCertificate:
    return IsoCertificate(json.loads(text)["mapping"])


def structure_to_dot(s: IncidenceStructure) -> str:
    """Levi graph: circles for points, boxes for lines."""
    order = {p: i for i, p in enumerate(s.points)}
    out = [f'graph "{s.name or "levi"}" {{']
    for p in s.points:
        out.append(f'  "p{p}" [shape=circle, label="{p}"];')
    for j, line in enumerate(s.lines, start=1):
        out.append(f'  "L{j}" [shape=box, label="L{j}"];')
    for j, line in enumerate(s.lines, start=1):
        for p in sorted(line, key=order.__getitem__):
            out.append(f'  "L{j}" -- "p{p}";')
    out.append("}")
    return "\n".join(out) + "\n"


def incidence_csv(
    s: IncidenceStructure,
    point_order: Sequence[str] | None = None,
    line_order: Sequence[frozenset] | None = None,
    point_headers: Sequence | None = None,
    line_headers: Sequence | None = None,
) -> str:
    """Line-by-point matrix with ``+`` where a point lies on a line."""
    points = list(point_order or s.points)
    lines = list(line_order or s.lines)
    point_headers = list(point_headers or points)
    line_headers = list(line_headers or range(1, len(lines) + 1))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["No."] + point_headers)
    for header, line in zip(line_headers, lines):
        writer.writerow([header] + ["+" if p in line else "" for p in points])
    return buf.getvalue()
