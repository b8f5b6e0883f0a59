"""Command-line entry point: ``kleingrass {verify-all,export,iso,heptads,sequence}``.

Exit codes: 0 success, 1 a verification failed, 2 the structures are not
isomorphic, 3 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import fixtures as fx
from .fixtures import published_certificate, tagged_off_structure
from .conwell import (
    build_collinearity_graph,
    find_heptads,
    heptad_pair_intersections,
    heptads_vs_marks,
    random_orders,
    removal_sequence,
)
from .errors import GeometryError, PropertyViolated, UnknownSelector, UnsupportedFormat
from .gf2 import (
    ProjPoint,
    QuadraticForm,
    all_lines,
    classify_line,
    external_lines,
    off_quadric_points,
    off_quadric_structure,
)
from .grassmannian import build_grassmannian
from .incidence import (
    IncidenceStructure,
    find_isomorphism,
    measure_params,
    verify_certificate,
)
from .serialize import (
    certificate_to_json,
    incidence_csv,
    structure_from_json,
    structure_to_dict,
    structure_to_dot,
)

EXIT_OK, EXIT_FAILED, EXIT_NOT_ISOMORPHIC, EXIT_USAGE = 0, 1, 2, 3

# Fixtures used by the commands; tests swap in perturbed copies.
PUBLISHED = fx.PUBLISHED


class UsageError(Exception):
    pass


@dataclass
class Suite:
    name: str
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, failure: str):
        if not ok:
            self.failures.append(failure)

    def as_dict(self):
        return {"name": self.name, "passed": self.passed, "failures": self.failures, "details": self.details}


def _suite_table1(fixtures) -> Suite:
    suite = Suite("table1")
    f = QuadraticForm.canonical()
    off = off_quadric_points(f)
    seen = {}
    for i, coords in enumerate(fixtures.table1, start=1):
        try:
            p = ProjPoint.from_coords(coords)
        except GeometryError:
            suite.failures.append(f"table1 row {i}: not a point")
            continue
        suite.check(p in off, f"table1 row {i}: point is on the quadric")
        suite.check(p not in seen, f"table1 row {i}: repeats row {seen.get(p)}")
        seen.setdefault(p, i)
    for p in sorted(off - set(seen)):
        suite.failures.append(f"table1: off-quadric point {''.join(map(str, p.coords))} missing")
    suite.details["off_quadric_points"] = len(off)
    suite.details["on_quadric_points"] = 63 - len(off)
    return suite


def _suite_table2(fixtures) -> Suite:
    suite = Suite("table2")
    rows = {p: i for i, p in fx.row_points(fixtures).items()}
    computed = set()
    for line in external_lines(QuadraticForm.canonical()):
        if all(p in rows for p in line):
            computed.add(tuple(sorted(rows[p] for p in line)))
        else:
            suite.failures.append(f"table2: external line {line.codes} uses a point absent from table1")
    listed = {}
    for j, triple in enumerate(fixtures.table2, start=1):
        key = tuple(sorted(triple))
        suite.check(key in computed, f"table2 row {j}: {list(triple)} is not an external line")
        suite.check(key not in listed, f"table2 row {j}: repeats row {listed.get(key)}")
        listed.setdefault(key, j)
    for key in sorted(computed - set(listed)):
        suite.failures.append(f"table2: external line {list(key)} missing")
    suite.details["external_lines"] = len(computed)
    suite.details["lines_scanned"] = len(all_lines())
    return suite


def _suite_isomorphism(fixtures) -> Suite:
    suite = Suite("isomorphism")
    s = tagged_off_structure(fixtures)
    g = build_grassmannian(2, 8)
    params = measure_params(s)
    suite.details["params"] = list(params)
    suite.check(tuple(params) == (28, 6, 56, 3), f"off-quadric parameters are {params}, expected (28_6, 56_3)")
    suite.check(s.is_partial_linear_space(), "off-quadric structure is not a partial linear space")
    try:
        ok = verify_certificate(s, g, published_certificate(fixtures))
    except GeometryError as exc:
        ok = False
        suite.failures.append(f"bijection: {exc}")
    suite.check(ok, "bijection does not map the external lines onto the lines of G_2(8)")
    suite.check(find_isomorphism(s, g) is not None, "no isomorphism found to G_2(8)")
    return suite


def _suite_heptads(fixtures) -> Suite:
    suite = Suite("heptads")
    f = QuadraticForm.canonical()
    graph = build_collinearity_graph(off_quadric_points(f), external_lines(f))
    heptads = find_heptads(graph)
    suite.details["edges"] = len(graph.edges)
    suite.details["heptads"] = len(heptads)
    suite.check(len(heptads) == 8, f"found {len(heptads)} heptads, expected 8")
    try:
        heptad_pair_intersections(heptads, graph.vertices)
    except PropertyViolated as exc:
        suite.failures.append(f"heptad overlaps: {exc}")
    for i, h in enumerate(heptads):
        try:
            lines = h.joining_lines()
        except PropertyViolated as exc:
            suite.failures.append(f"heptad {i}: {exc}")
            continue
        suite.check(
            len(lines) == 21 and all(classify_line(f, l).name == "EXTERNAL" for l in lines),
            f"heptad {i}: joining lines are not 21 distinct external lines",
        )
    rows = fx.row_points(fixtures)
    last = frozenset(rows[i] for i in fx.LAST_HEPTAD_ROWS)
    match = [h for h in heptads if frozenset(h.points) == last]
    suite.check(bool(match), f"rows {fx.LAST_HEPTAD_ROWS[0]}-{fx.LAST_HEPTAD_ROWS[-1]} do not form a heptad")
    try:
        marks = heptads_vs_marks(heptads, published_certificate(fixtures))
        suite.check(sorted(marks.values()) == list(range(1, 9)), "heptad marks are not a bijection onto 1..8")
        if match:
            suite.check(marks[match[0]] == fx.LAST_HEPTAD_MARK, "last seven rows do not share mark 8")
    except (PropertyViolated, KeyError, GeometryError) as exc:
        suite.failures.append(f"heptad marks: {exc}")
    return suite


def _suite_sequence(fixtures, seed: int, n_random: int = 5) -> Suite:
    suite = Suite("sequence")
    f = QuadraticForm.canonical()
    s = off_quadric_structure(f)
    heptads = find_heptads(build_collinearity_graph(off_quadric_points(f), external_lines(f)))
    if len(heptads) != 8:
        suite.failures.append(f"need 8 heptads, found {len(heptads)}")
        return suite
    orders = [list(range(8))] + random_orders(8, n_random, seed)
    suite.details["orders"] = orders
    for order in orders:
        try:
            steps = removal_sequence(s, heptads, order)
        except PropertyViolated as exc:
            suite.failures.append(f"order {order}: {exc}")
            continue
        for step, row in zip(steps, fixtures.nested):
            if row.params is None:
                suite.check(step.is_empty, f"order {order} step {step.step}: structure is not empty")
            else:
                suite.check(
                    step.params == row.params,
                    f"order {order} step {step.step}: parameters {step.params}, expected {row.params}",
                )
                suite.check(step.grassmannian == row.grassmannian and step.certificate is not None,
                            f"order {order} step {step.step}: not isomorphic to G{row.grassmannian}")
    return suite


def verify_all(fixtures: fx.PublishedTables = None, seed: int = 0) -> dict:
    fixtures = fixtures or PUBLISHED
    suites = [
        _suite_table1(fixtures),
        _suite_table2(fixtures),
        _suite_isomorphism(fixtures),
        _suite_heptads(fixtures),
        _suite_sequence(fixtures, seed),
    ]
    return {
        "passed": all(s.passed for s in suites),
        "suites": [s.as_dict() for s in suites],
        "failures": [msg for s in suites for msg in s.failures],
    }


# Argument handling.


def _take_structure(tokens: list[str]) -> tuple[IncidenceStructure, list[str]]:
    """Consume one structure spec from the front of ``tokens``."""
    if not tokens:
        raise UsageError("missing structure spec")
    head, rest = tokens[0], tokens[1:]
    if head == "off-structure":
        return tagged_off_structure(), rest
    if head == "grassmannian":
        if len(rest) < 2:
            raise UsageError("usage: grassmannian K N")
        try:
            k, n = int(rest[0]), int(rest[1])
        except ValueError:
            raise UsageError(f"grassmannian needs integers, got {rest[:2]}") from None
        return build_grassmannian(k, n), rest[2:]
    path = Path(head)
    if path.suffix == ".json" or path.exists():
        try:
            return structure_from_json(path.read_text()), rest
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path} is not valid JSON: {exc}") from None
    raise UnknownSelector(f"unknown structure {head!r}")


def _emit(text: str, out: str | None):
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc}") from None
    else:
        sys.stdout.write(text)


def _heptad_records(fixtures):
    f = QuadraticForm.canonical()
    heptads = find_heptads(build_collinearity_graph(off_quadric_points(f), external_lines(f)))
    rows = {p: i for i, p in fx.row_points(fixtures).items()}
    marks = heptads_vs_marks(heptads, published_certificate(fixtures))
    return heptads, [
        {"index": i, "points": h.labels, "rows": sorted(rows[p] for p in h), "mark": marks[h]}
        for i, h in enumerate(heptads)
    ]


def _sequence_records(fixtures, order):
    s = tagged_off_structure(fixtures)
    heptads, _ = _heptad_records(fixtures)
    steps = removal_sequence(s, heptads, order)
    remarks = {row.removed: row.remark for row in fixtures.nested}
    return [
        {
            "step": st.step,
            "removed_heptad": st.heptad,
            "removed_points": list(st.removed_points),
            "removed_lines": st.removed_lines,
            "params": None if st.is_empty else list(st.params),
            "grassmannian": None if st.grassmannian is None else "G_%d(%d)" % st.grassmannian,
            "remark": remarks.get(st.step, ""),
            "structure": structure_to_dict(st.structure),
        }
        for st in steps
    ]


def _off_structure_csv(fixtures) -> str:
    s = tagged_off_structure(fixtures)
    labels = fx.row_labels(fixtures)
    point_order = [labels[i] for i in sorted(labels)]
    position = {frozenset(labels[i] for i in triple): j for j, triple in enumerate(fixtures.table2)}
    line_order = sorted(s.lines, key=lambda l: (position.get(l, len(position)), sorted(map(int, l))))
    return incidence_csv(s, point_order, line_order, point_headers=sorted(labels))


def cmd_verify_all(args) -> int:
    report = verify_all(args.fixtures, seed=args.seed)
    if args.format == "json":
        _emit(json.dumps(report, indent=2) + "\n", args.out)
    elif not args.quiet:
        lines = []
        for suite in report["suites"]:
            status = "PASS" if suite["passed"] else "FAIL"
            lines.append(f"{status} {suite['name']} {json.dumps(suite['details'], sort_keys=True)}")
            lines.extend(f"  - {msg}" for msg in suite["failures"])
        n_ok = sum(s["passed"] for s in report["suites"])
        lines.append(f"{n_ok}/{len(report['suites'])} suites passed")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report["passed"] else EXIT_FAILED


def cmd_export(args) -> int:
    tokens = list(args.what)
    fmt = args.format or "json"
    selector = tokens[0] if tokens else ""
    if selector == "heptads":
        _, records = _heptad_records(args.fixtures)
        if fmt == "json":
            text = json.dumps({"heptads": records}, indent=2) + "\n"
        elif fmt == "csv":
            text = "index,mark,rows,points\n" + "".join(
                f"{r['index']},{r['mark']},{' '.join(map(str, r['rows']))},{' '.join(r['points'])}\n" for r in records
            )
        else:
            raise UnsupportedFormat(f"heptads cannot be exported as {fmt}")
    elif selector == "sequence":
        records = _sequence_records(args.fixtures, _order_from_seed(args.seed))
        if fmt != "json":
            raise UnsupportedFormat(f"sequence can only be exported as json, not {fmt}")
        text = json.dumps({"steps": records}, indent=2) + "\n"
    else:
        s, rest = _take_structure(tokens)
        if rest:
            raise UsageError(f"unexpected arguments {rest}")
        if fmt == "json":
            text = json.dumps(structure_to_dict(s), indent=2) + "\n"
        elif fmt == "dot":
            text = structure_to_dot(s)
        elif fmt == "csv":
            text = _off_structure_csv(args.fixtures) if selector == "off-structure" else incidence_csv(s)
        else:
            raise UnsupportedFormat(f"unknown format {fmt}")
    _emit(text, args.out)
    return EXIT_OK


def cmd_iso(args) -> int:
    a, rest = _take_structure(list(args.structures))
    b, rest = _take_structure(rest)
    if rest:
        raise UsageError(f"unexpected arguments {rest}")
    cert = find_isomorphism(a, b)
    if cert is None:
        if not args.quiet:
            print(f"not isomorphic: {a.name or 'A'} vs {b.name or 'B'}")
        return EXIT_NOT_ISOMORPHIC
    if args.out:
        _emit(certificate_to_json(cert, a.name, b.name), args.out)
    if not args.quiet:
        print(f"isomorphic: {a.name or 'A'} -> {b.name or 'B'} (certificate verified, {len(cert)} points)")
    return EXIT_OK


def cmd_heptads(args) -> int:
    _, records = _heptad_records(args.fixtures)
    if args.format == "json":
        _emit(json.dumps({"heptads": records}, indent=2) + "\n", args.out)
    elif not args.quiet:
        text = "".join(f"{r['index']}: mark {r['mark']}  rows {r['rows']}\n" for r in records)
        _emit(text, args.out)
    return EXIT_OK


def _order_from_seed(seed):
    return list(range(8)) if seed is None else random_orders(8, 1, seed)[0]


def cmd_sequence(args) -> int:
    records = _sequence_records(args.fixtures, _order_from_seed(args.seed))
    if args.format == "json":
        _emit(json.dumps({"steps": records}, indent=2) + "\n", args.out)
    elif not args.quiet:
        out = []
        for r in records:
            if r["params"] is None:
                config = "empty"
            else:
                n, deg, m, k = r["params"]
                config = f"({n}_{deg}, {m}_{k})"
            out.append(f"{r['step']}  {config:<14} {r['grassmannian'] or '':<8} {r['remark']}".rstrip())
        _emit("\n".join(out) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot", "csv"])
    common.add_argument("--out")
    common.add_argument("--seed", type=int)
    common.add_argument("--quiet", action="store_true")

    parser = argparse.ArgumentParser(prog="kleingrass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-all", parents=[common]).set_defaults(func=cmd_verify_all)
    p = sub.add_parser("export", parents=[common], help="off-structure | grassmannian K N | heptads | sequence | FILE.json")
    p.add_argument("what", nargs="+")
    p.set_defaults(func=cmd_export)
    p = sub.add_parser("iso", parents=[common], help="two structure specs, e.g. off-structure grassmannian 2 8")
    p.add_argument("structures", nargs="+")
    p.set_defaults(func=cmd_iso)
    sub.add_parser("heptads", parents=[common]).set_defaults(func=cmd_heptads)
    sub.add_parser("sequence", parents=[common]).set_defaults(func=cmd_sequence)
    return parser


def main(argv=None, fixtures: fx.PublishedTables | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    args.fixtures = fixtures or PUBLISHED
    if args.command == "verify-all" and args.seed is None:
        args.seed = 0
    try:
        return args.func(args)
    except (UsageError, UnknownSelector, UnsupportedFormat, GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PropertyViolated as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
