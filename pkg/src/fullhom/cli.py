"""Command-line front end.

Exit status: 0 success or property holds, 1 property fails or no partition
exists, 2 usage or input error. Payloads go to stdout, diagnostics (including
timings) to stderr, so stdout is identical across runs and ``--jobs`` values.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import enumeration as en
from .digraph import DigraphError, FormatError, parse_digraph
from .mpartition import (
    Partition,
    find_full_homomorphism,
    format_partition,
    parse_matrix,
    solve_mpartition,
)
from .triples import enumerate_triples, red_free_vertices
from .twins import removable_vertex, twin_pairs


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="latin-1")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _digraph(path: str):
    return parse_digraph(_read(path))


def _matrix(path: str):
    return parse_matrix(_read(path))


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")


def _report(report: en.VerificationReport) -> int:
    _emit(report.to_dict(timing=False))
    print(f"{report.property}: {report.instances} instances in {report.wall_time:.2f}s",
          file=sys.stderr)
    return 0 if report.holds else 1


def cmd_partition(args) -> int:
    P = solve_mpartition(_digraph(args.digraph), _matrix(args.matrix))
    if P is None:
        print("NONE")
        return 1
    sys.stdout.write(format_partition(P))
    return 0


def cmd_hom(args) -> int:
    f = find_full_homomorphism(_digraph(args.digraph), _matrix(args.matrix))
    if f is None:
        print("NONE")
        return 1
    sys.stdout.write(format_partition(Partition(f)))
    return 0


def cmd_twins(args) -> int:
    D = _digraph(args.digraph)
    _emit([
        {"u": u, "v": v, "verdict": c.verdict.value, "witness": c.witness}
        for u, v, c in twin_pairs(D)
    ])
    return 0


def cmd_removable(args) -> int:
    D = _digraph(args.digraph)
    _emit({"vertex": removable_vertex(D), "red_free": sorted(red_free_vertices(D))})
    return 0


def cmd_triples(args) -> int:
    _emit([t.to_dict() for t in enumerate_triples(_digraph(args.digraph))])
    return 0


def cmd_obstructions(args) -> int:
    catalog = en.enumerate_minimal_obstructions(_matrix(args.matrix), args.ceiling, args.jobs)
    text = catalog.to_json()
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="ascii")
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc.strerror or exc}") from exc
        _emit({"output": args.output, "counts_by_order": catalog.to_dict()["counts_by_order"],
               "extremal_count": catalog.extremal_count})
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    if args.property == "sumner":
        return _report(en.verify_point_determining_theorem(args.max_n, args.jobs))
    if args.property == "triples":
        return _report(en.verify_triple_lemma(args.max_n, args.jobs))
    M = _matrix(args.matrix)
    return _report(en.verify_bound(M, args.ceiling, args.jobs, allow_long=args.long))


def cmd_census(args) -> int:
    M = _matrix(args.matrix)
    _emit({"matrix": M.rows(), "bound": M.bound,
           "extremal_count": en.extremal_census(M, args.jobs)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fullhom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn in (("partition", cmd_partition), ("hom", cmd_hom)):
        p = sub.add_parser(name)
        p.add_argument("--digraph", required=True)
        p.add_argument("--matrix", required=True)
        p.set_defaults(func=fn)

    for name, fn in (("twins", cmd_twins), ("removable", cmd_removable), ("triples", cmd_triples)):
        p = sub.add_parser(name)
        p.add_argument("--digraph", required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("obstructions")
    p.add_argument("--matrix", required=True)
    p.add_argument("--ceiling", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_obstructions)

    p = sub.add_parser("verify")
    vsub = p.add_subparsers(dest="property", required=True)
    for name in ("sumner", "triples"):
        v = vsub.add_parser(name)
        v.add_argument("--max-n", type=int, required=True)
        v.add_argument("--jobs", type=int, default=1)
    v = vsub.add_parser("bound")
    v.add_argument("--matrix", required=True)
    v.add_argument("--ceiling", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--long", action="store_true", help="allow ceilings above order 6")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census")
    p.add_argument("--matrix", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FormatError, DigraphError, ValueError) as exc:
        print(f"fullhom: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
