"""Command line front end.

Subcommands: dual, decompose, betti, bass, scarf, hull, cohull, taylor,
verify, staircase.  The ideal argument is a document path, a fixture tag
like paper:fig1, or "-" for stdin.  Reports are stable JSON on stdout;
staircase emits SVG.  Exit codes: 0 success, 2 cap exceeded, 3 precondition
or input error.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from fractions import Fraction

from . import lattice as lt
from .complexes import LabelledCellComplex, scarf_complex, taylor_complex
from .corpus import FIXTURE_NAMES, fixture_document, make_corpus
from .documents import (
    IdealDocument,
    build_report,
    document_to_ideal,
    format_monomial,
    ideal_to_document,
    parse_ideal_document,
    serialize_report,
)
from .errors import CapExceededError, PreconditionError
from .homology import RangeFlagWarning, bass_number, betti_table
from .hull import cohull, hull_complex
from .ideals import MonomialIdeal
from .resolutions import cellular_free_complex, is_exact_resolution, is_minimal
from .staircase import staircase_svg
from .verify import run_identity_suite, suite_passed

EXIT_OK = 0
EXIT_CAP = 2
EXIT_PRECONDITION = 3


def _parse_vector(text: str, n: int | None = None) -> tuple[int, ...]:
    try:
        v = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise PreconditionError(f"bad vector {text!r}; expected comma-separated integers") from None
    if n is not None and len(v) != n:
        raise PreconditionError(f"vector {text!r} has length {len(v)}, expected {n}")
    return v


def _parse_face(text: str, n: int) -> frozenset[int]:
    try:
        raw = [int(part) for part in text.split(",")]
    except ValueError:
        raise PreconditionError(f"bad face {text!r}; expected comma-separated indices") from None
    if any(i < 1 or i > n for i in raw):
        raise PreconditionError(f"face indices in {text!r} must lie in 1..{n}")
    return frozenset(i - 1 for i in raw)


def _parse_field(text: str) -> int | None:
    if text == "q":
        return None
    if text.startswith("p:"):
        try:
            p = int(text[2:])
        except ValueError:
            raise PreconditionError(f"bad field {text!r}") from None
        if p < 2 or any(p % d == 0 for d in range(2, min(p, 1000)) if d * d <= p):
            raise PreconditionError(f"field characteristic {p} is not prime")
        return p
    raise PreconditionError(f"bad field {text!r}; expected q or p:<prime>")


def _parse_t(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise PreconditionError(f"bad hull parameter {text!r}; expected a rational") from None


def _load_document(spec: str) -> IdealDocument:
    if spec.startswith("paper:"):
        return fixture_document(spec[len("paper:"):])
    if spec == "-":
        return parse_ideal_document(sys.stdin.read())
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise PreconditionError(f"cannot read {spec!r}: {exc}") from None
    return parse_ideal_document(text)


def _complex_payload(complex_: LabelledCellComplex) -> dict:
    cells = sorted(complex_.cells.values(), key=lambda c: (c.dim, sorted(c.key)))
    return {
        "f_vector": list(complex_.f_vector()),
        "cells": [
            {"vertices": sorted(c.key), "dim": c.dim, "label": list(c.label)} for c in cells
        ],
    }


def _resolution_payload(fc, ideal, field, cap, strict) -> dict:
    report = is_exact_resolution(fc, ideal, strict=strict, field=field, cap=cap)
    return {
        "ranks": {h: fc.rank(h) for h in fc.positions()},
        "degrees": {h: [list(d) for d in fc.terms[h]] for h in fc.positions()},
        "exact": report.exact,
        "minimal": report.minimal,
        "scanned_degrees": report.scanned,
    }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="momidual",
        description="Alexander duality, Betti/Bass numbers and cellular resolutions "
        "of monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, needs_ideal: bool = True, **kwargs):
        p = sub.add_parser(name, **kwargs)
        if needs_ideal:
            p.add_argument("ideal", help="document path, paper:<name>, or - for stdin")
        p.add_argument("--box-cap", type=int, default=None, help="lattice-point cap override")
        p.add_argument("--field", default="q", help="q for rationals or p:<prime>")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
        return p

    for name in ("dual", "decompose"):
        p = add(name, help=f"{name} of a monomial ideal")
        p.add_argument("--a", default=None, help="dual vector, comma separated (default a_I)")

    add("betti", help="multigraded Betti table")

    p = add("bass", help="one Bass number against the monomial prime of a face")
    p.add_argument("--face", required=True, help="1-based variable indices, comma separated")
    p.add_argument("--degree", required=True, help="degree vector d, comma separated")
    p.add_argument("-i", "--index", type=int, required=True, help="cohomological index i")

    for name in ("scarf", "taylor"):
        p = add(name, help=f"{name} complex with its free complex summary")
        p.add_argument("--strict-scan", action="store_true", help="scan the full degree box")

    p = add("hull", help="hull complex of the ideal")
    p.add_argument("--t", default=None, help="rational hull parameter (default (n+1)!+1)")
    p.add_argument("--strict-scan", action="store_true", help="scan the full degree box")

    p = add("cohull", help="cocellular resolution from the hull of the augmented dual")
    p.add_argument("--a", default=None, help="dual vector (default a_I)")
    p.add_argument("--t", default=None, help="rational hull parameter")
    p.add_argument("--strict-scan", action="store_true", help="scan the full degree box")

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("ideal", nargs="?", default=None, help="document path, paper:<name>, or -")
    p.add_argument("--kind", default=None, help="corpus kind when no ideal is given")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--gens", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1, help="number of seeds to run")
    p.add_argument("--box-cap", type=int, default=None)
    p.add_argument("--field", default="q")

    p = add("staircase", help="SVG staircase diagram for n in {2,3}")
    p.add_argument("--format", default="svg", choices=["svg"])
    return parser


def _run(args: argparse.Namespace) -> str:
    field = _parse_field(args.field)
    cap = args.box_cap
    command = args.command

    if command == "verify":
        return _run_verify(args, field, cap)

    doc = _load_document(args.ideal)
    ideal = document_to_ideal(doc)
    echo = [command, args.ideal]

    if command == "staircase":
        return staircase_svg(ideal)

    if command == "dual":
        a = _parse_vector(args.a, ideal.n) if args.a else ideal._dual_vector(None)
        dual = ideal.alexander_dual(a)
        results = {
            "a": list(a),
            "generators": [list(g) for g in dual.gens],
            "monomials": [format_monomial(g, doc.vars) for g in dual.gens],
            "count": len(dual.gens),
        }
        return serialize_report(build_report(echo, doc, results))

    if command == "decompose":
        comps = ideal.irreducible_decomposition()
        results = {
            "components": [list(b) for b in comps],
            "supports": [sorted(i + 1 for i in lt.support(b)) for b in comps],
            "count": len(comps),
        }
        return serialize_report(build_report(echo, doc, results))

    if command == "betti":
        table = betti_table(ideal, field=field, cap=cap)
        entries = [
            {"i": i, "degree": list(b), "value": v}
            for (i, b), v in sorted(table.entries.items())
        ]
        results = {
            "entries": entries,
            "totals": list(table.totals()),
            "regular_grading": {
                f"{i},{d}": v for (i, d), v in sorted(table.z_graded().items())
            },
        }
        return serialize_report(build_report(echo, doc, results))

    if command == "bass":
        face = _parse_face(args.face, ideal.n)
        d = _parse_vector(args.degree, ideal.n)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            value = bass_number(ideal, face, d, args.index, field=field)
        flagged = any(issubclass(w.category, RangeFlagWarning) for w in caught)
        results = {
            "face": sorted(i + 1 for i in face),
            "degree": list(d),
            "index": args.index,
            "value": value,
            "in_range": not flagged,
        }
        return serialize_report(build_report(echo, doc, results))

    if command in ("scarf", "taylor", "hull"):
        if command == "scarf":
            complex_ = scarf_complex(ideal)
        elif command == "taylor":
            complex_ = taylor_complex(ideal)
        else:
            t = _parse_t(args.t) if args.t else None
            complex_ = hull_complex(ideal, t=t)
        payload = _complex_payload(complex_)
        fc = cellular_free_complex(complex_)
        payload.update(_resolution_payload(fc, ideal, field, cap, args.strict_scan))
        return serialize_report(build_report(echo, doc, payload))

    if command == "cohull":
        a = _parse_vector(args.a, ideal.n) if args.a else ideal._dual_vector(None)
        t = _parse_t(args.t) if args.t else None
        fc = cohull(ideal, a, t=t)
        payload = {"a": list(a)}
        payload.update(_resolution_payload(fc, ideal, field, cap, args.strict_scan))
        return serialize_report(build_report(echo, doc, payload))

    raise PreconditionError(f"unknown command {command!r}")


def _run_verify(args: argparse.Namespace, field, cap) -> str:
    if args.ideal is None and args.kind is None:
        raise PreconditionError("verify needs an ideal argument or --kind")
    runs: list[tuple[str, MonomialIdeal, dict]] = []
    if args.ideal is not None:
        doc = _load_document(args.ideal)
        runs.append((args.ideal, document_to_ideal(doc), doc.attributes))
        echo = ["verify", args.ideal]
    else:
        for k in range(args.count):
            ideal = make_corpus(args.kind, n=args.n, seed=args.seed + k, size=args.gens)
            runs.append((f"{args.kind}[seed={args.seed + k}]", ideal, {}))
        echo = ["verify", f"--kind={args.kind}"]
    checks = []
    notes = []
    ok = True
    for tag, ideal, attributes in runs:
        results = run_identity_suite(
            ideal, field=field, seed=args.seed, attributes=attributes, cap=cap
        )
        ok = ok and suite_passed(results)
        for r in results:
            checks.append({"ideal": tag, "name": r.name, "status": r.status, "detail": r.detail})
            if r.name.startswith("expected_") and r.status == "pass":
                notes.append(f"{tag}: {r.name} matches the attached expectation")
            if r.status == "info" and r.detail:
                notes.append(f"{tag}: {r.name}: {r.detail}")
    report = build_report(
        echo,
        None,
        {"checks": checks, "all_pass": ok, "runs": len(runs)},
        notes=sorted(notes),
    )
    return serialize_report(report)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        output = _run(args)
    except CapExceededError as exc:
        print(f"momidual: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PreconditionError as exc:
        print(f"momidual: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
