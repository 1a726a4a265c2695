"""Command-line interface.

Exit codes: 0 success/pass, 1 counterexample or validation failure,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys

from .classify import classify
from .construct import direct_product, quotient, IllDefinedQuotientError
from .core import validate_krasner
from .corpus import builtin_corpus
from .documents import DocumentError, load_path, serialize_document
from .ideals import (ImproperIdealError, enumerate_hyperideals,
                     hyperideal_violations, make_hyperideal,
                     radical_by_primes, radical_by_powers)
from .theorems import run_all, summary_line


class _CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load(path, skip_validation=False):
    try:
        ring = load_path(path, validate=False)
    except DocumentError as e:
        raise _CliError(f"{path}: {e}", 2)
    except OSError as e:
        raise _CliError(f"{path}: {e}", 2)
    ring.validation = validate_krasner(ring)
    if not ring.validation.passed and not skip_validation:
        raise _CliError(
            f"{path}: validation failed "
            f"({len(ring.validation.violations)} violations); "
            f"run `hr validate {path}` for the report or pass --no-validate",
            1)
    return ring


def _members(ring, spec):
    try:
        return frozenset(ring.index(lab) for lab in spec.split(","))
    except KeyError as e:
        raise _CliError(str(e), 2)


def _cmd_validate(args):
    try:
        ring = load_path(args.file, validate=False)
    except (DocumentError, OSError) as e:
        raise _CliError(f"{args.file}: {e}", 2)
    report = validate_krasner(ring)
    sys.stdout.write(report.render(ring.name))
    return 0 if report.passed else 1


def _cmd_ideals(args):
    ring = _load(args.file, args.no_validate)
    for ideal in enumerate_hyperideals(ring):
        print(",".join(ring.labels[i] for i in sorted(ideal.members)))
    return 0


def _cmd_radical(args):
    ring = _load(args.file, args.no_validate)
    members = _members(ring, args.ideal)
    bad = hyperideal_violations(ring, members)
    if bad:
        print(f"warning: {ring.subset_label(members)} is not a hyperideal "
              f"({bad[0]})")
    by_primes = radical_by_primes(ring, members)
    by_powers = radical_by_powers(ring, members)
    print("ideal: " + ",".join(ring.labels[i] for i in sorted(members)))
    print("radical_by_primes: " + ",".join(ring.labels[i] for i in sorted(by_primes)))
    print("radical_by_powers: " + ",".join(ring.labels[i] for i in sorted(by_powers)))
    agree = by_primes == by_powers
    print(f"agree: {'yes' if agree else 'no'}")
    return 0 if agree else 1


def _cmd_classify(args):
    ring = _load(args.file, args.no_validate)
    members = _members(ring, args.ideal)
    bad = hyperideal_violations(ring, members)
    if bad:
        print(f"warning: {ring.subset_label(members)} is not a hyperideal "
              f"({bad[0]})")
    ideal = make_hyperideal(ring, members, strict=False)
    try:
        record = classify(ideal, k_max=args.kmax)
    except ImproperIdealError as e:
        raise _CliError(f"improper ideal: {e}", 2)
    print("ideal: " + ",".join(ring.labels[i] for i in sorted(members)))
    print(f"is_hyperideal={'true' if ideal.valid else 'false'}")
    for line in record.render_lines():
        print(line)
    return 0


def _cmd_product(args):
    a = _load(args.file_a, args.no_validate)
    b = _load(args.file_b, args.no_validate)
    try:
        ring = direct_product(a, b)
    except Exception as e:
        raise _CliError(str(e), 2)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(serialize_document(ring))
    print(f"wrote {ring.name} ({ring.size} elements) to {args.output}")
    return 0


def _cmd_quotient(args):
    ring = _load(args.file, args.no_validate)
    members = _members(ring, args.ideal)
    bad = hyperideal_violations(ring, members)
    if bad:
        raise _CliError(f"{ring.subset_label(members)} is not a hyperideal "
                        f"({bad[0]})", 1)
    try:
        table, _ = quotient(ring, make_hyperideal(ring, members))
    except (IllDefinedQuotientError, ValueError) as e:
        raise _CliError(str(e), 1)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(serialize_document(table))
    print(f"wrote {table.name} ({table.size} elements) to {args.output}")
    return 0


def _cmd_theorems(args):
    if args.files:
        structures = [_load(p, args.no_validate) for p in args.files]
    else:
        structures = builtin_corpus()
    reports = run_all(structures, k=args.kmax)
    for report in reports:
        print(report.render())
    print(summary_line(reports))
    return 0 if all(r.status != "fail" for r in reports) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hr",
        description="Workbench for finite Krasner (m,n)-hyperring tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="print the axiom validation report")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    def common(p):
        p.add_argument("--no-validate", action="store_true",
                       help="work on the table even if axiom validation fails")

    p = sub.add_parser("ideals", help="list all hyperideals")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser("radical", help="radical of an ideal by both algorithms")
    p.add_argument("file")
    p.add_argument("--ideal", required=True,
                   help="comma-joined element labels")
    common(p)
    p.set_defaults(func=_cmd_radical)

    p = sub.add_parser("classify", help="full predicate record for an ideal")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--kmax", type=int, default=2,
                   help="largest k for the absorbing predicates (default 2)")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("product", help="write the direct product document")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("-o", "--output", required=True)
    common(p)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("quotient", help="write the quotient document")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)
    p.add_argument("-o", "--output", required=True)
    common(p)
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("theorems",
                       help="run the theorem harness (default: builtin corpus)")
    p.add_argument("files", nargs="*")
    p.add_argument("--kmax", type=int, default=2)
    common(p)
    p.set_defaults(func=_cmd_theorems)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
