"""Command line verifier: verify, example, bisum, decompose.

Exit codes: 0 every checked identity holds, 1 at least one fails (the
report is still emitted), 2 the input could not be used at all.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .bosonization import (
    PreconditionError,
    bisum_presentation,
    check_decomposition_theorem,
    split_decompose,
)
from .crossed_modules import (
    check_comodule,
    check_crossed_axiom,
    check_eta_hat_morphism,
    check_module,
    check_zeta_lemma,
    induced_eta,
    verify_crossed_bialgebra,
)
from .example_zoo import jordan_plane, laistrygonian, super_jordan_plane
from .fields import QQ, Field, FieldError
from .lie_structures import (
    StructureError,
    check_antisymmetry,
    check_bialgebra_compatibility,
    check_bialgebra_equivalent_form,
    check_coantisymmetry,
    check_cojacobi,
    check_jacobi,
    check_jacobi_equivalent_form,
    verify_lie_bialgebra,
)
from .reporting import VerificationReport
from .serialization import (
    ParsedStructure,
    ParseError,
    canonical_json,
    parse_path,
    serialize_crossed,
    serialize_plain,
)

AXIOM_GROUPS = ("all", "lie", "colie", "bialg", "module", "comodule", "crossed", "lemma")


def emit_report(report: VerificationReport, fmt: str, color: bool = False) -> bytes:
    """Render a report as deterministic bytes (text or stable-keyed JSON)."""
    if fmt == "json":
        doc = {
            "passed": report.passed,
            "entries": [
                {
                    "axiom": e.axiom,
                    "passed": e.passed,
                    "witness": None
                    if e.witness is None
                    else {
                        "tensor": e.witness.tensor,
                        "residual": [list(pair) for pair in e.witness.residual],
                    },
                }
                for e in report.entries
            ],
        }
        return (json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode(
            "utf-8"
        )
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    ok, bad = "PASS", "FAIL"
    if color:
        ok, bad = "\x1b[32mPASS\x1b[0m", "\x1b[31mFAIL\x1b[0m"
    lines = []
    for e in report.entries:
        if e.passed:
            lines.append(f"{ok} {e.axiom}")
        else:
            residual = " + ".join(f"({c})*{label}" for label, c in e.witness.residual)
            lines.append(f"{bad} {e.axiom}  @ {e.witness.tensor}  residual: {residual}")
    failed = len(report.failures())
    total = len(report.entries)
    lines.append(
        f"all {total} checks passed" if failed == 0 else f"{failed} of {total} checks failed"
    )
    return ("\n".join(lines) + "\n").encode("utf-8")


def _want_color() -> bool:
    return sys.stdout.isatty() and "NO_COLOR" not in os.environ


def _select_crossed(parsed: ParsedStructure, group: str) -> VerificationReport:
    k = parsed.crossed
    if group == "all":
        return verify_crossed_bialgebra(k)
    L = k.as_bialgebra()
    if group == "lie":
        return VerificationReport.of(
            [check_antisymmetry(L), check_jacobi(L), check_jacobi_equivalent_form(L)]
        )
    if group == "colie":
        return VerificationReport.of([check_coantisymmetry(L), check_cojacobi(L)])
    if group == "bialg":
        eta_hat = induced_eta(k.cm, k.cm)
        return VerificationReport.of(
            [
                check_bialgebra_compatibility(L, eta_hat),
                check_bialgebra_equivalent_form(L, eta_hat),
            ]
        )
    if group == "module":
        return VerificationReport.of([check_module(k.cm)])
    if group == "comodule":
        return VerificationReport.of([check_comodule(k.cm)])
    if group == "crossed":
        return VerificationReport.of([check_crossed_axiom(k.cm)])
    if group == "lemma":
        return check_zeta_lemma(k.cm, k.cm).merged(check_eta_hat_morphism(k.cm, k.cm))
    raise ValueError(group)


def _select_plain(parsed: ParsedStructure, group: str) -> VerificationReport:
    L = parsed.plain
    if group == "all":
        return verify_lie_bialgebra(L)
    if group == "lie":
        return VerificationReport.of(
            [check_antisymmetry(L), check_jacobi(L), check_jacobi_equivalent_form(L)]
        )
    if group == "colie":
        return VerificationReport.of([check_coantisymmetry(L), check_cojacobi(L)])
    if group == "bialg":
        return VerificationReport.of(
            [check_bialgebra_compatibility(L), check_bialgebra_equivalent_form(L)]
        )
    raise _InputError(f"axiom group {group!r} needs a crossed-module structure")


class _InputError(Exception):
    pass


def _write_output(data: bytes, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as handle:
            handle.write(data)


def _cmd_verify(args) -> int:
    parsed = parse_path(args.file)
    if parsed.kind == "crossed":
        report = _select_crossed(parsed, args.axioms)
    else:
        report = _select_plain(parsed, args.axioms)
    sys.stdout.buffer.write(emit_report(report, args.report, color=_want_color() and args.report == "text"))
    sys.stdout.buffer.flush()
    return 0 if report.passed else 1


def _cmd_example(args) -> int:
    field = Field.from_description(args.field)
    if args.name == "jordan":
        k = jordan_plane(field)
    elif args.name == "superjordan":
        k = super_jordan_plane(field)
    else:
        chi = QQ.parse(args.chi_gh)  # strict p/q grammar, no decimals
        k = laistrygonian(args.G, chi, field)
    _write_output(canonical_json(serialize_crossed(k)), args.output)
    return 0


def _cmd_bisum(args) -> int:
    parsed = parse_path(args.file)
    if parsed.kind != "crossed":
        raise _InputError("bisum needs a crossed-module structure file")
    try:
        g, pi, gamma = bisum_presentation(parsed.crossed)
    except PreconditionError as exc:
        sys.stdout.buffer.write(emit_report(exc.report, args.report, color=False))
        sys.stdout.buffer.flush()
        return 1
    _write_output(
        canonical_json(serialize_plain(g, base=parsed.crossed.base, pi=pi, gamma=gamma)),
        args.output,
    )
    return 0


def _cmd_decompose(args) -> int:
    parsed = parse_path(args.file)
    if parsed.kind != "plain" or parsed.pi is None:
        raise _InputError("decompose needs a plain structure file tagging base, pi and gamma")
    try:
        bp, k = split_decompose(parsed.plain, parsed.base, parsed.pi, parsed.gamma)
    except PreconditionError as exc:
        sys.stdout.buffer.write(emit_report(exc.report, args.report, color=False))
        sys.stdout.buffer.flush()
        return 1
    report = check_decomposition_theorem(bp, k)
    sys.stdout.buffer.write(emit_report(report, args.report, color=False))
    sys.stdout.buffer.flush()
    if args.output is not None:
        _write_output(canonical_json(serialize_crossed(k)), args.output)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorlie",
        description="Exact verification of curved Lie bialgebras over color vector spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run axiom checks on a structure file")
    p_verify.add_argument("file")
    p_verify.add_argument("--axioms", choices=AXIOM_GROUPS, default="all")
    p_verify.add_argument("--report", choices=("text", "json"), default="text")
    p_verify.set_defaults(fn=_cmd_verify)

    p_example = sub.add_parser("example", help="emit a built-in example structure")
    p_example.add_argument("name", choices=("jordan", "superjordan", "laistrygonian"))
    p_example.add_argument("--G", type=int, default=0, help="chain length (laistrygonian)")
    p_example.add_argument("--field", default="Q", help="Q or Fp:<p>")
    p_example.add_argument("--chi-gh", dest="chi_gh", default="1", help="symmetry value chi(g,h)")
    p_example.add_argument("-o", "--output", default=None)
    p_example.set_defaults(fn=_cmd_example)

    p_bisum = sub.add_parser("bisum", help="assemble the bisum bialgebra of a crossed structure")
    p_bisum.add_argument("file")
    p_bisum.add_argument("-o", "--output", required=True)
    p_bisum.add_argument("--report", choices=("text", "json"), default="text")
    p_bisum.set_defaults(fn=_cmd_bisum)

    p_dec = sub.add_parser("decompose", help="decompose a split surjection along its kernel")
    p_dec.add_argument("file")
    p_dec.add_argument("-o", "--output", required=True)
    p_dec.add_argument("--report", choices=("text", "json"), default="text")
    p_dec.set_defaults(fn=_cmd_decompose)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (OSError, _InputError, FieldError, StructureError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())
