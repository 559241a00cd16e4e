"""Command line front end.

Subcommands: validate, rho, rho-inv, rectify, evacuate, eviction, expand,
check-qsym, verify.  Tableaux are read from a file argument or stdin, in the
canonical text format or the JSON format (auto-detected); ``--json`` writes
tableau output as JSON.  Exit codes: 0 success, 1 counterexample or failed
check, 2 invalid input, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import rho, rho_inv
from .ct_rectify import eviction, phi, phi_steps
from .jeu_de_taquin import evacuate, rectify_k, rectify_k_steps, shifting_entries
from .polynomials import (
    is_quasisymmetric,
    is_symmetric,
    monomial_qsym_expand,
    monomial_sym_expand,
    parse_polynomial,
    render_polynomial,
    schur_expand,
)
from .tableaux import (
    Filling,
    InvalidTableauError,
    InvariantViolationError,
    KINDS,
    ParseError,
    ShapeUndefinedError,
    filling_from_json,
    filling_to_json,
    parse_filling,
    render_filling,
    violations,
)
from .verify import PROPERTY_NAMES, run_property

EX_OK = 0
EX_COUNTEREXAMPLE = 1
EX_INVALID_INPUT = 2
EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _read_tableau(path: str) -> Filling:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return filling_from_json(text)
    return parse_filling(text)


def _emit_tableau(f: Filling, as_json: bool) -> None:
    print(filling_to_json(f) if as_json else render_filling(f))


def _parse_parts(raw: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(tok) for tok in raw.split(","))
    except ValueError:
        raise ParseError(f"bad shape {raw!r}: expected comma-separated integers")
    if not parts or any(p < 1 for p in parts):
        raise ParseError(f"bad shape {raw!r}: parts must be positive")
    return parts


def _parse_k_range(raw: str) -> tuple[int, int]:
    lo, sep, hi = raw.partition("..")
    try:
        if not sep:
            k = int(raw)
            return (k, k)
        return (int(lo), int(hi))
    except ValueError:
        raise ParseError(f"bad k range {raw!r}: expected 'a..b' or a single integer")


def _cmd_validate(args) -> int:
    f = _read_tableau(args.file)
    found = violations(args.kind, f)
    if found:
        for v in found:
            print(v)
        return EX_INVALID_INPUT
    print(f"valid {args.kind}")
    return EX_OK


def _cmd_rho(args) -> int:
    _emit_tableau(rho(_read_tableau(args.file)), args.json)
    return EX_OK


def _cmd_rho_inv(args) -> int:
    _emit_tableau(rho_inv(_read_tableau(args.file)), args.json)
    return EX_OK


def _print_block(label: str, f: Filling) -> None:
    print(f"== {label}")
    text = render_filling(f)
    if text:
        print(text)


def _cmd_rectify(args) -> int:
    f = _read_tableau(args.file)
    if args.kind == "rssyt":
        if args.trace:
            for label, state in rectify_k_steps(f, args.cells):
                _print_block(label, state)
        else:
            result, traces = rectify_k(f, args.cells)
            _emit_tableau(result, args.json)
            report = shifting_entries(traces)
            for c in sorted(report):
                print(f"shift column {c}: {' '.join(str(e) for e in report[c])}", file=sys.stderr)
    else:
        if args.trace:
            for label, state in phi_steps(f, args.cells):
                _print_block(label, state)
        else:
            _emit_tableau(phi(f, args.cells), args.json)
    return EX_OK


def _cmd_evacuate(args) -> int:
    _emit_tableau(evacuate(_read_tableau(args.file)), args.json)
    return EX_OK


def _cmd_eviction(args) -> int:
    report = eviction(_read_tableau(args.file), args.cells)
    for c in sorted(report):
        print(f"column {c}: {' '.join(str(e) for e in report[c])}")
    return EX_OK


def _cmd_expand(args) -> int:
    parts = _parse_parts(args.parts)
    try:
        if args.basis == "schur":
            poly = schur_expand(parts, args.vars)
        elif args.basis == "msym":
            poly = monomial_sym_expand(parts, args.vars)
        else:
            poly = monomial_qsym_expand(parts, args.vars)
    except ValueError as exc:  # e.g. a non-partition shape for schur/msym
        raise ParseError(str(exc)) from exc
    text = render_polynomial(poly)
    if text:
        print(text)
    return EX_OK


def _cmd_check_qsym(args) -> int:
    poly = parse_polynomial(_read_text(args.file))
    qsym = is_quasisymmetric(poly)
    print(f"quasisymmetric: {'true' if qsym else 'false'}")
    print(f"symmetric: {'true' if is_symmetric(poly) else 'false'}")
    return EX_OK if qsym else EX_COUNTEREXAMPLE


def _cmd_verify(args) -> int:
    k_range = _parse_k_range(args.k_range) if args.k_range else None
    report = run_property(
        args.property, args.max_cells, args.max_entry, k_range=k_range, jobs=args.jobs
    )
    print(report.render())
    print(f"time: {report.seconds:.2f}s", file=sys.stderr)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(report.to_json(), handle, indent=2)
            handle.write("\n")
    return EX_OK if report.ok else EX_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ctrect", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def tableau_command(name: str, func, help_text: str, cells: bool = False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", nargs="?", default="-", help="tableau file, or - for stdin")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if cells:
            p.add_argument("--cells", type=int, default=1, metavar="K", help="number of first-column cells")
        p.set_defaults(func=func)
        return p

    p = sub.add_parser("validate", help="check a filling against one tableau family")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=_cmd_validate)

    tableau_command("rho", _cmd_rho, "composition tableau -> reverse SSYT")
    tableau_command("rho-inv", _cmd_rho_inv, "reverse SSYT -> composition tableau")

    p = tableau_command("rectify", _cmd_rectify, "rectify k first-column cells", cells=True)
    p.add_argument("--kind", choices=("rssyt", "ct"), required=True)
    p.add_argument("--trace", action="store_true", help="print every intermediate diagram")

    tableau_command("evacuate", _cmd_evacuate, "evacuation of a reverse SSYT")

    p = sub.add_parser("eviction", help="shifting entries via the eviction ordering")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--cells", type=int, default=1, metavar="K")
    p.set_defaults(func=_cmd_eviction)

    p = sub.add_parser("expand", help="expand a polynomial basis element")
    p.add_argument("basis", choices=("schur", "msym", "mqsym"))
    p.add_argument("parts", help="shape as comma-separated parts, e.g. 2,1")
    p.add_argument("--vars", type=int, required=True, metavar="N")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("check-qsym", help="test a polynomial file for quasisymmetry")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=_cmd_check_qsym)

    p = sub.add_parser("verify", help="exhaustively check a property within bounds")
    p.add_argument("--property", choices=PROPERTY_NAMES, required=True)
    p.add_argument("--max-cells", type=int, required=True)
    p.add_argument("--max-entry", type=int, required=True)
    p.add_argument("--k-range", metavar="A..B", help="restrict k (default: 1..rows)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", metavar="FILE", help="also write the report as JSON")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ShapeUndefinedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_INVALID_INPUT
    except InvalidTableauError as exc:
        for v in exc.violations:
            print(v, file=sys.stderr)
        return EX_INVALID_INPUT
    except InvariantViolationError as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        return EX_COUNTEREXAMPLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
