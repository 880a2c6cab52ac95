"""Command-line interface.

Results go to stdout and diagnostics to stderr.  Exit status: 0 when the
sequent is provable or valid or the proof checks, 1 when it is not (a
countermodel or error report is printed), 2 on usage, parse or cap errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .calculus import Calculus, ProofTree, check_proof
from .derived import elaborate
from .display import proof_latex, proof_text
from .errors import NonsenseError
from .formula import SIGNATURES, expand_to, parse, render
from .prover import Refutation, prove, prove_classical
from .semantics import Countermodel, classify, countermodel, get_logic, truth_table
from .sequent import parse_sequent

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2

_FORMATS = ("text", "json", "latex")


class _Parser(argparse.ArgumentParser):
    # Raise instead of exiting so run() can report the status to its caller.
    def error(self, message: str):
        raise _UsageError(f"{self.prog}: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nonsense", description="Three-valued nonsense logics B3 and H3.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("prove", help="prove a sequent or print a countermodel")
    p.add_argument("sequent")
    p.add_argument("--calculus", choices=[c.value for c in Calculus], default="h")
    p.add_argument("--format", choices=_FORMATS, default="text")
    p.add_argument("--derived", action="store_true", help="keep & | -> and use the derived rules")
    p.add_argument("--elaborate", action="store_true", help="expand derived rules into primitive ones")

    p = sub.add_parser("valid", help="decide validity of a sequent")
    p.add_argument("sequent")
    p.add_argument("--logic", choices=["b3", "h3", "cpl"], default="h3")
    p.add_argument("--format", choices=_FORMATS[:2], default="text")

    p = sub.add_parser("classify", help="classify an inference 'premises => conclusion'")
    p.add_argument("inference")
    p.add_argument("--format", choices=_FORMATS[:2], default="text")

    p = sub.add_parser("table", help="print the truth table of a formula")
    p.add_argument("formula")
    p.add_argument("--logic", choices=["b3", "h3", "cpl"], default="h3")
    p.add_argument("--format", choices=_FORMATS[:2], default="text")

    p = sub.add_parser("check", help="check a proof in JSON form")
    p.add_argument("proof", help="proof file, or - for stdin")
    p.add_argument("--calculus", choices=[c.value for c in Calculus], default="h")
    p.add_argument("--cut-free-check", action="store_true", help="also reject any use of Cut")
    p.add_argument("--format", choices=_FORMATS[:2], default="text")

    p = sub.add_parser("expand", help="rewrite defined connectives")
    p.add_argument("formula")
    p.add_argument("--to", choices=["sigma1", "sigma2"], required=True)
    p.add_argument("--format", choices=_FORMATS[:2], default="text")
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    handler = _HANDLERS[args.command]
    try:
        return handler(args, out, err)
    except (NonsenseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


def _emit_json(data, out: TextIO) -> None:
    json.dump(data, out, indent=2, ensure_ascii=False)
    out.write("\n")


def _emit_countermodel(cm: Countermodel, fmt: str, out: TextIO, err: TextIO) -> None:
    print(f"not valid in {cm.logic.name}", file=err)
    if fmt == "json":
        _emit_json(cm.to_dict(), out)
    else:
        print(str(cm.valuation), file=out)


def _cmd_prove(args, out, err) -> int:
    calculus = Calculus.parse(args.calculus)
    seq = parse_sequent(args.sequent, None)
    native = calculus.native_signature
    if not args.derived and not seq.admitted_by(native):
        seq = seq.expand(native)
        print(f"expanded to {native.name}: {seq}", file=err)
    if calculus in (Calculus.H, Calculus.B):
        result = prove(seq, calculus, derived=args.derived)
    else:
        result = prove_classical(seq, calculus)
        if isinstance(result, Refutation):
            result = result.countermodel
    if isinstance(result, Countermodel):
        _emit_countermodel(result, args.format, out, err)
        return EXIT_NO
    if args.elaborate:
        result = elaborate(result, calculus)
    _emit_proof(result, args.format, out)
    return EXIT_OK


def _emit_proof(t: ProofTree, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        _emit_json(t.to_dict(), out)
    elif fmt == "latex":
        print(proof_latex(t), file=out)
    else:
        print(proof_text(t), file=out)


def _cmd_valid(args, out, err) -> int:
    logic = get_logic(args.logic)
    seq = parse_sequent(args.sequent, None)
    cm = countermodel(seq, logic)
    if cm is not None:
        _emit_countermodel(cm, args.format, out, err)
        return EXIT_NO
    if args.format == "json":
        _emit_json({"logic": logic.id.value, "valid": True, "sequent": seq.to_dict()}, out)
    else:
        print("valid", file=out)
    return EXIT_OK


def _cmd_classify(args, out, err) -> int:
    seq = parse_sequent(args.inference, None)
    if len(seq.suc) != 1:
        raise ValueError("an inference has exactly one conclusion")
    (conclusion,) = seq.suc
    report = classify(seq.ant, conclusion)
    if args.format == "json":
        _emit_json(report.to_dict(), out)
    else:
        for name, ok in (("CPL", report.cpl_valid), ("B3", report.b3_valid), ("H3", report.h3_valid)):
            print(f"{name}: {'valid' if ok else 'invalid'}", file=out)
        print(f"vars(conclusion) in vars(premises): {report.vars_conclusion_in_premises}", file=out)
        print(f"premises classically inconsistent: {report.premises_cpl_inconsistent}", file=out)
        print(f"vars(premises) in vars(conclusion): {report.vars_premises_in_conclusion}", file=out)
        print(f"conclusion a classical tautology: {report.conclusion_cpl_tautology}", file=out)
        for name, cm in report.countermodels.items():
            print(f"{name} countermodel: {cm.valuation}", file=out)
    return EXIT_OK


def _cmd_table(args, out, err) -> int:
    f = parse(args.formula, None)
    rows = truth_table(f, args.logic)
    if args.format == "json":
        _emit_json(
            {
                "formula": render(f),
                "logic": args.logic,
                "rows": [{"valuation": v.to_dict(), "value": str(x)} for v, x in rows],
            },
            out,
        )
    else:
        for v, x in rows:
            print(f"{v} | {x}", file=out)
    return EXIT_OK


def _cmd_check(args, out, err) -> int:
    text = sys.stdin.read() if args.proof == "-" else open(args.proof, encoding="utf-8").read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        print(f"error: proof is not valid JSON: {exc}", file=err)
        return EXIT_USAGE
    tree = ProofTree.from_dict(data)
    report = check_proof(tree, args.calculus, require_cut_free=args.cut_free_check)
    if args.format == "json":
        _emit_json(report.to_dict(), out)
    elif report.ok:
        print("ok", file=out)
    else:
        for e in report.errors:
            print(str(e), file=out)
    return EXIT_OK if report.ok else EXIT_NO


def _cmd_expand(args, out, err) -> int:
    f = parse(args.formula, None)
    g = expand_to(f, SIGNATURES[args.to])
    if args.format == "json":
        _emit_json({"formula": render(f), "expanded": render(g), "signature": args.to}, out)
    else:
        print(render(g), file=out)
    return EXIT_OK


_HANDLERS = {
    "prove": _cmd_prove,
    "valid": _cmd_valid,
    "classify": _cmd_classify,
    "table": _cmd_table,
    "check": _cmd_check,
    "expand": _cmd_expand,
}
