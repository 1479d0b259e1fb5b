"""Command-line front end.

    abelcs homology  (INPUT | --catalog SPEC)
    abelcs zk        --k K (INPUT | --catalog SPEC)
    abelcs rt        --k K (INPUT | --catalog SPEC)
    abelcs verify    --k A..B [--tol T] (INPUT | --catalog SPEC)
    abelcs reciprocity A B C
    abelcs catalog   SPEC [--output-format plain|json]

Exit status: 0 on success, 1 on computation errors (or a failed verify),
2 on usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .cyclotomic import evaluate, is_exactly_zero
from .errors import AbelCSError, InvalidParameter
from .homology import analyze
from .invariants import (
    DEFAULT_TOLERANCE,
    partition_function,
    reciprocity_check,
    rt_invariant,
    verify_relation,
)
from .surgery import parse_catalog_spec, parse_presentation, serialize


def parse_k_range(text: str) -> list[int]:
    """``"5"`` or inclusive ``"a..b"``."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad level {text!r}; expected K or A..B") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"bad level range {text!r}; need 1 <= A <= B")
    return list(range(a, b + 1))


def _fmt_q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _fmt_complex(z) -> str:
    sign = "-" if math.copysign(1.0, z.im) < 0 else "+"
    return f"{z.re!r} {sign} {abs(z.im)!r}i"


def _torsion_text(torsion, p) -> str:
    if not torsion:
        return "trivial torsion, p = 1"
    return " + ".join(f"Z/{t}" for t in torsion) + f", p = {p}"


def _load(args):
    if args.catalog is not None:
        return parse_catalog_spec(args.catalog)
    if args.input == "-":
        data = sys.stdin.buffer.read()
        name = None
    else:
        try:
            with open(args.input, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise InvalidParameter(f"cannot read {args.input}: {exc.strerror}") from None
        name = Path(args.input).stem
    fmt = args.input_format
    if fmt == "auto":
        fmt = "json" if data.lstrip()[:1] == b"{" else "plain"
    return parse_presentation(data, fmt, name=name)


def _header(P, T) -> dict:
    return {
        "name": P.name,
        "m": P.m,
        "det": T.det_L,
        "signature": T.sigma,
        "torsion": list(T.torsion_numbers),
    }


def _zk_json(c) -> dict:
    z = evaluate(c)
    return {
        "re": z.re,
        "im": z.im,
        "exact_zero": is_exactly_zero(c),
        "phases": [
            {"num": r.numerator, "den": r.denominator, "mult": mult} for r, mult in c.phases()
        ],
    }


def cmd_homology(args):
    P = _load(args)
    T, Q = analyze(P)
    if args.format == "json":
        doc = _header(P, T)
        doc["p"] = T.p
        doc["B"] = T.B.to_rows()
        doc["linking_form"] = [[_fmt_q(x) for x in row] for row in Q.Q.to_rows()]
        return doc, 0
    lines = [
        f"name: {P.name}",
        f"components: {P.m}",
        f"det: {T.det_L}",
        f"signature: {T.sigma}",
        f"H_1: {_torsion_text(T.torsion_numbers, T.p)}",
    ]
    if T.w:
        lines.append("generators (rows of B):")
        lines.extend("  " + " ".join(map(str, row)) for row in T.B.to_rows())
        lines.append("linking form Q (mod 1):")
        lines.extend("  " + " ".join(_fmt_q(x) for x in row) for row in Q.Q.to_rows())
    return lines, 0


def cmd_zk(args):
    P = _load(args)
    T, Q = analyze(P)
    docs, lines = [], []
    for k in args.k:
        c = partition_function(Q, T.torsion_numbers, k)
        doc = _header(P, T)
        doc["k"] = k
        doc["z_k"] = _zk_json(c)
        docs.append(doc)
        zk = doc["z_k"]
        lines.append(f"k = {k}: Z_k = {_fmt_complex(evaluate(c))}"
                     + ("  (exactly zero)" if zk["exact_zero"] else ""))
        lines.append("  phases: " + ", ".join(
            f"{ph['mult']}x e(2pi i {ph['num']}/{ph['den']})" for ph in zk["phases"]
        ))
    return (docs if args.format == "json" else lines), 0


def cmd_rt(args):
    P = _load(args)
    docs, lines = [], []
    for k in args.k:
        i = rt_invariant(P, k)
        docs.append({"name": P.name, "m": P.m, "k": k, "i_k": {"re": i.re, "im": i.im}})
        lines.append(f"k = {k}: I_k = {_fmt_complex(i)}")
    return (docs if args.format == "json" else lines), 0


def cmd_verify(args):
    P = _load(args)
    reports = [verify_relation(P, k, args.tol) for k in args.k]
    status = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        return [{
            "name": r.name,
            "m": r.m,
            "det": r.det,
            "signature": r.signature,
            "torsion": list(r.torsion_numbers),
            "k": r.k,
            "z_k": _zk_json(r.z_sum),
            "i_k": {"re": r.i_k.re, "im": r.i_k.im, "exact_zero": r.i_exact_zero},
            "sqrt_p": r.sqrt_p,
            "residual": r.residual,
            "pass": r.passed,
        } for r in reports], status
    torsion = reports[0].torsion_numbers
    lines = [f"H_1: {_torsion_text(torsion, math.prod(torsion))}"]
    for r in reports:
        lines.append(
            f"k = {r.k}: {'PASS' if r.passed else 'FAIL'}  Z_k = {_fmt_complex(r.z_k)}"
            f"  I_k = {_fmt_complex(r.i_k)}  sqrt(p) = {r.sqrt_p!r}  residual = {r.residual:.3e}"
        )
    return lines, status


def cmd_reciprocity(args):
    res = reciprocity_check(args.a, args.b, args.c)
    if args.format == "json":
        return {
            "a": args.a, "b": args.b, "c": args.c,
            "lhs": {"re": res.lhs.re, "im": res.lhs.im},
            "rhs": {"re": res.rhs.re, "im": res.rhs.im},
            "agree": res.agree,
        }, (0 if res.agree else 1)
    return [
        f"lhs = {_fmt_complex(res.lhs)}",
        f"rhs = {_fmt_complex(res.rhs)}",
        "agree" if res.agree else "DISAGREE",
    ], (0 if res.agree else 1)


def cmd_catalog(args):
    P = parse_catalog_spec(args.spec)
    return [serialize(P, args.output_format).rstrip("\n")], 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelcs",
        description="Abelian Chern-Simons and RT invariants from surgery presentations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("input", nargs="?", help="presentation file, or '-' for stdin")
        src.add_argument("--catalog", metavar="SPEC",
                         help="catalog presentation: sphere, m26, lens:P, or A+B for a block sum")
        p.add_argument("--input-format", choices=("auto", "plain", "json"), default="auto")

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("homology", help="torsion homology and linking form")
    add_input(p)
    add_format(p)
    p.set_defaults(func=cmd_homology)

    for name, func, helptext in (
        ("zk", cmd_zk, "exact partition function Z_k"),
        ("rt", cmd_rt, "Reshetikhin-Turaev invariant I_k by brute force"),
        ("verify", cmd_verify, "check Z_k = sqrt(p) I_k"),
    ):
        p = sub.add_parser(name, help=helptext)
        add_input(p)
        add_format(p)
        p.add_argument("--k", type=parse_k_range, required=True, metavar="K|A..B")
        if name == "verify":
            p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
        p.set_defaults(func=func)

    p = sub.add_parser("reciprocity", help="both sides of the Gauss-sum reciprocity formula")
    for v in ("a", "b", "c"):
        p.add_argument(v, type=int)
    add_format(p)
    p.set_defaults(func=cmd_reciprocity)

    p = sub.add_parser("catalog", help="print a catalog presentation")
    p.add_argument("spec")
    p.add_argument("--output-format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        payload, status = args.func(args)
    except AbelCSError as exc:
        err.write(f"abelcs: error[{exc.code}]: {exc}\n")
        return exc.exit_status
    if getattr(args, "format", "text") == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n".join(payload) + "\n")
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
