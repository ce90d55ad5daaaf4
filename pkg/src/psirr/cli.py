"""Command line front end: ``psirr <subcommand> [flags] [POLY]``.

Exit status 0 means the command completed, whatever the verdict. Status 1 is
an input error and 2 an internal assertion. JSON output carries
``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .criterion import REDUCIBLE, apply_criterion
from .errors import InputError, InternalAssertion, PsirrError
from .factor import DEFAULT_DEGREE_BOUND, DEFAULT_SEED
from .fields import FieldCtx
from .oracle import factor_d2
from .parser import ParsedInput, parse_poly
from .polyhedron import (
    delta_generators,
    delta_vertices,
    fmt_rational,
    initial_form,
    omega_extension,
    point_json,
)

SCHEMA = 1
_RATIONAL = re.compile(r"^\s*[+-]?\d+(/\d+)?\s*$")


class UsageError(InputError):
    code = "usage_error"


def parse_weights(text: str, n: int) -> tuple[Fraction, ...]:
    """Comma-separated exact rationals; decimals and exponents are refused."""
    parts = text.split(",")
    for p in parts:
        if not _RATIONAL.match(p):
            raise UsageError(f"weight {p.strip()!r} is not an exact rational like 3 or 5/2")
    w = tuple(Fraction(p.strip()) for p in parts)
    if len(w) != n:
        raise UsageError(f"expected {n} weights, got {len(w)}")
    if any(v <= 0 for v in w):
        raise UsageError("weights must be strictly positive")
    return w


def field_from_args(args) -> FieldCtx:
    if args.field == "q":
        if args.p is not None:
            raise UsageError("--p only makes sense with --field fp")
        return FieldCtx.rationals()
    if args.p is None:
        raise UsageError("--field fp needs --p")
    try:
        return FieldCtx.prime(args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def read_input(args) -> ParsedInput:
    text = args.poly
    if text is None or text == "-":
        text = sys.stdin.read()
    if not text.strip():
        raise UsageError("no polynomial given")
    names = args.vars.split(",") if args.vars else None
    return parse_poly(text, field_from_args(args), names, args.order)


def _cmd_parse(args, inp):
    P = inp.poly
    out = {
        "field": inp.ctx.to_json(),
        "vars": list(inp.names),
        "n": P.n,
        "d": P.d,
        "order": inp.order,
        "terms": sum(1 for _ in P.terms()),
        "poly": P.to_string(),
    }
    return out, [P.to_string()]


def _cmd_polyhedron(args, inp):
    delta = delta_vertices(delta_generators(inp.poly))
    out = delta.to_json()
    out["orthant"] = delta.is_orthant()
    lines = [
        "generators: " + " ".join(_pt(g) for g in delta.generators),
        "vertices:   " + " ".join(_pt(v) for v in delta.vertices),
    ]
    for v in delta.vertices:
        lines.append(f"  {_pt(v)} minimizes weight {_pt(delta.witnesses[v])}")
    return out, lines


def _pt(p):
    return "(" + ",".join(str(v) for v in point_json(p)) + ")"


def _cmd_initial_form(args, inp):
    if args.weights is None:
        raise UsageError("initial-form needs --weights w1,...,wn")
    P = inp.poly.truncate(inp.order)
    w = omega_extension(P, parse_weights(args.weights, P.n))
    form = initial_form(P, w)
    out = {"weights": point_json(w.omega), "omega_extension": fmt_rational(w.last), "initial_form": form.to_string()}
    return out, [form.to_string(), f"omega_{P.n + 1} = {fmt_rational(w.last)}"]


def _verdict_lines(v, names):
    lines = [f"verdict: {v.kind}"]
    if v.orthant is not None:
        o = v.orthant
        lines.append(f"d*gamma = {_pt(o.d_gamma)}  q = {o.q}  beta = {list(o.beta)}")
        if o.u is not None:
            lines.append(f"u = {list(o.u)}  m = {o.m}")
    if v.q_poly is not None:
        lines.append(f"Q(T) = {v.q_poly.to_string('T')}")
    for key, val in v.reason.items():
        if key == "Q":
            continue
        lines.append(f"{key}: {val}")
    if v.certificate is not None:
        c = v.certificate
        lines.append(f"F1 = {c.F1.to_string(names)}")
        lines.append(f"F2 = {c.F2.to_string(names)}")
        lines.append(f"verified to order {c.order}")
    return lines


def _criterion(args, inp):
    return apply_criterion(inp.poly, inp.order, args.degree_bound, args.seed, check=args.check)


def _cmd_criterion(args, inp):
    v = _criterion(args, inp)
    return v.to_json(inp.names), _verdict_lines(v, inp.names)


def _cmd_factor(args, inp):
    v = _criterion(args, inp)
    if v.kind != REDUCIBLE:
        return {"factored": False, "verdict": v.to_json(inp.names)}, _verdict_lines(v, inp.names)
    cert = v.certificate
    out = {"factored": True, "certificate": cert.to_json(inp.names)}
    return out, [f"F1 = {cert.F1.to_string()}", f"F2 = {cert.F2.to_string()}", f"verified to order {cert.order}"]


def _same_pair(A, B):
    return A == B or A[::-1] == B


def _cmd_verify(args, inp):
    """Run the criterion and the degree-2 oracle and compare."""
    P = inp.poly
    if P.d != 2:
        raise UsageError("verify handles d = 2 only")
    v = _criterion(args, inp)
    oracle = factor_d2(P, inp.order)
    split = isinstance(oracle, tuple)
    agree = True
    notes = []
    if v.kind == REDUCIBLE:
        cert = v.certificate
        if not split:
            agree = False
            notes.append("criterion certified a split the oracle cannot find")
        else:
            k = cert.order
            if not _same_pair((cert.F1, cert.F2), tuple(F.truncate(k) for F in oracle)):
                agree = False
                notes.append(f"certified factors differ from the oracle's modulo (x)^{k}")
    out = {
        "criterion": v.kind,
        "oracle": "split" if split else "no_split",
        "agree": agree,
        "notes": notes,
    }
    if not split:
        out["obstruction"] = {"degree": oracle.obstruction_degree, "detail": oracle.obstruction}
    lines = [f"criterion: {v.kind}", f"oracle: {out['oracle']}"]
    if not split:
        lines.append(f"obstruction: {oracle.obstruction}")
    lines.append("agree" if agree else "DISAGREE: " + "; ".join(notes))
    if not agree:
        raise _Disagreement(out, lines)
    return out, lines


class _Disagreement(InternalAssertion):
    code = "oracle_disagreement"

    def __init__(self, out, lines):
        super().__init__("; ".join(out["notes"]))
        self.out = out
        self.lines = lines


COMMANDS = {
    "parse": (_cmd_parse, "parse and print in canonical form"),
    "polyhedron": (_cmd_polyhedron, "generators and vertices of the associated polyhedron"),
    "initial-form": (_cmd_initial_form, "weighted initial form for --weights"),
    "criterion": (_cmd_criterion, "apply the reducibility test"),
    "factor": (_cmd_factor, "certified factorization when the test fires"),
    "verify": (_cmd_verify, "cross-check a degree-2 input against the discriminant oracle"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("poly", nargs="?", help="polynomial in Z and the x variables; '-' or absent reads stdin")
    common.add_argument("--field", choices=["q", "fp"], default="q")
    common.add_argument("--p", type=int, help="prime for --field fp")
    common.add_argument("--order", type=int, help="truncation / certificate order (default max(16, d+1))")
    common.add_argument("--weights", help="initial-form weights, e.g. 5,3 or 1/2,1")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for finite-field splitting")
    common.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND,
                        help="largest square-free degree factored over Q")
    common.add_argument("--vars", help="comma-separated variable names, e.g. x,y")
    common.add_argument("--check", action="store_true", help="assert the Hensel invariant at every stage")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    common.set_defaults(fmt="json")

    ap = argparse.ArgumentParser(prog="psirr", description="Reducibility of monic polynomials over power series.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_)
    return ap


def _emit(args, out, lines, stream=None):
    stream = stream or sys.stdout
    if args.fmt == "json":
        stream.write(json.dumps({"schema": SCHEMA, "command": args.command, **out}, indent=2) + "\n")
    else:
        stream.write("\n".join(lines) + "\n")


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inp = read_input(args)
        out, lines = COMMANDS[args.command][0](args, inp)
    except _Disagreement as exc:
        _emit(args, exc.out, exc.lines)
        return 2
    except PsirrError as exc:
        status = 2 if isinstance(exc, InternalAssertion) else 1
        if args.fmt == "json":
            err = {"error": exc.code, "message": str(exc)}
            if hasattr(exc, "line"):
                err.update(line=exc.line, column=exc.column)
            _emit(args, err, [])
        print(f"psirr: {exc.code}: {exc}", file=sys.stderr)
        return status
    _emit(args, out, lines)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
