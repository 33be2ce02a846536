"""Command-line front end.

Subcommands: table, series, expand, derive, integrate, ffft. Every command
builds an :class:`OutputRecord` and renders it as text, CSV or JSON.

Function specs (``-f``) follow a small grammar::

    spec := "exp" ALPHA | "affine" A B | "log" ALPHA | "recip" | "expseries"
          | "cosk" ALPHA K | "sink" ALPHA K | "values" V0,V1,...
          | "compose" spec ";" spec          (outer ; inner)

Exit codes: 0 success, 2 usage or parse error, 3 domain or math error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

from . import calculus, integration, interp, special, transform
from .errors import GFAnalysisError
from .field import MINUS_INF, FieldElement, MinusInfinity, PrimeModulus, balanced
from .gaussian import GaussianElement
from .interp import FullField, IndexRing, TabulatedFunction
from .poly import Polynomial, Ring

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3

OUTPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "p", "params", "payload", "notes"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "p": {"type": "integer", "minimum": 3},
        "params": {"type": "object"},
        "payload": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "values", "minus_inf"],
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string"},
                    "values": {
                        "type": "array",
                        "items": {
                            "anyOf": [
                                {"type": "integer"},
                                {"type": "null"},
                                {
                                    "type": "object",
                                    "required": ["re", "im"],
                                    "additionalProperties": False,
                                    "properties": {
                                        "re": {"type": "integer"},
                                        "im": {"type": "integer"},
                                    },
                                },
                            ]
                        },
                    },
                    "minus_inf": {"type": "array", "items": {"type": "integer"}},
                },
            },
        },
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}


class SpecError(Exception):
    """Malformed command-line input; maps to exit code 2."""


class ArgumentError(Exception):
    """A domain/math failure attributed to one argument; exit code 3."""


@contextmanager
def blame(arg: str):
    try:
        yield
    except SpecError as exc:
        raise SpecError(f"{arg}: {exc}") from exc
    except GFAnalysisError as exc:
        raise ArgumentError(f"{arg}: {exc}") from exc


@dataclass
class OutputRecord:
    command: str
    p: int
    params: dict
    rows: list  # [(label, [cells])]
    columns: list = field(default_factory=list)
    notes: list = field(default_factory=list)


# -- rendering -----------------------------------------------------------------

def _render_cell(v, use_balanced: bool) -> str:
    if isinstance(v, MinusInfinity):
        return "-inf"
    if isinstance(v, GaussianElement):
        re = balanced(v.re) if use_balanced else v.re.value
        im = balanced(v.im) if use_balanced else v.im.value
        if im == 0:
            return str(re)
        if re == 0:
            return f"j{im}"
        return f"{re}+j{im}" if im > 0 else f"{re}-j{-im}"
    if isinstance(v, FieldElement):
        return str(balanced(v) if use_balanced else v.value)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _json_cell(v, use_balanced: bool):
    if isinstance(v, MinusInfinity):
        return None
    if isinstance(v, GaussianElement):
        conv = balanced if use_balanced else (lambda e: e.value)
        return {"re": conv(v.re), "im": conv(v.im)}
    if isinstance(v, FieldElement):
        return balanced(v) if use_balanced else v.value
    if isinstance(v, bool):
        return int(v)
    return v


def render(record: OutputRecord, fmt: str, use_balanced: bool = False) -> str:
    if fmt == "json":
        payload = []
        for label, cells in record.rows:
            payload.append({
                "label": label,
                "values": [_json_cell(c, use_balanced) for c in cells],
                "minus_inf": [i for i, c in enumerate(cells) if isinstance(c, MinusInfinity)],
            })
        params = dict(record.params)
        if record.columns:
            params["columns"] = list(record.columns)
        obj = {"command": record.command, "p": record.p, "params": params,
               "payload": payload, "notes": list(record.notes)}
        return json.dumps(obj, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        width = max((len(c) for _, c in record.rows), default=0)
        columns = list(record.columns) or list(range(width))
        writer.writerow(["label"] + columns)
        for label, cells in record.rows:
            writer.writerow([label] + [_render_cell(c, use_balanced) for c in cells])
        return buf.getvalue()
    lines = []
    head = " ".join(f"{k}={v}" for k, v in record.params.items())
    lines.append(f"# {record.command} p={record.p}" + (f" {head}" if head else ""))
    for label, cells in record.rows:
        lines.append(f"{label}: " + " ".join(_render_cell(c, use_balanced) for c in cells))
    for note in record.notes:
        lines.append(f"# note: {note}")
    return "\n".join(lines) + "\n"


# -- parsing helpers -----------------------------------------------------------

def parse_int_list(text: str, allow_inf: bool = False) -> list:
    if text is None or not text.strip():
        raise SpecError("empty value list")
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if allow_inf and tok == "-inf":
            out.append(MINUS_INF)
            continue
        try:
            out.append(int(tok))
        except ValueError:
            raise SpecError(f"not an integer: {tok!r}") from None
    return out


def tokenize(spec: str) -> list[str]:
    return spec.replace(";", " ; ").split()


class SpecParser:
    """Recursive-descent parser; each node is (name, args...)."""

    ARITY = {"exp": 1, "affine": 2, "log": 1, "recip": 0, "expseries": 0,
             "cosk": 2, "sink": 2}

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def parse(self):
        node = self._spec()
        if self.pos != len(self.tokens):
            raise SpecError(f"unexpected token {self.tokens[self.pos]!r}")
        return node

    def _next(self, what: str) -> str:
        if self.pos >= len(self.tokens):
            raise SpecError(f"expected {what}, got end of spec")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _int(self) -> int:
        tok = self._next("an integer")
        try:
            return int(tok)
        except ValueError:
            raise SpecError(f"expected an integer, got {tok!r}") from None

    def _spec(self):
        name = self._next("a function name")
        if name == "compose":
            outer = self._spec()
            if self._next("';'") != ";":
                raise SpecError("compose needs 'outer ; inner'")
            inner = self._spec()
            return ("compose", outer, inner)
        if name == "values":
            return ("values", parse_int_list(self._next("a value list"), allow_inf=True))
        if name not in self.ARITY:
            raise SpecError(f"unknown function {name!r}")
        return (name,) + tuple(self._int() for _ in range(self.ARITY[name]))


def parse_spec(text: str):
    return SpecParser(text).parse()


def parse_domain(text: Optional[str], F: PrimeModulus):
    if text is None:
        return None
    if text == "full":
        return FullField(F)
    try:
        n = int(text)
    except ValueError:
        raise SpecError(f"expected 'full' or a positive size, got {text!r}") from None
    if n < 1:
        raise SpecError("domain size must be positive")
    return IndexRing(n)


def build_function(node, F: PrimeModulus, domain=None, notes=None) -> TabulatedFunction:
    """Evaluate a parsed spec to a table on ``domain`` (or its natural domain)."""
    notes = notes if notes is not None else []
    name = node[0]
    if name == "values":
        vals = node[1]
        dom = domain or (FullField(F) if len(vals) == F.p else IndexRing(len(vals)))
        return TabulatedFunction(dom, vals, F)
    if name == "compose":
        inner = build_function(node[2], F, domain, notes)
        outer = build_function(node[1], F, None, notes)
        return interp.compose(outer, inner)
    if name in ("cosk", "sink"):
        table = special.k_trig(F(node[1]), node[2])
        if table.degenerate:
            notes.append(f"degenerate mode: p = 1 (mod 4), j taken as a root of -1 in GF({F.p})")
        f = table.cos_table() if name == "cosk" else table.sin_table()
        if domain is not None and domain != f.domain:
            raise interp.DomainMismatch(f"{name} lives on {f.domain}")
        return f
    dom = domain or FullField(F)
    if name == "exp":
        alpha = F(node[1])
        return TabulatedFunction(dom, [alpha ** i for i in range(dom.size)], F)
    if name == "affine":
        return TabulatedFunction(dom, [F(x) * node[1] + node[2] for x in range(dom.size)], F)
    if name == "expseries":
        s = special.exp_series(F)
        return TabulatedFunction(dom, [s(F(x)) for x in range(dom.size)], F)
    if dom.kind != "full":
        raise interp.DomainMismatch(f"{name} is only defined on the full field")
    if name == "log":
        return special.log_table(F(node[1]))
    if name == "recip":
        return special.reciprocal_table(F)
    raise SpecError(f"unknown function {name!r}")


def _function_from_args(args, F, notes) -> tuple[TabulatedFunction, str]:
    with blame("--domain"):
        domain = parse_domain(getattr(args, "domain", None), F)
    if getattr(args, "function", None) is not None and getattr(args, "values", None) is not None:
        raise SpecError("give either -f/--function or --values, not both")
    if getattr(args, "function", None) is not None:
        with blame("-f/--function"):
            node = parse_spec(args.function)
            return build_function(node, F, domain, notes), args.function
    if getattr(args, "values", None) is not None:
        with blame("--values"):
            node = ("values", parse_int_list(args.values, allow_inf=True))
            return build_function(node, F, domain, notes), f"values {args.values}"
    raise SpecError("one of -f/--function or --values is required")


def _prime(args) -> PrimeModulus:
    with blame("-p/--prime"):
        return PrimeModulus(args.prime)


def _trimmed(coeffs) -> list:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return coeffs


# -- commands ------------------------------------------------------------------

def cmd_table(args) -> OutputRecord:
    F = _prime(args)
    notes: list = []
    f, desc = _function_from_args(args, F, notes)
    return OutputRecord("table", F.p, {"function": desc, "domain": str(f.domain)},
                        [("f", list(f.values))], list(range(len(f))), notes)


def cmd_series(args) -> OutputRecord:
    F = _prime(args)
    notes: list = []
    f, desc = _function_from_args(args, F, notes)
    with blame("-f/--function" if args.function is not None else "--values"):
        lag = interp.interpolate(f)
        van = interp.vandermonde_solve(f)
    agree = lag == van
    notes.append("lagrange and vandermonde agree" if agree
                 else "lagrange and vandermonde DISAGREE")
    coeffs = _trimmed(lag.coeffs)
    return OutputRecord("series", F.p, {"function": desc, "domain": str(f.domain)},
                        [("a", coeffs)], list(range(len(coeffs))), notes)


def _coeffs_arg(args, F, ring=Ring.PLAIN) -> Polynomial:
    with blame("-c/--coeffs"):
        if args.coeffs is None:
            raise SpecError("-c/--coeffs is required")
        return Polynomial(parse_int_list(args.coeffs), F, ring)


def cmd_expand(args) -> OutputRecord:
    F = _prime(args)
    a = _coeffs_arg(args, F)
    with blame("-b/--beta"):
        e = calculus.taylor_expand(a, F(args.beta))
    back = calculus.adic_reconstruct(e)
    notes = [] if back == a else ["reconstruction DISAGREES with input"]
    return OutputRecord("expand", F.p, {"coeffs": args.coeffs, "beta": e.beta.value},
                        [("b", list(e.coeffs))], list(range(len(e.coeffs))), notes)


def cmd_derive(args) -> OutputRecord:
    F = _prime(args)
    ring = Ring(args.ring)
    a = _coeffs_arg(args, F, ring)
    kind = "negacyclic" if ring is Ring.NEGACYCLIC else args.kind
    if ring is Ring.NEGACYCLIC and args.kind == "classical":
        raise SpecError("--kind classical is not available with --ring negacyclic")
    with blame("-r/--order"):
        if args.order < 0:
            raise SpecError("order must be non-negative")
        d = calculus.derivative(a, args.order, kind)
    notes = []
    if ring is Ring.NEGACYCLIC and args.order > 1:
        notes.append("negacyclic derivative of order r applied as r first-order steps")
    return OutputRecord("derive", F.p,
                        {"coeffs": args.coeffs, "ring": ring.value, "kind": kind,
                         "order": args.order},
                        [("d", list(d.coeffs))], list(range(len(d))), notes)


def cmd_integrate(args) -> OutputRecord:
    F = _prime(args)
    if args.powersum_table:
        with blame("-N"):
            table = integration.power_sum_table(F, args.N)
        rows = [(f"S{n}", list(row)) for n, row in enumerate(table.rows)]
        return OutputRecord("integrate", F.p, {"powersum_table": True},
                            rows, list(range(F.p)), [])
    notes: list = []
    params: dict = {}
    if args.coeffs is not None:
        a = _coeffs_arg(args, F)
        with blame("-c/--coeffs"):
            f = interp.tabulate(a, FullField(F))
        params["coeffs"] = args.coeffs
    else:
        f, desc = _function_from_args(args, F, notes)
        params["function"] = desc
    rows = []
    with blame("-f/--function"):
        a = interp.interpolate(f)
        total = integration.definite_integral(f)
        shortcut = integration.integral_via_coefficient(a)
    rows.append(("integral", [total]))
    rows.append(("via_coefficient", [shortcut]))
    if args.N is not None:
        with blame("-N"):
            rows.append(("partial", [integration.partial_integral(f, args.N)]))
        params["N"] = args.N
    if args.with_function is not None:
        with blame("-g/--with"):
            g = build_function(parse_spec(args.with_function), F, FullField(F), notes)
            rep = integration.inner_product_report(f, g)
        params["with"] = args.with_function
        rows += [("inner_direct", [rep.direct]),
                 ("inner_coefficient", [rep.coefficient_route]),
                 ("inner_printed_formula", [rep.printed_formula]),
                 ("inner_aliasing_term", [rep.aliasing_term])]
        if not rep.printed_formula_agrees:
            notes.append("printed formula misses the (p-1, p-1) aliasing pair here")
    check = integration.invertibility_necessary_check(f)
    notes.append(f"top coefficient a_{F.p - 1} = {check.top_coeff.value}; "
                 f"bijection: {'yes' if check.is_bijection else 'no'}")
    return OutputRecord("integrate", F.p, params, rows, [], notes)


def cmd_ffft(args) -> OutputRecord:
    F = _prime(args)
    with blame("-a/--alpha"):
        if args.alpha is None:
            raise SpecError("-a/--alpha is required")
        alpha = F(args.alpha)
        n = transform.element_order(alpha)
    notes: list = []
    if args.bridge:
        f, desc = _function_from_args(args, F, notes)
        with blame("-a/--alpha"):
            rep = transform.prop4_bridge(f, alpha)
        notes.append(f"f(0) = {rep.f_at_zero.value} is outside the transform")
        if rep.exact:
            notes.append("exact recovery (top coefficient is 0)")
        else:
            notes.append(f"index 0 recovers a_0 + a_{F.p - 1} = {rep.aliased_constant.value}")
        rows = [("a", list(rep.coefficients)), ("P", list(rep.permuted_values)),
                ("recovered", list(rep.recovered))]
        return OutputRecord("ffft", F.p, {"alpha": alpha.value, "bridge": desc},
                            rows, list(range(F.p)), notes)
    if args.inverse:
        with blame("--values"):
            if args.values is None:
                raise SpecError("--inverse needs --values")
            vals = parse_int_list(args.values)
            out = transform.inverse_ffft(transform.SpectrumVector(alpha, tuple(F(v) for v in vals)))
        return OutputRecord("ffft", F.p, {"alpha": alpha.value, "direction": "inverse",
                                          "values": args.values},
                            [("a", list(out))], list(range(n)), notes)
    a = _coeffs_arg(args, F)
    with blame("-c/--coeffs"):
        spec = transform.ffft(a.coeffs, alpha)
    return OutputRecord("ffft", F.p, {"alpha": alpha.value, "direction": "forward",
                                      "coeffs": args.coeffs},
                        [("A", list(spec.values))], list(range(n)), notes)


# -- argument parser -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", "--prime", type=int, required=True, help="odd prime modulus")
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")
    common.add_argument("--balanced", action="store_true",
                        help="render residues in {0, +-1, ..., +-(p-1)/2}")

    fn = argparse.ArgumentParser(add_help=False)
    fn.add_argument("-f", "--function", help="function spec, e.g. 'exp 2'")
    fn.add_argument("--values", help="comma-separated table values")
    fn.add_argument("--domain", help="'full' or an index-ring size N")

    parser = _Parser(prog="gfanalysis", description="Analysis over GF(p).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", parents=[common, fn], help="tabulate a function")
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("series", parents=[common, fn], help="MacLaurin coefficients")
    p.set_defaults(run=cmd_series)

    p = sub.add_parser("expand", parents=[common], help="beta-adic expansion")
    p.add_argument("-c", "--coeffs")
    p.add_argument("-b", "--beta", type=int, required=True)
    p.set_defaults(run=cmd_expand)

    p = sub.add_parser("derive", parents=[common], help="derivatives")
    p.add_argument("-c", "--coeffs")
    p.add_argument("--ring", choices=[r.value for r in Ring], default="plain")
    p.add_argument("--kind", choices=["hasse", "classical"], default="hasse")
    p.add_argument("-r", "--order", type=int, default=1)
    p.set_defaults(run=cmd_derive)

    p = sub.add_parser("integrate", parents=[common, fn], help="sums over GF(p)")
    p.add_argument("-c", "--coeffs")
    p.add_argument("-N", type=int, help="upper limit of a partial integral")
    p.add_argument("-g", "--with", dest="with_function", help="second function for <f, g>")
    p.add_argument("--powersum-table", action="store_true")
    p.set_defaults(run=cmd_integrate)

    p = sub.add_parser("ffft", parents=[common, fn], help="finite field Fourier transform")
    p.add_argument("-a", "--alpha", type=int)
    p.add_argument("-c", "--coeffs")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--bridge", action="store_true",
                   help="recover MacLaurin coefficients from log-reordered values")
    p.set_defaults(run=cmd_ffft)
    return parser


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        record = args.run(args)
    except SpecError as exc:
        print(f"gfanalysis {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ArgumentError, GFAnalysisError) as exc:
        print(f"gfanalysis {args.command}: error: {exc}", file=stderr)
        return EXIT_DOMAIN
    stdout.write(render(record, args.format, args.balanced))
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
