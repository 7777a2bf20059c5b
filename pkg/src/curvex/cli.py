"""``curvex`` command-line front end.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 usage error (bad flags, unparsable or inhomogeneous forms), 2 domain
error (for example a form that is not square-free), 3 internal failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath

from .binform import BinaryForm, DomainError, discriminant, hessian, resultant, transvectant
from .classical import inv_J, inv_M, quartic_invariants, quintic_invariants, sextic_invariants
from .conjecture import SUITES, EvidenceReport, run_suite
from .equiv import (
    DEFAULT_DIGITS,
    EquivalenceVerdict,
    Indeterminate,
    equivalent_quartics,
    equivalent_quintics,
    germ_equiv_family_st,
    germ_equiv_family_t,
    parse_scalar,
)
from .milnor import annihilator_check, associated_form, milnor_build

__all__ = ["FormExpression", "FormSyntaxError", "parse_form", "parse_params", "main"]

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 1, 2, 3


class FormSyntaxError(ValueError):
    """Unparsable, inhomogeneous, or unbound input; reported as a usage error."""


@dataclass(frozen=True)
class FormExpression:
    source: str
    form: BinaryForm
    params: Dict[str, Fraction]


# -- form grammar -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormSyntaxError(f"unexpected character {text[pos]!r} at position {pos}")
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, params: Dict[str, Fraction]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.params = params

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise FormSyntaxError(f"expected {want} at position {tok[2]}, found {got!r}")
        self.i += 1
        return tok

    def nat(self) -> int:
        return int(self.take("int")[1])

    def coeff(self) -> Fraction:
        num = self.nat()
        if self.peek()[:2] == ("op", "/"):
            self.take()
            den_tok = self.peek()
            den = self.nat()
            if den == 0:
                raise FormSyntaxError(f"zero denominator at position {den_tok[2]}")
            return Fraction(num, den)
        return Fraction(num)

    def factor(self, acc):
        kind, name, pos = self.take("name")
        k = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            k = self.nat()
        if name == "z":
            acc[1] += k
        elif name == "w":
            acc[2] += k
        elif name in self.params:
            acc[0] *= self.params[name] ** k
        else:
            raise FormSyntaxError(f"unbound parameter {name!r} at position {pos}; bind it with --param {name}=VALUE")

    def term(self, sign: int):
        acc = [Fraction(sign), 0, 0]
        start = self.peek()[2]
        if self.peek()[0] == "int":
            acc[0] *= self.coeff()
            if self.peek()[:2] == ("op", "*"):
                self.take()
                self.factor(acc)
        elif self.peek()[0] == "name":
            self.factor(acc)
        else:
            self.take("name")  # raises with a position
        while self.peek()[:2] == ("op", "*"):
            self.take()
            self.factor(acc)
        return acc, start

    def form(self):
        terms = []
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            terms.append(self.term(sign))
        self.take("end")
        return terms


def parse_form(text: str, params: Optional[Dict[str, Fraction]] = None) -> FormExpression:
    """Parse ``"z^5 + s*z^4*w + w^5"`` into an exact binary form."""
    params = dict(params or {})
    for bad in ("z", "w"):
        if bad in params:
            raise FormSyntaxError(f"{bad!r} is a form variable, not a parameter")
    terms = _Parser(text, params).form()
    degrees = sorted({ez + ew for (_, ez, ew), _ in terms})
    if len(degrees) != 1:
        offender = next(pos for (_, ez, ew), pos in terms if ez + ew != degrees[0])
        raise FormSyntaxError(
            f"inhomogeneous form: found degrees {degrees}; "
            f"the monomial at position {offender} has a different degree from the first")
    n = degrees[0]
    coeffs = [Fraction(0)] * (n + 1)
    for (c, ez, _), _ in terms:
        coeffs[ez] += c
    form = BinaryForm(coeffs)
    if form.is_zero():
        raise FormSyntaxError("the form is identically zero")
    return FormExpression(text, form, params)


def parse_params(items: Sequence[str]) -> Dict[str, Fraction]:
    out: Dict[str, Fraction] = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
            raise FormSyntaxError(f"--param expects name=rational, got {item!r}")
        try:
            out[name] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise FormSyntaxError(f"--param {name}: {value!r} is not a rational number") from None
    return out


# -- serialization -----------------------------------------------------------------


def _q(x) -> Optional[str]:
    if x is None:
        return None
    return str(Fraction(x))


def _form_json(f: BinaryForm) -> List[str]:
    return [_q(c) for c in f.coeffs]


def _inv_json(inv) -> Optional[str]:
    return _q(inv.value) if inv.defined else None


def _num(x, digits: int = 20) -> str:
    return mpmath.nstr(x, digits)


def _verdict_json(v: EquivalenceVerdict) -> dict:
    out = {"equivalent": v.equivalent, "mode": v.mode}
    if v.mode == "exact":
        out["witness"] = {k: [_q(a), _q(b)] for k, (a, b) in v.witness.items()}
    else:
        d = v.precision
        out["witness"] = {k: [_num(a, d), _num(b, d)] for k, (a, b) in v.witness.items()}
        out["precision"] = d
        out["error_bound"] = _num(v.tolerance, 10)
        if v.gaps:
            out["gaps"] = {k: _num(g, 10) for k, g in v.gaps.items()}
    return out


def _jsonable(x):
    if isinstance(x, Fraction):
        return _q(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is None or isinstance(x, (bool, int, str)):
        return x
    return str(x)


def _report_json(r: EvidenceReport) -> dict:
    return {
        "name": r.name,
        "status": r.status,
        "samples": r.samples,
        "details": _jsonable(r.details),
        "counterexample": _jsonable(r.counterexample),
    }


# -- commands --------------------------------------------------------------------------


def _form_arg(args, text):
    return parse_form(text, parse_params(args.param)).form


def cmd_invariants(args):
    q = _form_arg(args, args.form)
    n = q.degree
    out: Dict[str, Optional[str]] = {"degree": n, "disc": _q(discriminant(q))}
    if n >= 3:
        out["J"] = _inv_json(inv_J(q))
    if n >= 4 and n % 2 == 0:
        out["M"] = _inv_json(inv_M(q))
    if n == 4:
        qi = quartic_invariants(q)
        out.update(I2=_q(qi.I2), I3=_q(qi.I3), J4=_inv_json(qi.J), K4=_inv_json(qi.K))
    elif n == 5:
        qi = quintic_invariants(q)
        out.update(I4=_q(qi.I4), I8=_q(qi.I8), I12=_q(qi.I12),
                   J=_inv_json(qi.J), K=_inv_json(qi.K), L=_inv_json(qi.L))
    elif n == 6:
        si = sextic_invariants(q)
        out.update(I2=_q(si.I2), I4=_q(si.I4), I10=_q(si.I10),
                   bold_J=_inv_json(si.J), bold_K=_inv_json(si.K), bold_L=_inv_json(si.L))
    text = "\n".join(f"{k} = {'undefined' if v is None else v}" for k, v in out.items())
    return out, text


def cmd_discriminant(args):
    d = _q(discriminant(_form_arg(args, args.form)))
    return {"disc": d}, d


def cmd_resultant(args):
    r = _q(resultant(_form_arg(args, args.form1), _form_arg(args, args.form2)))
    return {"resultant": r}, r


def cmd_transvect(args):
    if args.order < 0:
        raise FormSyntaxError("--order must be a non-negative integer")
    f = transvectant(_form_arg(args, args.form1), _form_arg(args, args.form2), args.order)
    return {"degree": f.degree, "form": _form_json(f)}, str(f)


def cmd_hessian(args):
    q = _form_arg(args, args.form)
    if q.degree < 2:
        raise DomainError("the Hessian needs degree >= 2")
    h = hessian(q)
    return {"degree": h.degree, "form": _form_json(h)}, str(h)


def _monomial(ez: int, ew: int) -> str:
    parts = [v if k == 1 else f"{v}^{k}" for v, k in (("z", ez), ("w", ew)) if k]
    return "*".join(parts) or "1"


def cmd_milnor(args):
    alg = milnor_build(_form_arg(args, args.form))
    basis = [_monomial(ez, ew) for _, (ez, ew) in alg.basis]
    out = {
        "hilbert": list(alg.hilbert),
        "dimension": alg.dimension,
        "nil_index": alg.nu,
        "basis": basis,
        "gorenstein": annihilator_check(alg),
    }
    text = (f"Hilbert function {out['hilbert']} (dimension {alg.dimension}, nil-index {alg.nu})\n"
            f"basis: {', '.join(basis)}\nannihilator check: {'pass' if out['gorenstein'] else 'FAIL'}")
    return out, text


def cmd_associated_form(args):
    f = associated_form(_form_arg(args, args.form)).form
    lead = next(c for c in reversed(f.coeffs) if c)
    if args.normalize:
        f = f * (1 / lead)
    return {"degree": f.degree, "form": _form_json(f)}, str(f.to_poly("zeta1", "zeta2"))


def cmd_equivalent(args):
    q1, q2 = _form_arg(args, args.form1), _form_arg(args, args.form2)
    if q1.degree != q2.degree:
        raise DomainError("forms of different degrees are never equivalent")
    if q1.degree == 4:
        v = equivalent_quartics(q1, q2)
    elif q1.degree == 5:
        v = equivalent_quintics(q1, q2)
    else:
        raise DomainError("equivalence is decided for degrees 4 and 5 only")
    out = _verdict_json(v)
    return out, "equivalent" if v.equivalent else "inequivalent"


def _split_top(text: str) -> List[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def cmd_family_equiv(args):
    scalar = parse_scalar
    if args.family == "t":
        if args.n is None:
            raise FormSyntaxError("--family t needs --n")
        v = germ_equiv_family_t(args.n, scalar(args.p1), scalar(args.p2), digits=args.digits)
    else:
        p1, p2 = _split_top(args.p1), _split_top(args.p2)
        if len(p1) != 2 or len(p2) != 2:
            raise FormSyntaxError("--family st expects --p1 s,t and --p2 s,t")
        v = germ_equiv_family_st(tuple(map(scalar, p1)), tuple(map(scalar, p2)), digits=args.digits)
    out = _verdict_json(v)
    text = "equivalent" if v.equivalent else "inequivalent"
    if v.mode == "numeric":
        text += f"\nprecision {v.precision} digits, error bound {out['error_bound']}"
    return out, text


def cmd_conjecture(args):
    reports = run_suite(args.suite)
    out = {"reports": [_report_json(r) for r in reports]}
    text = "\n".join(f"{r.name}: {r.status} ({r.samples} samples)" for r in reports)
    return out, text


# -- entry point ---------------------------------------------------------------------------


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--param", action="append", default=[], metavar="NAME=RATIONAL",
                        help="bind a parameter used in a form")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _ArgParser(prog="curvex", description="Invariants, Milnor algebras and equivalence of binary forms.")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_ArgParser)
    sub.required = True

    def add(name, fn, help_, *forms):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for f in forms:
            sp.add_argument(f, help="binary form, e.g. \"z^5 + 2*z^4*w + w^5\"")
        sp.set_defaults(func=fn)
        return sp

    add("invariants", cmd_invariants, "absolute and relative invariants", "form")
    add("discriminant", cmd_discriminant, "discriminant", "form")
    add("resultant", cmd_resultant, "resultant of two forms", "form1", "form2")
    tv = add("transvect", cmd_transvect, "transvectant of two forms", "form1", "form2")
    tv.add_argument("--order", type=int, required=True)
    add("hessian", cmd_hessian, "Hessian covariant", "form")
    add("milnor", cmd_milnor, "Milnor algebra of the curve germ", "form")
    af = add("associated-form", cmd_associated_form, "associated form", "form")
    af.add_argument("--normalize", action="store_true", help="scale so the zeta1 leading coefficient is 1")
    add("equivalent", cmd_equivalent, "linear equivalence of quartics or quintics", "form1", "form2")
    fe = add("family-equiv", cmd_family_equiv, "equivalence within the germ families")
    fe.add_argument("--family", choices=("t", "st"), required=True)
    fe.add_argument("--n", type=int)
    fe.add_argument("--p1", required=True)
    fe.add_argument("--p2", required=True)
    fe.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    cj = add("conjecture", cmd_conjecture, "run the evidence suites")
    cj.add_argument("--suite", default="all", choices=("all",) + tuple(SUITES))
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, text = args.func(args)
    except FormSyntaxError as exc:
        print(f"curvex: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, Indeterminate) as exc:
        print(f"curvex: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except Exception as exc:  # noqa: BLE001 - mapped to the internal-failure exit code
        print(f"curvex: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.json:
        print(json.dumps({"command": args.command, "result": out}, indent=2))
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
