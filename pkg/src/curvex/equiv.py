"""Equivalence decisions for quartics, quintics and the two germ families.

Rational inputs are decided exactly. Irrational or complex parameters go
through interval arithmetic (mpmath ``iv``) in a context created per call;
two bounded values count as equal when their enclosures overlap, and the
verdict records the working precision and the widest enclosure so a caller
can escalate.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

import mpmath
from mpmath.ctx_iv import MPIntervalContext, ivmpc
from mpmath.libmp import mpf_add, mpf_shift, mpf_sub

from .binform import BinaryForm, DomainError, discriminant
from .classical import family_closed_forms, quartic_invariants, quintic_invariants
from .families import f_t

__all__ = [
    "EquivalenceVerdict",
    "NumericValue",
    "Indeterminate",
    "equivalent_quartics",
    "equivalent_quintics",
    "germ_equiv_family_t",
    "germ_equiv_family_st",
    "numeric_eval",
    "parse_scalar",
    "DEFAULT_DIGITS",
]

DEFAULT_DIGITS = 50


class Indeterminate(ArithmeticError):
    """A denominator enclosure contains zero at the working precision."""


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    mode: str
    witness: Dict[str, Tuple[object, object]]
    precision: Optional[int] = None
    tolerance: Optional[object] = None
    gaps: Dict[str, object] = field(default_factory=dict)

    def __bool__(self):
        return self.equivalent


@dataclass(frozen=True)
class NumericValue:
    """Midpoint of an enclosure plus its radius (an absolute error bound)."""

    value: object
    error_bound: object
    digits: int
    interval: object = field(repr=False, default=None)

    @property
    def relative_bound(self):
        """``error_bound / max(|value|, 1)``."""
        return self.error_bound / max(abs(self.value), 1)


# -- exact decisions -------------------------------------------------------------


def _require_square_free(q: BinaryForm, degree: int):
    if q.degree != degree:
        raise DomainError(f"expected a form of degree {degree}, got {q.degree}")
    if q.is_symbolic():
        raise DomainError("equivalence decisions need rational coefficients")
    if q.is_zero() or discriminant(q) == 0:
        raise DomainError(f"{q} is not square-free")


def equivalent_quartics(q1: BinaryForm, q2: BinaryForm) -> EquivalenceVerdict:
    """Square-free quartics are equivalent iff their 𝖩 values agree."""
    _require_square_free(q1, 4)
    _require_square_free(q2, 4)
    j1, j2 = quartic_invariants(q1).J, quartic_invariants(q2).J
    return EquivalenceVerdict(j1.same_as(j2), "exact", {"J": (j1.value, j2.value)})


def equivalent_quintics(q1: BinaryForm, q2: BinaryForm) -> EquivalenceVerdict:
    """Square-free quintics are equivalent iff J, K and L all agree."""
    _require_square_free(q1, 5)
    _require_square_free(q2, 5)
    a, b = quintic_invariants(q1), quintic_invariants(q2)
    witness = {}
    same = True
    for name in ("J", "K", "L"):
        x, y = getattr(a, name), getattr(b, name)
        witness[name] = (x.value, y.value)
        same = same and x.same_as(y)
    return EquivalenceVerdict(same, "exact", witness)


# -- scalars: exact when possible, enclosures otherwise --------------------------


class _NotRational(Exception):
    pass


_BINOPS = {ast.Add: "+", ast.Sub: "-", ast.Mult: "*", ast.Div: "/", ast.Pow: "**"}


def _eval_node(node, ctx, exact: bool):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body, ctx, exact)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        # decimal literals are read from their text, never through binary floats
        value = Fraction(str(node.value))
        return value if exact else ctx.mpf(value.numerator) / value.denominator
    if isinstance(node, ast.Name):
        if exact:
            raise _NotRational(node.id)
        if node.id in ("i", "I"):
            return ctx.mpc(0, 1)
        if node.id == "pi":
            return ctx.pi
        raise DomainError(f"unknown name {node.id!r} in numeric expression")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, ctx, exact)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left = _eval_node(node.left, ctx, exact)
        right = _eval_node(node.right, ctx, exact)
        op = _BINOPS[type(node.op)]
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return left * right
        if op == "/":
            if exact and right == 0:
                raise DomainError("division by zero in numeric expression")
            return left / right
        if exact:
            if right.denominator != 1:
                raise _NotRational("fractional power")
            if left == 0 and right < 0:
                raise DomainError("zero to a negative power")
            return left ** int(right)
        return left ** right
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and len(node.args) == 1:
        if exact:
            raise _NotRational(node.func.id)
        fn = {"sqrt": ctx.sqrt, "exp": ctx.exp}.get(node.func.id)
        if fn is None:
            raise DomainError(f"unknown function {node.func.id!r}")
        return fn(_eval_node(node.args[0], ctx, exact))
    raise DomainError(f"unsupported syntax in numeric expression: {ast.dump(node)[:60]}")


def _parse(text: str):
    try:
        return ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise DomainError(f"cannot parse scalar {text!r}: {exc.msg} at column {exc.offset}") from None


def parse_scalar(text: str):
    """Read a scalar expression; returns a Fraction when it is rational.

    Otherwise returns the expression text unchanged, to be enclosed later at
    whatever precision the caller chooses.
    """
    tree = _parse(text)
    try:
        return _eval_node(tree, None, exact=True)
    except _NotRational:
        return text


def _make_ctx(digits: int) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.dps = digits
    return ctx


def _enclose(ctx, x):
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return ctx.mpf(x.numerator) / x.denominator
    if isinstance(x, str):
        return _eval_node(_parse(x), ctx, exact=False)
    if isinstance(x, complex):
        return ctx.mpc(_enclose(ctx, Fraction(x.real)), _enclose(ctx, Fraction(x.imag)))
    if isinstance(x, float):
        return _enclose(ctx, Fraction(x))
    if isinstance(x, mpmath.mpc):
        return ctx.mpc(ctx.mpf(x.real), ctx.mpf(x.imag))
    if isinstance(x, mpmath.mpf):
        return ctx.mpf(x)
    # already an enclosure
    return x


def _is_exact(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return True
    return isinstance(x, str) and isinstance(parse_scalar(x), Fraction)


def _exact(x) -> Fraction:
    return Fraction(x) if not isinstance(x, str) else parse_scalar(x)


def _parts(v):
    if isinstance(v, ivmpc):
        return [v.real, v.imag]
    return [v]


def _contains_zero(v) -> bool:
    return all(p.a <= 0 <= p.b for p in _parts(v))


def _overlap(u, v) -> bool:
    pu, pv = _parts(u), _parts(v)
    if len(pu) != len(pv):
        pu = pu + [0 * pu[0]] * (2 - len(pu))
        pv = pv + [0 * pv[0]] * (2 - len(pv))
    return all(a.a <= b.b and b.a <= a.b for a, b in zip(pu, pv))


def _mid_raw(p):
    a, b = p._mpi_
    return mpf_shift(mpf_add(a, b, 0), -1)


def _radius(v):
    """Largest exact half-width over the real and imaginary parts."""
    return max((mpmath.mp.make_mpf(mpf_shift(mpf_sub(p._mpi_[1], p._mpi_[0], 0), -1))
                for p in _parts(v)))


def _to_mp(v, digits: int):
    """Midpoint of an enclosure as an ordinary mpmath number.

    The midpoint is stored exactly; later arithmetic on it follows the
    caller's ``mpmath.mp`` precision.
    """
    parts = [_mid_raw(p) for p in _parts(v)]
    if len(parts) == 1:
        return mpmath.mp.make_mpf(parts[0])
    return mpmath.mp.make_mpc((parts[0], parts[1]))


def _closed_form_enclosure(name: str, ctx, params: Mapping[str, object]):
    s = _enclose(ctx, params["s"]) if "s" in params else None
    t = _enclose(ctx, params["t"]) if "t" in params else None
    n = params.get("n")
    inv = family_closed_forms(name, s, t, n=int(n) if n is not None else None)
    num = inv.num if not isinstance(inv.num, int) else ctx.mpf(inv.num)
    den = inv.den if not isinstance(inv.den, int) else ctx.mpf(inv.den)
    if _contains_zero(den):
        raise Indeterminate(f"{name}: denominator encloses 0 at {ctx.dps} digits")
    return num / den


def numeric_eval(name: str, params: Mapping[str, object], digits: int = DEFAULT_DIGITS) -> NumericValue:
    """Evaluate a closed-form family invariant with a rigorous error bound.

    ``params`` maps ``s``, ``t`` (and ``n`` for ``disc_ft``) to rationals,
    Python numbers, mpmath numbers or expression strings such as
    ``"15*5^(-4/5)"``. Raises :class:`Indeterminate` when a denominator
    cannot be separated from zero; retry with more digits.
    """
    if digits < 20:
        raise DomainError("numeric evaluation needs at least 20 digits")
    ctx = _make_ctx(digits)
    v = _closed_form_enclosure(name, ctx, params)
    return NumericValue(_to_mp(v, digits), _radius(v), digits, v)


# -- the germ families -------------------------------------------------------------


def _admissibility_value(n: int, t):
    return (1 - n) ** (n - 1) * t ** n + n ** n


def germ_equiv_family_t(n: int, t1, t2, digits: int = DEFAULT_DIGITS) -> EquivalenceVerdict:
    """Germs of ``z^n + t z^(n-1) w + w^n`` are equivalent iff ``t1^n = t2^n``."""
    if not isinstance(n, int) or n < 4:
        raise DomainError("the family f_t is decided for integer n >= 4")
    if _is_exact(t1) and _is_exact(t2):
        a, b = _exact(t1), _exact(t2)
        for t in (a, b):
            if _admissibility_value(n, t) == 0:
                raise DomainError(f"t = {t} is inadmissible: need t^n != -n^n/(1-n)^(n-1)")
        same = a ** n == b ** n
        if n == 5:
            cross = equivalent_quintics(f_t(5, a), f_t(5, b))
            if cross.equivalent != same:
                raise ArithmeticError(f"t^n test and quintic invariants disagree at t = {a}, {b}")
        return EquivalenceVerdict(same, "exact", {"t^n": (a ** n, b ** n)})
    ctx = _make_ctx(digits)
    a, b = _enclose(ctx, t1), _enclose(ctx, t2)
    for t in (a, b):
        if _contains_zero(_admissibility_value(n, t)):
            raise DomainError(
                f"t is inadmissible or too close to t^n = -n^n/(1-n)^(n-1) at {digits} digits")
    pa, pb = a ** n, b ** n
    return EquivalenceVerdict(
        _overlap(pa, pb), "numeric",
        {"t^n": (_to_mp(pa, digits), _to_mp(pb, digits))},
        precision=digits,
        tolerance=max(_radius(pa), _radius(pb)),
    )


def _disc_fst_zero_exact(s: Fraction, t: Fraction) -> bool:
    return family_closed_forms("disc_fst", s, t).num == 0


def germ_equiv_family_st(p1, p2, digits: int = DEFAULT_DIGITS) -> EquivalenceVerdict:
    """Decide ``V_{s1,t1} ~ V_{s2,t2}`` by comparing j, k and l.

    Exact when all four parameters are rational. Otherwise each invariant
    is enclosed at ``digits`` decimal digits; equality means overlapping
    enclosures. ``gaps`` holds the relative gaps ``|x - y| / max(|x|, |y|, 1)``
    between midpoints.
    """
    (s1, t1), (s2, t2) = p1, p2
    names = ("j", "k", "l")
    if all(_is_exact(x) for x in (s1, t1, s2, t2)):
        pts = [(_exact(s1), _exact(t1)), (_exact(s2), _exact(t2))]
        for s, t in pts:
            if _disc_fst_zero_exact(s, t):
                raise DomainError(f"f_(s,t) at (s,t) = ({s}, {t}) is not square-free")
        witness, same = {}, True
        for name in names:
            x = family_closed_forms(name, *pts[0])
            y = family_closed_forms(name, *pts[1])
            witness[name] = (x.value, y.value)
            same = same and x.same_as(y)
        return EquivalenceVerdict(same, "exact", witness)

    ctx = _make_ctx(digits)
    pts = [{"s": s1, "t": t1}, {"s": s2, "t": t2}]
    for p in pts:
        disc = family_closed_forms("disc_fst", _enclose(ctx, p["s"]), _enclose(ctx, p["t"])).num
        if _contains_zero(disc):
            raise DomainError(
                f"discriminant of f_(s,t) encloses 0 at {digits} digits: not square-free or too close")
    witness, gaps, same, tol = {}, {}, True, 0
    mp = mpmath.MPContext()
    mp.dps = digits
    for name in names:
        x = _closed_form_enclosure(name, ctx, pts[0])
        y = _closed_form_enclosure(name, ctx, pts[1])
        same = same and _overlap(x, y)
        mx, my = _to_mp(x, digits), _to_mp(y, digits)
        witness[name] = (mx, my)
        scale = max(mp.mpf(1), mp.absmax(mx), mp.absmax(my))
        gaps[name] = mpmath.mp.make_mpf(mp.fdiv(mp.fabs(mp.fsub(mx, my)), scale)._mpf_)
        bound = mp.fdiv(max(_radius(x), _radius(y)), scale)
        tol = max(tol, mpmath.mp.make_mpf(bound._mpf_))
    return EquivalenceVerdict(same, "numeric", witness, precision=digits, tolerance=tol, gaps=gaps)
