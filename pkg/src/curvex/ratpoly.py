"""Exact sparse multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` values. A :class:`MultiPoly`
carries an ordered tuple of variable names and a map from exponent tuples to
nonzero coefficients. Binary operations embed both operands into the union of
their variable sets, so ``z + s`` just works.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

__all__ = [
    "MultiPoly",
    "Scalar",
    "symbols",
    "as_fraction",
    "is_zero",
    "exact_divide",
    "det_fraction_free",
    "rref",
]

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def is_zero(x) -> bool:
    if isinstance(x, MultiPoly):
        return not x.terms
    return x == 0


def _grlex_key(e: Exponent):
    return (sum(e), e)


class MultiPoly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None,
                 variables: Sequence[str] = ()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        clean: Dict[Exponent, Fraction] = {}
        nv = len(variables)
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nv:
                raise ValueError(f"exponent {exp} does not match variables {variables}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.variables = variables
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Fraction], variables: Tuple[str, ...]) -> "MultiPoly":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.variables = variables
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar, variables: Sequence[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls._raw({(1,): Fraction(1)}, (name,))

    # -- variable bookkeeping -------------------------------------------------

    def embed(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express over ``variables`` (a superset of the used variables)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: i for i, v in enumerate(variables)}
        nv = len(variables)
        out = {}
        for exp, c in self.terms.items():
            new = [0] * nv
            for v, e in zip(self.variables, exp):
                if e:
                    if v not in index:
                        raise ValueError(f"variable {v!r} is used but not in {variables}")
                    new[index[v]] = e
            out[tuple(new)] = c
        return MultiPoly._raw(out, variables)

    def used_variables(self) -> Tuple[str, ...]:
        used = [False] * len(self.variables)
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    def _align(self, other: "MultiPoly"):
        if self.variables == other.variables:
            return self, other, self.variables
        extra = tuple(v for v in other.variables if v not in self.variables)
        union = self.variables + extra
        return self.embed(union), other.embed(union), union

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return MultiPoly.const(other, self.variables)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, vs = self._align(other)
        out = dict(a.terms)
        for exp, c in b.terms.items():
            v = out.get(exp)
            if v is None:
                out[exp] = c
            else:
                v += c
                if v:
                    out[exp] = v
                else:
                    del out[exp]
        return MultiPoly._raw(out, vs)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self.terms.items()}, self.variables)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, MultiPoly):
            c = as_fraction(other)
            if not c:
                return MultiPoly._raw({}, self.variables)
            return MultiPoly._raw({e: v * c for e, v in self.terms.items()}, self.variables)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, vs = self._align(other)
        out: Dict[Exponent, Fraction] = {}
        bt = list(b.terms.items())
        for ea, ca in a.terms.items():
            for eb, cb in bt:
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return MultiPoly._raw({e: c for e, c in out.items() if c}, vs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            if other.is_constant():
                other = other.constant_value()
            else:
                q = exact_divide(self, other)
                if q is None:
                    raise ArithmeticError("polynomial division is not exact")
                return q
        c = as_fraction(other)
        if not c:
            raise ZeroDivisionError("division of polynomial by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            raise ValueError("negative exponent on a polynomial")
        result = MultiPoly.const(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            a, b, _ = self._align(other)
            return a.terms == b.terms
        if isinstance(other, (int, Fraction, Rational)):
            if not other:
                return not self.terms
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            used = sorted(self.used_variables())
            canon = self.embed(tuple(used)) if set(used) != set(self.variables) or \
                tuple(used) != self.variables else self
            self._hash = hash((tuple(used), frozenset(canon.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -----------------------------------------------------------

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        for c in self.terms.values():
            return c
        return Fraction(0)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var: str) -> int:
        if not self.terms:
            return -1
        if var not in self.variables:
            return 0
        i = self.variables.index(var)
        return max(e[i] for e in self.terms)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        exp = tuple(monomial.get(v, 0) for v in self.variables)
        if any(v not in self.variables and e for v, e in monomial.items()):
            return Fraction(0)
        return self.terms.get(exp, Fraction(0))

    def homogeneous_components(self) -> Dict[int, "MultiPoly"]:
        parts: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: MultiPoly._raw(t, self.variables) for d, t in sorted(parts.items())}

    def coeffs_in(self, var: str) -> Dict[int, "MultiPoly"]:
        """Split as a polynomial in ``var`` with coefficients in the others."""
        if var not in self.variables:
            return {0: self} if self.terms else {}
        i = self.variables.index(var)
        rest = self.variables[:i] + self.variables[i + 1:]
        out: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self.terms.items():
            out.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: MultiPoly._raw(t, rest) for k, t in out.items()}

    # -- calculus and substitution -------------------------------------------

    def diff(self, var: str, k: int = 1) -> "MultiPoly":
        if var not in self.variables:
            return MultiPoly._raw({}, self.variables) if k else self
        i = self.variables.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] >= k:
                f = 1
                for j in range(k):
                    f *= e[i] - j
                ne = e[:i] + (e[i] - k,) + e[i + 1:]
                out[ne] = c * f
        return MultiPoly._raw(out, self.variables)

    def subs(self, values: Mapping[str, object]):
        """Substitute values (scalars, polynomials, or anything ring-like).

        Variables not mentioned stay symbolic. If every variable is replaced
        by a scalar the result is a scalar of that type.
        """
        keep = [v for v in self.variables if v not in values]
        keep_idx = [self.variables.index(v) for v in keep]
        sub_idx = [(i, values[v]) for i, v in enumerate(self.variables) if v in values]
        powers: Dict[Tuple[int, int], object] = {}

        def pw(i, val, e):
            key = (i, e)
            if key not in powers:
                powers[key] = val ** e
            return powers[key]

        total = None
        for e, c in self.terms.items():
            term = c
            for i, val in sub_idx:
                if e[i]:
                    term = term * pw(i, val, e[i])
            if keep:
                mono = MultiPoly._raw({tuple(e[j] for j in keep_idx): Fraction(1)}, tuple(keep))
                term = mono * term if not isinstance(term, MultiPoly) else term * mono
            total = term if total is None else total + term
        if total is None:
            return MultiPoly._raw({}, tuple(keep)) if keep else Fraction(0)
        return total

    def __call__(self, **values):
        return self.subs(values)

    # -- printing -------------------------------------------------------------

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def symbols(names: str | Iterable[str]):
    """``z, w = symbols("z w")``"""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    out = tuple(MultiPoly.var(n) for n in names)
    return out[0] if len(out) == 1 else out


def exact_divide(p, d):
    """Exact quotient ``p / d``, or ``None`` when ``d`` does not divide ``p``.

    Uses multivariate long division in graded-lex order: if ``p = q*d`` then
    the leading term of every remainder is divisible by the leading term of
    ``d``, so the first failure certifies non-divisibility.
    """
    if not isinstance(p, MultiPoly) and not isinstance(d, MultiPoly):
        d = as_fraction(d)
        if not d:
            raise ZeroDivisionError("exact_divide by zero")
        return as_fraction(p) / d
    if not isinstance(d, MultiPoly):
        d = MultiPoly.const(d)
    if not isinstance(p, MultiPoly):
        p = MultiPoly.const(p)
    if not d.terms:
        raise ZeroDivisionError("exact_divide by the zero polynomial")
    p, d, vs = p._align(d)
    if d.is_constant():
        return p * (1 / d.constant_value())
    lead_e, lead_c = d.leading_term()
    dterms = list(d.terms.items())
    rem = dict(p.terms)
    quot: Dict[Exponent, Fraction] = {}
    # largest-first processing; keys re-sorted lazily
    while rem:
        e = max(rem, key=_grlex_key)
        c = rem[e]
        qe = tuple(x - y for x, y in zip(e, lead_e))
        if any(x < 0 for x in qe):
            return None
        qc = c / lead_c
        quot[qe] = qc
        for de, dc in dterms:
            te = tuple(x + y for x, y in zip(qe, de))
            v = rem.get(te, 0) - qc * dc
            if v:
                rem[te] = v
            else:
                rem.pop(te, None)
    return MultiPoly._raw(quot, vs)


def _div(a, b):
    if isinstance(a, MultiPoly) or isinstance(b, MultiPoly):
        q = exact_divide(a, b)
        if q is None:
            raise ArithmeticError("fraction-free elimination hit a non-exact division")
        return q
    return as_fraction(a) / as_fraction(b)


def det_fraction_free(matrix: Sequence[Sequence[object]]):
    """Determinant by Bareiss fraction-free elimination.

    Entries may be ints, Fractions or MultiPolys (mixed is fine). Every
    division performed is exact.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    m = [list(row) for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if is_zero(m[k][k]):
            for r in range(k + 1, n):
                if not is_zero(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = pivot * m[i][j] - mik * m[k][j]
                m[i][j] = _div(num, prev) if not (isinstance(prev, Fraction) and prev == 1) else num
            m[i][k] = Fraction(0)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def rref(rows: Sequence[Sequence[Fraction]], ncols: int):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots
