"""Binary forms, the GL(2) action, and the classical covariant primitives.

A :class:`BinaryForm` of degree ``n`` stores plain coefficients
``c[0..n]`` with ``Q = sum c[i] * z**i * w**(n-i)``. Coefficients are
Fractions, or :class:`~curvex.ratpoly.MultiPoly` values when the form depends
on symbolic parameters. The binomial convention ``a_i = c_i / C(n, i)`` used
by the classical formulas is available through :meth:`BinaryForm.a`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, List, Sequence, Tuple

from .ratpoly import MultiPoly, as_fraction, det_fraction_free, exact_divide, is_zero

__all__ = [
    "DomainError",
    "BinaryForm",
    "LinearMap2",
    "from_roots",
    "act",
    "transvectant",
    "hessian",
    "resultant",
    "sylvester_matrix",
    "discriminant",
    "universal_discriminant",
    "is_square_free",
    "common_factor_degree",
]


class DomainError(ValueError):
    """Raised when an operation's mathematical precondition fails."""


def _scalar(x):
    if isinstance(x, MultiPoly):
        return x.constant_value() if x.is_constant() else x
    return as_fraction(x)


class BinaryForm:
    """Homogeneous polynomial in ``z, w`` given by its plain coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[object]):
        if len(coeffs) == 0:
            raise ValueError("a binary form needs at least one coefficient")
        self.coeffs: Tuple[object, ...] = tuple(_scalar(c) for c in coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def a(self, i: int):
        """Binomial-convention coefficient ``a_i = c_i / C(n, i)``."""
        return self.coeffs[i] * Fraction(1, comb(self.degree, i))

    @classmethod
    def from_binomial(cls, a: Sequence[object]) -> "BinaryForm":
        n = len(a) - 1
        return cls([comb(n, i) * ai for i, ai in enumerate(a)])

    @classmethod
    def zero(cls, n: int) -> "BinaryForm":
        return cls([0] * (n + 1))

    @classmethod
    def from_poly(cls, p: MultiPoly, z: str = "z", w: str = "w") -> "BinaryForm":
        """Read off a form from a polynomial homogeneous in ``z, w``."""
        others = tuple(v for v in p.variables if v not in (z, w))
        degs = set()
        buckets: Dict[int, Dict[tuple, Fraction]] = {}
        iz = p.variables.index(z) if z in p.variables else None
        iw = p.variables.index(w) if w in p.variables else None
        oidx = [p.variables.index(v) for v in others]
        for e, c in p.terms.items():
            ez = e[iz] if iz is not None else 0
            ew = e[iw] if iw is not None else 0
            degs.add(ez + ew)
            buckets.setdefault(ez, {})[tuple(e[j] for j in oidx)] = c
        if len(degs) > 1:
            raise DomainError(f"polynomial is not homogeneous in {z}, {w}: degrees {sorted(degs)}")
        n = degs.pop() if degs else 0
        coeffs = []
        for i in range(n + 1):
            t = buckets.get(i, {})
            coeffs.append(MultiPoly(t, others) if others else (t.get((), Fraction(0))))
        return cls(coeffs)

    def to_poly(self, z: str = "z", w: str = "w") -> MultiPoly:
        n = self.degree
        zz, ww = MultiPoly.var(z), MultiPoly.var(w)
        total = MultiPoly({}, (z, w))
        for i, c in enumerate(self.coeffs):
            if not is_zero(c):
                total = total + (zz ** i) * (ww ** (n - i)) * c
        return total

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coeffs)

    def is_symbolic(self) -> bool:
        return any(isinstance(c, MultiPoly) for c in self.coeffs)

    def parameters(self) -> Tuple[str, ...]:
        names: List[str] = []
        for c in self.coeffs:
            if isinstance(c, MultiPoly):
                for v in c.used_variables():
                    if v not in names:
                        names.append(v)
        return tuple(names)

    def subs(self, values) -> "BinaryForm":
        return BinaryForm([c.subs(values) if isinstance(c, MultiPoly) else c for c in self.coeffs])

    def map_coeffs(self, f) -> "BinaryForm":
        return BinaryForm([f(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and all(
            is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BinaryForm({self.to_poly()})"

    def __str__(self):
        return str(self.to_poly())

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise DomainError("cannot add forms of different degrees")
        return BinaryForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise DomainError("cannot subtract forms of different degrees")
        return BinaryForm([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    if not is_zero(b):
                        out[i + j] = out[i + j] + a * b
            return BinaryForm(out)
        return BinaryForm([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BinaryForm":
        result = BinaryForm([1])
        for _ in range(k):
            result = result * self
        return result

    def dz(self, k: int = 1) -> "BinaryForm":
        c = self.coeffs
        n = self.degree
        if k > n:
            return BinaryForm([0])
        return BinaryForm([c[i + k] * (factorial(i + k) // factorial(i)) for i in range(n - k + 1)])

    def dw(self, k: int = 1) -> "BinaryForm":
        c = self.coeffs
        n = self.degree
        if k > n:
            return BinaryForm([0])
        return BinaryForm([c[i] * (factorial(n - i) // factorial(n - i - k)) for i in range(n - k + 1)])

    def derivative(self, kz: int, kw: int) -> "BinaryForm":
        return self.dz(kz).dw(kw)

    def scalar(self):
        """Value of a degree-0 form."""
        if self.degree != 0:
            raise DomainError(f"form of degree {self.degree} is not a scalar")
        return self.coeffs[0]

    def evaluate(self, z, w):
        total = 0
        n = self.degree
        for i, c in enumerate(self.coeffs):
            if not is_zero(c):
                total = total + c * z ** i * w ** (n - i)
        return total


@dataclass(frozen=True)
class LinearMap2:
    """The matrix ``[[a, b], [c, d]]`` acting on column vectors ``(z, w)``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def identity(cls) -> "LinearMap2":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "LinearMap2":
        det = self.det
        if not det:
            raise DomainError("singular linear map")
        return LinearMap2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def __matmul__(self, other: "LinearMap2") -> "LinearMap2":
        return LinearMap2(
            self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d,
        )


def from_roots(pairs: Iterable[Tuple[object, object]]) -> BinaryForm:
    """The product of the linear forms ``w_a * z - z_a * w``."""
    pairs = list(pairs)
    if not pairs:
        raise DomainError("from_roots needs at least one root pair")
    q = BinaryForm([1])
    for za, wa in pairs:
        q = q * BinaryForm([-za, wa])
    return q


def _substitute_linear(q: BinaryForm, zlin: BinaryForm, wlin: BinaryForm) -> BinaryForm:
    n = q.degree
    zp = [BinaryForm([1])]
    wp = [BinaryForm([1])]
    for _ in range(n):
        zp.append(zp[-1] * zlin)
        wp.append(wp[-1] * wlin)
    total = BinaryForm.zero(n)
    for i, c in enumerate(q.coeffs):
        if not is_zero(c):
            total = total + (zp[i] * wp[n - i]) * c
    return total


def act(c: LinearMap2, q: BinaryForm) -> BinaryForm:
    """``Q_C(v) = Q(C^{-1} v)``."""
    inv = c.inverse()
    # (C^{-1} v)_1 = inv.a z + inv.b w, coefficient order is [w-part, z-part]
    zlin = BinaryForm([inv.b, inv.a])
    wlin = BinaryForm([inv.d, inv.c])
    return _substitute_linear(q, zlin, wlin)


def transvectant(p: BinaryForm, s: BinaryForm, r: int) -> BinaryForm:
    """Omega-process transvectant of order ``r``, with no factorial prefactor."""
    if r < 0 or r > min(p.degree, s.degree):
        raise DomainError(f"transvectant order {r} exceeds degrees {p.degree}, {s.degree}")
    total = BinaryForm.zero(p.degree + s.degree - 2 * r)
    for i in range(r + 1):
        term = p.derivative(r - i, i) * s.derivative(i, r - i)
        total = total + term * ((-1) ** i * comb(r, i))
    return total


def hessian(q: BinaryForm) -> BinaryForm:
    """``Q_zz * Q_ww - Q_zw**2``."""
    if q.degree < 2:
        raise DomainError("the Hessian needs degree at least 2")
    return q.dz(2) * q.dw(2) - q.derivative(1, 1) ** 2


def sylvester_matrix(p: BinaryForm, s: BinaryForm) -> List[List[object]]:
    m, n = p.degree, s.degree
    size = m + n
    pc = list(reversed(p.coeffs))
    sc = list(reversed(s.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + sc + [Fraction(0)] * (size - n - 1 - i))
    return rows


def resultant(p: BinaryForm, s: BinaryForm):
    """Homogeneous resultant: determinant of the Sylvester matrix."""
    if p.is_zero() or s.is_zero():
        raise DomainError("resultant of a zero form")
    if p.degree + s.degree == 0:
        return Fraction(1)
    return _scalar(det_fraction_free(sylvester_matrix(p, s)))


_UNIVERSAL: Dict[int, MultiPoly] = {}
# generic Sylvester elimination is ~40 s at degree 7; numeric forms above
# this degree take the shear route instead
_UNIVERSAL_MAX_EAGER = 6
_UNIVERSAL_LOCK = threading.Lock()


def coefficient_symbols(n: int) -> Tuple[str, ...]:
    return tuple(f"c{i}" for i in range(n + 1))


def universal_discriminant(n: int) -> MultiPoly:
    """Discriminant of the generic degree-``n`` form as a polynomial in ``c0..cn``.

    Obtained as ``R(Q, Q_z) / (n**n * c_n)`` with exact division, so it is
    total on forms whose leading coefficient vanishes.
    """
    if n < 2:
        raise DomainError("universal discriminant needs degree >= 2")
    with _UNIVERSAL_LOCK:
        cached = _UNIVERSAL.get(n)
        if cached is not None:
            return cached
        names = coefficient_symbols(n)
        generic = BinaryForm([MultiPoly.var(v) for v in names])
        res = det_fraction_free(sylvester_matrix(generic, generic.dz()))
        lead = MultiPoly.var(names[-1]) * (n ** n)
        disc = exact_divide(res, lead)
        if disc is None:
            raise ArithmeticError(f"resultant of the generic degree-{n} form not divisible by n^n c_n")
        disc = disc.embed(names)
        _UNIVERSAL[n] = disc
        return disc


def discriminant(q: BinaryForm):
    """Relative invariant vanishing exactly on non-square-free forms.

    Normalized so that ``disc(Q) = R(Q, Q_z) / (n**n a_n)`` when ``a_n != 0``.
    """
    n = q.degree
    if n == 0:
        raise DomainError("discriminant of a degree-0 form")
    if n == 1:
        return Fraction(1)
    lead = q.coeffs[-1]
    if not isinstance(lead, MultiPoly) and lead != 0:
        res = resultant(q, q.dz())
        return _scalar(exact_divide(res, lead * n ** n)) if isinstance(res, MultiPoly) else res / (lead * n ** n)
    if n > _UNIVERSAL_MAX_EAGER and not q.is_symbolic():
        if q.is_zero():
            return Fraction(0)
        # det-1 shear moving a non-root to (1, 0); disc has weight n(n-1)
        for k in range(n + 1):
            if q.evaluate(Fraction(1), Fraction(k)) != 0:
                return discriminant(act(LinearMap2(1, 0, k, 1).inverse(), q))
    univ = universal_discriminant(n)
    return _scalar(univ.subs(dict(zip(coefficient_symbols(n), q.coeffs))))


def _dehomogenize(q: BinaryForm) -> List[Fraction]:
    # coefficients of q(z, 1), low to high, trailing zeros stripped
    c = list(q.coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_rem(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] -= f * bc
        while a and a[-1] == 0:
            a.pop()
    return a


def common_factor_degree(p: BinaryForm, s: BinaryForm) -> int:
    """Degree of gcd(p, s) as binary forms (numeric coefficients only)."""
    if p.is_symbolic() or s.is_symbolic():
        raise DomainError("gcd test needs numeric coefficients")
    if p.is_zero() or s.is_zero():
        raise DomainError("gcd with a zero form")
    # w-adic part: w divides a form iff its z^deg coefficient vanishes
    def w_order(f: BinaryForm) -> int:
        k = 0
        while f.coeffs[f.degree - k] == 0:
            k += 1
        return k

    wdeg = min(w_order(p), w_order(s))
    a, b = _dehomogenize(p), _dehomogenize(s)
    while b:
        a, b = b, _poly_rem(a, b)
    return wdeg + len(a) - 1


def is_square_free(q: BinaryForm) -> bool:
    """``disc(q) != 0``; cross-checked with gcd(Q_z, Q_w) on numeric input."""
    if q.is_zero():
        raise DomainError("square-free test of the zero form")
    if q.degree <= 1:
        return True
    by_disc = not is_zero(discriminant(q))
    if not q.is_symbolic():
        by_gcd = common_factor_degree(q.dz(), q.dw()) == 0
        if by_gcd != by_disc:
            raise ArithmeticError(f"discriminant and gcd disagree on square-freeness of {q}")
    return by_disc
