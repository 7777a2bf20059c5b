"""Graded Milnor algebra of a square-free binary form and its associated form.

The Jacobian ideal of a degree-``n`` form is generated in the single degree
``n - 1``, so the quotient is computed degree by degree: in degree ``d`` the
products of all degree ``d - n + 1`` monomials with ``Q_z`` and ``Q_w`` are
row-reduced over the rationals. Columns are the degree-``d`` monomials in
graded-lex order (``z^d`` first); non-pivot monomials form the quotient basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .binform import BinaryForm, DomainError, discriminant, hessian
from .ratpoly import MultiPoly, as_fraction, rref as _rref

__all__ = [
    "NonIsolatedSingularity",
    "MilnorAlgebra",
    "milnor_build",
    "normal_form",
    "annihilator_check",
    "s_pi_polynomial",
    "AssociatedForm",
    "associated_form",
    "proportional",
]


class NonIsolatedSingularity(DomainError):
    """The form is not square-free, so its Milnor algebra is infinite-dimensional."""


Monomial = Tuple[int, int]  # (exponent of z, exponent of w)


def _columns(d: int) -> List[Monomial]:
    return [(d - k, k) for k in range(d + 1)]


def _ideal_rows(q: BinaryForm, d: int) -> List[List[Fraction]]:
    n = q.degree
    gens = (q.dz(), q.dw())
    shift = d - (n - 1)
    if shift < 0:
        return []
    rows = []
    for mz in range(shift + 1):
        mw = shift - mz
        for g in gens:
            row = [Fraction(0)] * (d + 1)
            for i, c in enumerate(g.coeffs):
                if c:
                    ew = (n - 1 - i) + mw
                    row[ew] = c  # column index = w-exponent
            rows.append(row)
    return rows


@dataclass
class _DegreePiece:
    degree: int
    basis: List[Monomial]
    rows: List[List[Fraction]]
    pivots: List[int]

    def reduce(self, vec: List[Fraction]) -> List[Fraction]:
        vec = list(vec)
        for row, p in zip(self.rows, self.pivots):
            f = vec[p]
            if f:
                vec = [x - f * y for x, y in zip(vec, row)]
        return [vec[w] for (_, w) in self.basis]


@dataclass
class MilnorAlgebra:
    """Per-degree quotient bases and reducers of ``Q[z, w] / (Q_z, Q_w)``."""

    form: BinaryForm
    pieces: List[_DegreePiece]
    _products: Dict[Tuple[int, int], Tuple[Fraction, ...]] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.form.degree

    @property
    def nu(self) -> int:
        """Top nonzero degree (the nil-index of the maximal ideal)."""
        return 2 * (self.n - 2)

    @property
    def hilbert(self) -> Tuple[int, ...]:
        return tuple(len(p.basis) for p in self.pieces)

    @property
    def dimension(self) -> int:
        return sum(self.hilbert)

    @property
    def basis(self) -> List[Tuple[int, Monomial]]:
        """Quotient basis as (degree, monomial) in degree then column order."""
        return [(p.degree, m) for p in self.pieces for m in p.basis]

    @property
    def offsets(self) -> List[int]:
        out, k = [], 0
        for p in self.pieces:
            out.append(k)
            k += len(p.basis)
        return out

    @property
    def kernel_dimension(self) -> int:
        """dim of the span of monomial classes in degrees 1 .. nu-1."""
        return sum(self.hilbert[1:self.nu])

    def reduce_homogeneous(self, d: int, vec: Sequence[Fraction]) -> List[Fraction]:
        if d > self.nu:
            return []
        return self.pieces[d].reduce(vec)

    def product(self, a: int, b: int) -> Tuple[Fraction, ...]:
        """Coordinates of the product of basis elements ``a`` and ``b``."""
        key = (a, b) if a <= b else (b, a)
        cached = self._products.get(key)
        if cached is None:
            basis = self.basis
            (da, (_, wa)), (db, (_, wb)) = basis[a], basis[b]
            vec = [Fraction(0)] * self.dimension
            d = da + db
            if d <= self.nu:
                col = [Fraction(0)] * (d + 1)
                col[wa + wb] = Fraction(1)
                off = self.offsets[d]
                for k, x in enumerate(self.reduce_homogeneous(d, col)):
                    vec[off + k] = x
            cached = tuple(vec)
            self._products[key] = cached
        return cached

    def top_coordinate(self, coords: Sequence) -> object:
        return coords[self.offsets[self.nu]]


def milnor_build(q: BinaryForm) -> MilnorAlgebra:
    if q.is_symbolic():
        raise DomainError("the Milnor engine needs rational coefficients")
    n = q.degree
    if n < 3:
        raise DomainError("the Milnor algebra is built for degree >= 3")
    if q.is_zero():
        raise NonIsolatedSingularity("zero form")
    nu = 2 * (n - 2)
    pieces = []
    for d in range(nu + 1):
        rows, pivots = _rref(_ideal_rows(q, d), d + 1)
        basis = [m for k, m in enumerate(_columns(d)) if k not in pivots]
        pieces.append(_DegreePiece(d, basis, rows, pivots))
    # past the top degree the ideal must be everything
    _, pivots = _rref(_ideal_rows(q, nu + 1), nu + 2)
    deficit = len(pivots) < nu + 2
    singular = discriminant(q) == 0
    if deficit != singular:
        raise ArithmeticError("rank deficit and discriminant disagree on isolatedness")
    if singular:
        raise NonIsolatedSingularity(f"{q} is not square-free: the singularity is not isolated")
    alg = MilnorAlgebra(q, pieces)
    if alg.hilbert[nu] != 1:
        raise ArithmeticError(f"top graded piece has dimension {alg.hilbert[nu]}")
    return alg


def _homogeneous_parts(p) -> Dict[int, List[Fraction]]:
    """Split a polynomial in z, w into per-degree coefficient vectors (index = w exponent)."""
    if isinstance(p, BinaryForm):
        d = p.degree
        vec = [Fraction(0)] * (d + 1)
        for i, c in enumerate(p.coeffs):
            vec[d - i] = as_fraction(c)
        return {d: vec}
    if not isinstance(p, MultiPoly):
        return {0: [as_fraction(p)]}
    extra = [v for v in p.used_variables() if v not in ("z", "w")]
    if extra:
        raise DomainError(f"normal_form expects a polynomial in z, w; found {extra}")
    iz = p.variables.index("z") if "z" in p.variables else None
    iw = p.variables.index("w") if "w" in p.variables else None
    parts: Dict[int, List[Fraction]] = {}
    for e, c in p.terms.items():
        ez = e[iz] if iz is not None else 0
        ew = e[iw] if iw is not None else 0
        vec = parts.setdefault(ez + ew, [Fraction(0)] * (ez + ew + 1))
        vec[ew] += c
    return parts


def normal_form(alg: MilnorAlgebra, p) -> Tuple[Fraction, ...]:
    """Coordinates of the class of ``p`` in the quotient basis."""
    out = [Fraction(0)] * alg.dimension
    offsets = alg.offsets
    for d, vec in _homogeneous_parts(p).items():
        if d > alg.nu:
            continue
        for k, x in enumerate(alg.reduce_homogeneous(d, vec)):
            out[offsets[d] + k] += x
    return tuple(out)


def annihilator_check(alg: MilnorAlgebra) -> bool:
    """Gorenstein certificate: the socle is exactly the top piece, spanned by the Hessian."""
    nu = alg.nu
    if alg.hilbert[nu] != 1:
        return False
    top = alg.offsets[nu]
    h = normal_form(alg, hessian(alg.form))
    if h[top] == 0 or any(x for i, x in enumerate(h) if i != top):
        return False
    if alg.kernel_dimension != alg.dimension - 2:
        return False
    offsets = alg.offsets
    for d in range(1, nu):
        if alg.hilbert[d] != alg.hilbert[nu - d]:
            return False
        size = alg.hilbert[d]
        pairing = [[alg.product(offsets[d] + i, offsets[nu - d] + j)[top] for j in range(size)]
                   for i in range(size)]
        _, piv = _rref(pairing, size)
        if len(piv) != size:
            return False
    return True


def s_pi_polynomial(alg: MilnorAlgebra, prefix: str = "zeta") -> MultiPoly:
    """The polynomial P with ``S_pi = {zeta_0 = P(zeta)}`` for the canonical projection.

    Coordinates ``zeta1..zeta_m`` are attached to the quotient basis of degrees
    1..nu-1 in order (``zeta1``, ``zeta2`` are the classes of z, w).
    """
    nu = alg.nu
    offsets = alg.offsets
    lo, hi = offsets[1], offsets[nu]
    m = hi - lo
    names = tuple(f"{prefix}{i}" for i in range(1, m + 1))
    dim = alg.dimension
    degree_of = [d for d, _ in alg.basis]
    zero = MultiPoly({}, names)
    u: List[MultiPoly] = [zero] * dim
    for k in range(m):
        u[lo + k] = MultiPoly({tuple(int(j == k) for j in range(m)): 1}, names)

    def mul(x: List[MultiPoly], y: List[MultiPoly]) -> List[MultiPoly]:
        out = [zero] * dim
        for a in range(dim):
            if not x[a]:
                continue
            for b in range(dim):
                if not y[b] or degree_of[a] + degree_of[b] > nu:
                    continue
                coef = x[a] * y[b]
                for c, s in enumerate(alg.product(a, b)):
                    if s:
                        out[c] = out[c] + coef * s
        return out

    total = zero
    power = u
    for k in range(2, nu + 1):
        power = mul(power, u)
        total = total + power[hi] * Fraction(1, factorial(k))
    return -total


@dataclass(frozen=True)
class AssociatedForm:
    """A binary form in zeta_1, zeta_2 defined up to a nonzero scalar."""

    form: BinaryForm

    def __eq__(self, other):
        if isinstance(other, AssociatedForm):
            other = other.form
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return proportional(self.form, other) is not None

    def __hash__(self):
        return hash(self.form.degree)


def associated_form(q: BinaryForm, alg: Optional[MilnorAlgebra] = None) -> AssociatedForm:
    """Top homogeneous part of P_pi, rescaled to ``sum C(nu,i) lambda_i z1^i z2^(nu-i)``."""
    alg = alg or milnor_build(q)
    nu = alg.nu
    coeffs = []
    for i in range(nu + 1):
        mono = [Fraction(0)] * (nu + 1)
        mono[nu - i] = Fraction(1)  # z^i w^(nu-i)
        lam = alg.reduce_homogeneous(nu, mono)[0]
        coeffs.append(comb(nu, i) * lam)
    form = BinaryForm(coeffs)
    if form.is_zero():
        raise ArithmeticError("associated form vanished for a square-free input")
    return AssociatedForm(form)


def proportional(p: BinaryForm, s: BinaryForm) -> Optional[Fraction]:
    """The scalar c with ``p = c * s``, or None if there is none."""
    if p.degree != s.degree:
        raise DomainError("proportionality needs equal degrees")
    if p.is_zero() and s.is_zero():
        raise DomainError("proportionality of two zero forms is undefined")
    if p.is_zero() or s.is_zero():
        return None
    k = next(i for i, c in enumerate(s.coeffs) if c != 0)
    c = p.coeffs[k] / s.coeffs[k]
    if c == 0:
        return None
    if all(a == c * b for a, b in zip(p.coeffs, s.coeffs)):
        return c
    return None
