"""Named families of binary forms and their displayed associated forms.

Parameters may be Fractions or MultiPoly symbols (``symbols("t")``), so the
same constructor serves both sampling and symbolic identity checks. Forms
in the associated variables zeta_1, zeta_2 are stored as ordinary binary
forms with zeta_1 in the ``z`` slot.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .binform import BinaryForm, DomainError

__all__ = [
    "f_t", "f_st", "g_t", "g_t_cleared", "h_t", "h_t_cleared", "q_t",
    "bold_q_t", "bold_f_t", "bold_f_st",
]


def f_t(n: int, t) -> BinaryForm:
    """``z^n + t z^(n-1) w + w^n``."""
    if n < 3:
        raise DomainError("f_t needs n >= 3")
    c = [Fraction(0)] * (n + 1)
    c[0] = Fraction(1)
    c[n] = Fraction(1)
    c[n - 1] = t
    return BinaryForm(c)


def f_st(s, t) -> BinaryForm:
    """``z^5 + s z^4 w + t z^3 w^2 + w^5``."""
    return BinaryForm([1, 0, 0, t, s, 1])


def g_t(t) -> BinaryForm:
    """``z^5 + 5t z^4 w + 5 z w^4 / t + w^5`` for rational ``t != 0``."""
    t = Fraction(t)
    if not t:
        raise DomainError("g_t needs t != 0")
    return BinaryForm([1, 5 / t, 0, 0, 5 * t, 1])


def g_t_cleared(t) -> BinaryForm:
    """``t * g_t``: polynomial in ``t``, same absolute invariants."""
    return BinaryForm([t, 5, 0, 0, 5 * t * t, t])


def h_t(t) -> BinaryForm:
    """``z^5/t + w^5/(1-t) + (z+w)^5`` for rational ``t`` not 0 or 1."""
    t = Fraction(t)
    if t in (0, 1):
        raise DomainError("h_t needs t not in {0, 1}")
    plus = BinaryForm([1, 1]) ** 5
    return BinaryForm([1 / (1 - t), 0, 0, 0, 0, 1 / t]) + plus


def h_t_cleared(t) -> BinaryForm:
    """``t (1 - t) h_t``."""
    u = t * (1 - t)
    plus = BinaryForm([1, 1]) ** 5
    return BinaryForm([t, 0, 0, 0, 0, 1 - t]) + plus * u


def q_t(t) -> BinaryForm:
    """``z^4 + t z^2 w^2 + w^4``."""
    return BinaryForm([1, 0, t, 0, 1])


def bold_q_t(t) -> BinaryForm:
    """``t z1^4 - 12 z1^2 z2^2 + t z2^4``, the quartic dual to ``q_t``."""
    return BinaryForm([t, 0, -12, 0, t])


def bold_f_t(n: int, t) -> BinaryForm:
    """Closed form proportional to the associated form of ``f_t``."""
    if n < 4:
        raise DomainError("the displayed associated form of f_t needs n >= 4")
    N = 2 * (n - 2)
    r = t * Fraction(1 - n, n)
    c = [Fraction(0)] * (N + 1)
    for j in range(n - 1, N + 1):
        c[j] = c[j] + comb(N, j) * r ** (j + 2 - n)
    lead = t * t * Fraction(n - 1, n * n)
    for j in range(n - 1, N + 1):
        c[N - j] = c[N - j] + lead * comb(N, j) * r ** (N - j)
    c[n - 2] = c[n - 2] + comb(N, n - 2)
    return BinaryForm(c)


def bold_f_st(s, t) -> BinaryForm:
    """Closed-form sextic proportional to the associated form of ``f_st``."""
    return BinaryForm([
        -6 * s ** 3 * t ** 2 - 50 * s ** 2 + 24 * s * t ** 3 + 125 * t,
        240 * s ** 3 + 27 * s ** 2 * t ** 3 - 825 * s * t - 108 * t ** 4,
        -480 * s ** 4 + 2100 * s ** 2 * t - 1125 * t ** 2,
        480 * s ** 3 * t - 1650 * s * t ** 2 - 6250,
        -270 * s ** 2 * t ** 2 + 3750 * s + 675 * t ** 3,
        -1200 * s ** 2 + 81 * s * t ** 3 + 1125 * t,
        160 * s ** 3 - 300 * s * t - 27 * t ** 4,
    ])
