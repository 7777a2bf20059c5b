from fractions import Fraction

import mpmath
import pytest

from conftest import random_form, random_map
from curvex.binform import DomainError, act
from curvex.classical import family_closed_forms
from curvex.equiv import (
    Indeterminate,
    equivalent_quartics,
    equivalent_quintics,
    germ_equiv_family_st,
    germ_equiv_family_t,
    numeric_eval,
    parse_scalar,
)
from curvex.families import f_t, g_t_cleared, q_t


def test_quartic_examples(rng):
    assert equivalent_quartics(q_t(3), q_t(-3)).equivalent
    v = equivalent_quartics(q_t(0), q_t(1))
    assert not v.equivalent
    assert v.witness["J"] == (1, Fraction(2197, 972))
    q = random_form(rng, 4)
    assert equivalent_quartics(q, act(random_map(rng), q)).equivalent


def test_non_square_free_is_a_domain_error():
    with pytest.raises(DomainError):
        equivalent_quartics(q_t(2), q_t(1))


def test_quintic_examples():
    assert not equivalent_quintics(f_t(5, 1), f_t(5, -1)).equivalent
    for t in (Fraction(2), Fraction(-3, 5)):
        assert equivalent_quintics(g_t_cleared(t), g_t_cleared(1 / t)).equivalent


def test_family_t_examples():
    assert germ_equiv_family_t(5, 3, 3).equivalent
    assert germ_equiv_family_t(4, 2, -2).equivalent
    assert not germ_equiv_family_t(5, 1, 2).equivalent


def test_family_t_admissibility_guard():
    # n = 5: 256 t^5 + 3125 = 0 has only irrational solutions
    with pytest.raises(DomainError):
        germ_equiv_family_t(5, "-(3125/256)^(1/5)", 1)
    with pytest.raises(DomainError):
        germ_equiv_family_t(3, 1, 1)


def test_family_t_roots_of_unity():
    for n in (4, 5, 6, 7):
        rho = f"exp(2*pi*I/{n})"
        v = germ_equiv_family_t(n, "3/2", f"3/2*{rho}")
        assert v.equivalent and v.mode == "numeric"
        assert not germ_equiv_family_t(n, "3/2", f"3/2*exp(2*pi*I/{n + 1})").equivalent
    assert germ_equiv_family_t(6, 2, -2).mode == "exact"


def test_family_t_is_symmetric_and_reflexive():
    for a, b in [(1, 2), (Fraction(1, 3), Fraction(-1, 3)), (2, -2)]:
        assert germ_equiv_family_t(6, a, b).equivalent == germ_equiv_family_t(6, b, a).equivalent
        assert germ_equiv_family_t(6, a, a).equivalent


def test_family_st_examples():
    v = germ_equiv_family_st((5, 10), ("15*5^(-4/5)", "10*5^(-3/5)"), digits=60)
    assert v.equivalent and v.mode == "numeric" and v.precision == 60
    assert all(g < mpmath.mpf("1e-40") for g in v.gaps.values())
    assert germ_equiv_family_st((1, 2), (1, 2)).equivalent
    assert not germ_equiv_family_st((0, 0), (1, 1)).equivalent


def test_family_st_rejects_singular_points():
    # disc(f_st) vanishes at s = t = ... pick a root: s = -5/4 * 4^(1/5) is irrational, use t = 0 and 256 s^5 = -3125
    with pytest.raises(DomainError):
        germ_equiv_family_st(("-5/4*4^(1/5)", 0), (1, 1))


def _mp(x):
    return mpmath.mpf(x.numerator) / x.denominator


def test_numeric_eval_examples():
    r = numeric_eval("j", {"s": 5, "t": 10}, digits=60)
    assert r.relative_bound < mpmath.mpf("1e-45")
    with mpmath.workdps(80):
        ref = mpmath.mpf("64885555230888923802042419.48153967007069913589945011783")
        assert abs(r.value - ref) < mpmath.mpf("1e-28")
    exact = family_closed_forms("j", Fraction(5), Fraction(10)).value
    r0 = numeric_eval("j", {"s": 0, "t": 0}, digits=30)
    with mpmath.workdps(100):
        assert abs(r.value - _mp(exact)) <= r.error_bound
        assert abs(r0.value - 25 * (1440000 * 3628800) ** 2) <= r0.error_bound
    assert abs(numeric_eval("l", {"s": 0, "t": 0}, digits=30).value) <= 0


def test_numeric_eval_indeterminate_denominator():
    with pytest.raises(Indeterminate):
        numeric_eval("j", {"s": "-5/4*4^(1/5)", "t": 0}, digits=30)
    with pytest.raises(DomainError):
        numeric_eval("j", {"s": 1, "t": 1}, digits=10)


def test_exact_and_numeric_paths_agree_on_a_grid():
    vals = [Fraction(k, 3) for k in range(-5, 5)]
    for s in vals[::3]:
        for t in vals:
            if family_closed_forms("disc_fst", s, t).num == 0:
                continue
            for name in ("j", "k", "l"):
                exact = family_closed_forms(name, s, t).value
                r = numeric_eval(name, {"s": s, "t": t}, digits=30)
                with mpmath.workdps(100):
                    assert abs(r.value - _mp(exact)) <= r.error_bound


def test_parse_scalar():
    assert parse_scalar("3/4 + 1") == Fraction(7, 4)
    assert parse_scalar("0.25") == Fraction(1, 4)
    assert parse_scalar("2^(1/2)") == "2^(1/2)"
    with pytest.raises(DomainError):
        parse_scalar("2 +")
