"""One test per acceptance criterion.

Each test records a PASS/FAIL line in ``RESULTS``; conftest prints them in a
terminal summary section after the run.
"""

import random
from fractions import Fraction
from math import factorial

import mpmath
import pytest

import oracles
from conftest import random_form, random_map
from curvex.binform import act, discriminant, resultant, transvectant
from curvex.classical import (
    family_closed_forms,
    inv_J,
    inv_M,
    quartic_invariants,
    quintic_invariants,
    sextic_invariants,
    verify_i18_square,
)
from curvex.conjecture import (
    calibrate_sextics,
    certify_quartic_associated,
    check_connections,
    check_expressF,
    check_ft_associated,
    check_quartic_duality,
    check_sextic_invariants,
    counterexample_suite,
)
from curvex.equiv import equivalent_quintics, germ_equiv_family_st, germ_equiv_family_t
from curvex.families import bold_f_st, bold_f_t, f_st, f_t
from curvex.milnor import annihilator_check, associated_form, milnor_build, normal_form, proportional
from curvex.ratpoly import symbols

RESULTS = {}
SEED = 20240611


def record(k, ok, text):
    RESULTS[str(k)] = f"criterion {k:2d}  {'PASS' if ok else 'FAIL'}  {text}"
    print(RESULTS[str(k)])
    return ok


def test_criterion_01_discriminants():
    s, t = symbols("s t")
    ok = discriminant(f_st(s, t)) * 3125 == family_closed_forms("disc_fst", s, t).num
    for n in range(4, 9):
        d = family_closed_forms("disc_ft", t=t, n=n)
        ok = ok and discriminant(f_t(n, t)) * d.den == d.num
    assert record(1, ok, "disc(f_st) and disc(f_t), n = 4..8, exact in s, t")


def test_criterion_02_resultant():
    t = symbols("t")
    ok = all(resultant(f_t(n, t), f_t(n, t).dz()) == (1 - n) ** (n - 1) * t ** n + n ** n
             for n in range(4, 9))
    assert record(2, ok, "R(f_t, d f_t/dz) = (1-n)^(n-1) t^n + n^n, n = 4..8")


def test_criterion_03_transvectant_numerators():
    s, t = symbols("s t")
    q2 = f_st(s, t) * f_st(s, t)
    ok = transvectant(q2, q2, 10).scalar() == 57600 * factorial(10) * (125 - 3 * s * t * t)
    for n in (4, 6, 8):
        ok = ok and transvectant(f_t(n, t), f_t(n, t), n).scalar() == 2 * factorial(n) ** 2
    for n in (5, 7):
        p = f_t(n, t) * f_t(n, t)
        m = factorial(2 * n)
        ok = ok and transvectant(p, p, 2 * n).scalar() == 2 * m * (m - 2 * factorial(n) ** 2)
    assert record(3, ok, "order-10, order-n and order-2n transvectant constants")


def test_criterion_04_quintic_closed_forms():
    s, t = symbols("s t")
    inv = quintic_invariants(f_st(s, t))
    ok = inv.I12 * 10 ** 10 == family_closed_forms("I12", s, t).num
    for name, got in (("j", inv.J), ("k", inv.K), ("l", inv.L)):
        ok = ok and got.same_as(family_closed_forms(name, s, t))
    ok = ok and check_expressF().verified
    assert record(4, ok, "I12, j, k, l of f_st and the F identity, exact")


def test_criterion_05_associated_forms():
    ok = certify_quartic_associated() is None
    pts = [(Fraction(a), Fraction(b, 2)) for a in range(-3, 4) for b in range(-4, 5)]
    pts = [p for p in pts if family_closed_forms("disc_fst", *p).num != 0][:25]
    ok = ok and len(pts) == 25
    for s, t in pts:
        ok = ok and proportional(associated_form(f_st(s, t)).form, bold_f_st(s, t)) is not None
    for n in (5, 6, 7):
        for t in (1, 2, -1, 3, Fraction(1, 2)):
            ok = ok and proportional(associated_form(f_t(n, t)).form, bold_f_t(n, t)) is not None
    assert record(5, ok, "q_t certified in t; f_st at 25 points; f_t at 5 points for n = 5, 6, 7")


def test_criterion_06_quartic_duality():
    r = check_quartic_duality()
    ok = r.verified and r.details["symbolic_identity"] is True
    assert record(6, ok, "K(q^_t) = J(q_t) as rational functions of t")


@pytest.mark.xfail(strict=True, reason="the stated identity is off by (-1)^n; fails for n = 5")
def test_criterion_07_invark():
    r = check_ft_associated(ns=(5, 6))
    ok = all(d["invark_stated"] and d["M_affine"] for d in r.details.values())
    assert record(7, ok, f"invark for n = 5, 6 and M affine in t^n; counterexample {r.counterexample}")


def test_criterion_08_i18_square():
    rng = random.Random(SEED)
    forms = [random_form(rng, 5, -9, 9, square_free=False, rational=True) for _ in range(100)]
    ok = all(verify_i18_square(q).ok for q in forms)
    assert record(8, ok, "I18 right-hand side / 16 is a rational square on 100 quintics")


def test_criterion_09_milnor_engine():
    rng = random.Random(SEED)
    ok = True
    for n in range(4, 8):
        expected = list(range(1, n)) + list(range(n - 2, 0, -1))
        for _ in range(20):
            q = random_form(rng, n)
            alg = milnor_build(q)
            ok = ok and list(alg.hilbert) == expected and alg.dimension == (n - 1) ** 2
            ok = ok and oracles.hilbert_function(q.coeffs) == expected + [0]
            ok = ok and not any(normal_form(alg, q)) and annihilator_check(alg)
    assert record(9, ok, "Hilbert functions, rank oracle, Euler and socle for 80 forms, n = 4..7")


def test_criterion_10_sextic_calibration():
    cal = calibrate_sextics()
    ok = cal.accepted and not any(cal.residual.values())
    ok = ok and check_sextic_invariants(cal=cal.calibration).verified
    ok = ok and check_connections(cal=cal.calibration).verified
    assert record(10, ok, "calibration residual 0 on held-out grid; bold j, k, l and connections")


def test_criterion_11_equivalence_regression():
    v = germ_equiv_family_st((5, 10), ("15*5^(-4/5)", "10*5^(-3/5)"), digits=60)
    ok = v.equivalent and v.precision == 60
    ok = ok and all(g < mpmath.mpf("1e-40") for g in v.gaps.values()) and len(v.gaps) == 3
    rng = random.Random(SEED)
    agree = 0
    for i in range(50):
        t1 = Fraction(rng.randint(-20, 20), rng.randint(1, 6))
        t2 = t1 if i % 3 == 0 else Fraction(rng.randint(-20, 20), rng.randint(1, 6))
        got = germ_equiv_family_t(5, t1, t2).equivalent
        agree += got == equivalent_quintics(f_t(5, t1), f_t(5, t2)).equivalent
    ok = ok and agree == 50
    gaps = ", ".join(f"{k} {mpmath.nstr(g, 3)}" for k, g in v.gaps.items())
    assert record(11, ok, f"st regression at 60 digits (gaps {gaps}); t vs quintics 50/50")


def test_criterion_12_counterexamples():
    r = counterexample_suite(radius=30)
    h = r.details["h_t"]
    ok = r.verified and h["outcome"] in ("found", "exhausted")
    assert record(12, ok, f"f_t, g_t vanishing; h_t search outcome {h['outcome']} "
                          f"over {h['grid_size']} values")


def _invariants(q):
    n = q.degree
    out = [inv_J(q)]
    if n % 2 == 0:
        out.append(inv_M(q))
    if n == 4:
        qi = quartic_invariants(q)
        out += [qi.J, qi.K]
    elif n == 5:
        qi = quintic_invariants(q)
        out += [qi.J, qi.K, qi.L]
    elif n == 6:
        si = sextic_invariants(q)
        out += [si.J, si.K, si.L]
    return out


def test_criterion_13_invariance():
    rng = random.Random(SEED)
    ok = True
    for n in range(4, 8):
        for _ in range(50):
            q = random_form(rng, n, square_free=False)
            c = random_map(rng)
            for a, b in zip(_invariants(q), _invariants(act(c, q))):
                ok = ok and a.defined == b.defined and (not a.defined or a.same_as(b))
    assert record(13, ok, "absolute invariants fixed under 50 integer maps per degree 4..7")

