from fractions import Fraction

import pytest

import oracles
from conftest import random_form, random_map
from curvex.binform import (
    BinaryForm,
    DomainError,
    LinearMap2,
    act,
    common_factor_degree,
    discriminant,
    from_roots,
    hessian,
    is_square_free,
    resultant,
    transvectant,
)
from curvex.families import f_st, f_t
from curvex.ratpoly import symbols


def test_binomial_accessor():
    q = BinaryForm.from_binomial([1, 2, 3, 4, 5])
    assert q.coeffs == (1, 8, 18, 16, 5)
    assert [q.a(i) for i in range(5)] == [1, 2, 3, 4, 5]


def test_from_poly_rejects_inhomogeneous():
    z, w = symbols("z w")
    with pytest.raises(DomainError):
        BinaryForm.from_poly(z ** 2 + w ** 3)
    assert BinaryForm.from_poly(z ** 2 * w + w ** 3).coeffs == (1, 0, 1, 0)


def test_transvectant_matches_oracle(rng):
    for n, m, r in [(3, 3, 2), (4, 4, 4), (5, 5, 3), (4, 2, 2), (6, 6, 6)]:
        p, s = random_form(rng, n, square_free=False), random_form(rng, m, square_free=False)
        assert list(transvectant(p, s, r).coeffs) == oracles.transvectant(p.coeffs, s.coeffs, r)


def test_transvectant_order_beyond_degree_is_rejected():
    q = f_t(5, 2)
    with pytest.raises(DomainError):
        transvectant(q, q, 6)


def test_hessian_matches_oracle(rng):
    for n in (3, 4, 5, 6):
        q = random_form(rng, n, square_free=False)
        assert list(hessian(q).coeffs) == oracles.hessian(q.coeffs)


def test_resultant_matches_oracle(rng):
    for n, m in [(2, 3), (4, 3), (5, 4), (3, 3)]:
        p, s = random_form(rng, n, square_free=False), random_form(rng, m, square_free=False)
        assert resultant(p, s) == oracles.resultant(p.coeffs, s.coeffs)


def test_discriminant_matches_root_product_oracle(rng):
    for n in range(2, 9):
        for _ in range(3):
            q = random_form(rng, n, square_free=False)
            assert discriminant(q) == oracles.discriminant(q.coeffs)


def test_discriminant_with_vanishing_leading_coefficient(rng):
    # lead coefficient zero forces the universal polynomial (n <= 6) or a shear (n > 6)
    for n in (4, 5, 7, 8):
        q = random_form(rng, n, square_free=False)
        q = BinaryForm(list(q.coeffs[:-1]) + [0])
        shear = LinearMap2(1, 0, 1, 1)
        assert discriminant(q) == discriminant(act(shear, q))


def test_discriminant_relative_invariance(rng):
    for n in (3, 4, 5, 6):
        q = random_form(rng, n)
        c = random_map(rng)
        # q_C(v) = q(C v) has disc(q_C) = det(C)^(n(n-1)) disc(q)
        assert discriminant(act(c.inverse(), q)) == c.det ** (n * (n - 1)) * discriminant(q)


def test_square_free_detection():
    assert is_square_free(from_roots([(1, 1), (2, 1), (3, 1)]))
    repeated = from_roots([(1, 1), (1, 1), (3, 1)])
    assert not is_square_free(repeated)
    assert discriminant(repeated) == 0
    assert common_factor_degree(repeated, repeated.dz()) == 1


def test_act_is_an_action(rng):
    q = random_form(rng, 5)
    a, b = random_map(rng), random_map(rng)
    assert act(a, act(b, q)) == act(a @ b, q)
    assert act(LinearMap2.identity(), q) == q


def test_even_degree_sign_flip_maps_f_t_to_f_minus_t():
    flip = LinearMap2(-1, 0, 0, 1)
    for n in (4, 6, 8):
        assert act(flip, f_t(n, 3)) == f_t(n, -3)


def test_symbolic_discriminant_of_f_t_family():
    t = symbols("t")
    for n in range(4, 9):
        expected = (Fraction(1 - n) ** (n - 1) * t ** n + n ** n) * Fraction(1, n ** n)
        assert discriminant(f_t(n, t)) == expected


def test_resultant_identity_for_f_t():
    t = symbols("t")
    for n in range(4, 9):
        q = f_t(n, t)
        assert resultant(q, q.dz()) == (1 - n) ** (n - 1) * t ** n + n ** n


def test_discriminant_of_f_st_at_origin_is_one():
    assert discriminant(f_st(0, 0)) == 1


def test_evaluate_and_arithmetic():
    q = BinaryForm([1, 0, 1])
    assert q.evaluate(2, 3) == 1 * 9 + 4
    assert (q * q).coeffs == (1, 0, 2, 0, 1)
    with pytest.raises(DomainError):
        q + BinaryForm([1, 1])
