"""Local density closed form: pinned values, scaling rules, Igusa check, mass."""

import random
from fractions import Fraction

import pytest

from heptalift.density import (
    MASS_CONSTANT,
    alpha_p,
    beta_exps,
    beta_p,
    constants,
    group_orders,
    igusa_lhs_coeff,
    igusa_rhs_coeff,
    igusa_verify,
    mass,
)
from heptalift.jordan import JordanElement, apply_word
from heptalift.padic import ElemDivisors


def frac_prod(p, ks):
    out = Fraction(1)
    for k in ks:
        out *= 1 - Fraction(1, p ** k)
    return out


def test_constants_values_and_invariants():
    for p in (2, 3, 5, 7):
        k = constants(p)
        assert k.c1 == frac_prod(p, (2, 6, 8, 12))
        assert k.c2 == frac_prod(p, (2, 4, 6, 8))
        assert k.c3 == frac_prod(p, (2, 4, 4, 6))
        assert k.delta == frac_prod(p, (2, 5, 6, 8, 9, 12))
        assert k.delta / k.c1 == frac_prod(p, (5, 9))
        # delta equals the F_p point-count density of the multiplier-1 group
        assert k.delta == Fraction(group_orders(p)[1], p ** 78)


def test_beta_pinned_values():
    for p in (2, 3, 5):
        k = constants(p)
        assert beta_exps(p, (0, 0, 0)) == k.c1
        assert beta_exps(p, (0, 0, 1)) == p * k.c2
        assert beta_exps(p, (0, 1, 2)) == p ** 11 * k.c3
        assert beta_exps(p, (0, 1, 1)) == p ** 10 * k.c2


def test_beta_scaling_rule():
    rng = random.Random(1)
    for _ in range(60):
        p = rng.choice([2, 3, 5])
        e = sorted(rng.randint(0, 4) for _ in range(3))
        bumped = tuple(a + 1 for a in e)
        assert beta_exps(p, bumped) == p ** 27 * beta_exps(p, e)


def test_beta_adjoint_rule():
    rng = random.Random(2)
    for _ in range(60):
        p = rng.choice([2, 3, 5])
        a1, a2, a3 = sorted(rng.randint(0, 4) for _ in range(3))
        adj = (a1 + a2, a1 + a3, a2 + a3)
        assert beta_exps(p, adj) == p ** (9 * (a1 + a2 + a3)) * beta_exps(p, (a1, a2, a3))


def test_beta_step_rule():
    for p in (2, 3, 5):
        for a2 in (1, 2, 3):
            for a3 in range(a2 + 1, a2 + 4):
                assert beta_exps(p, (0, a2, a3 + 1)) == p * beta_exps(p, (0, a2, a3))


def test_beta_rank3_orbit_interpretation():
    # delta_p (1 - 1/p) p^27 over the count of nonsingular elements mod p
    for p in (2, 3, 5, 7):
        k = constants(p)
        nonsingular = p ** 12 * (p - 1) * (p ** 5 - 1) * (p ** 9 - 1)
        assert k.delta * (1 - Fraction(1, p)) * p ** 27 / nonsingular == k.c1


def test_alpha_values():
    for p in (2, 3):
        k = constants(p)
        assert alpha_p(ElemDivisors(p, (0, 0, 0))) == frac_prod(p, (5, 9))
        assert alpha_p(ElemDivisors(p, (1, 1, 1))) == frac_prod(p, (5, 9))
        assert alpha_p(ElemDivisors(p, (0, 0, 1))) == p ** 9 * k.delta / (p * k.c2)


def test_igusa_low_coefficients():
    for p in (2, 3, 5):
        k = constants(p)
        assert igusa_lhs_coeff(p, 0) == 1 / k.c1 == igusa_rhs_coeff(p, 0)
        u1 = Fraction(1, p) + Fraction(1, p ** 5) + Fraction(1, p ** 9)
        assert igusa_rhs_coeff(p, 1) == u1 / k.c1
        assert igusa_lhs_coeff(p, 1) == 1 / (p * k.c2)
        assert igusa_lhs_coeff(p, 1) == igusa_rhs_coeff(p, 1)


def test_igusa_verify_deep():
    ok, rows = igusa_verify(2, 12)
    assert ok and len(rows) == 13
    assert all(r["equal"] for r in rows)
    assert igusa_verify(3, 8)[0]
    assert igusa_verify(5, 6)[0]


def test_group_orders():
    m, m1 = group_orders(2)
    expect = 2 ** 36
    for k in (12, 9, 8, 6, 5, 2, 1):
        expect *= 2 ** k - 1
    assert m == expect
    assert m1 == expect  # p - 1 = 1 at p = 2
    for p in (3, 5):
        m, m1 = group_orders(p)
        assert m == (p - 1) * m1
    assert group_orders(2, 2)[0] == 2 ** 79 * group_orders(2)[0]
    assert group_orders(3, 3)[1] == 3 ** (78 * 2) * group_orders(3)[1]


def test_mass_identity_element():
    assert mass(JordanElement.identity()) == MASS_CONSTANT
    assert MASS_CONSTANT == Fraction(691, 2 ** 15 * 3 ** 6 * 5 ** 2 * 7 ** 2 * 13)


def test_mass_scale_invariance():
    for m in (2, 3):
        assert mass(JordanElement.identity().scale(m)) == MASS_CONSTANT
    T = JordanElement.diag(1, 1, 2)
    for m in (2, 3):
        assert mass(T.scale(m)) == mass(T)


def test_mass_pinned_example():
    k = constants(2)
    expect = MASS_CONSTANT * 2 ** 9 * k.c1 / (2 * k.c2)
    assert mass(JordanElement.diag(1, 1, 2)) == expect
    assert expect == MASS_CONSTANT * 273


def test_mass_invariant_under_unit_words():
    # mass only sees the genus, so multiplier +-1 scrambles cannot move it
    from test_padic import unit_word

    rng = random.Random(3)
    T = JordanElement.diag(1, 2, 4)
    base = mass(T)
    for _ in range(10):
        S = apply_word(T, unit_word(rng, 4))
        if S.is_positive():
            assert mass(S) == base


def test_mass_rejects_indefinite():
    with pytest.raises(ValueError):
        mass(JordanElement.diag(1, -1, 1))
