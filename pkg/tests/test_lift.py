"""Lift coefficients: eigen data, power sums, Fourier values, L-factors."""

import random
from fractions import Fraction

import pytest

from heptalift.jordan import JordanElement, apply_word
from heptalift.lift import (
    EigenData,
    eigen_delta,
    eigen_from_csv,
    eigen_from_rows,
    fourier_coeff,
    local_L_factors,
    local_factor,
    satake_power_sums,
    sym2_coeffs,
    sym3_coeffs,
    tau_table,
)
from heptalift.lift import _sym3_from

from test_padic import unit_word

TAU_FIRST_TEN = (1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920)


def sigma(n, e):
    return sum(d ** e for d in range(1, n + 1) if n % d == 0)


def test_tau_first_values():
    assert tau_table(10) == TAU_FIRST_TEN
    assert tau_table(1)[0] == 1


def test_tau_multiplicative_and_congruent():
    taus = tau_table(400)
    rng = random.Random(7)
    for _ in range(40):
        m = rng.randrange(2, 20)
        n = rng.randrange(2, 20)
        if any(m % p == 0 and n % p == 0 for p in (2, 3, 5, 7, 11, 13, 17, 19)):
            continue
        assert taus[m * n - 1] == taus[m - 1] * taus[n - 1]
    for n in range(1, 200):
        assert (taus[n - 1] - sigma(n, 11)) % 691 == 0


def test_tau_rejects():
    with pytest.raises(ValueError):
        tau_table(0)


def test_eigen_delta_and_bound():
    e = eigen_delta(50)
    assert e.k == 10
    assert e.a(2) == -24 and e.a(3) == 252 and e.a(47) == 2687348496
    for p, a in e.table.items():
        assert a * a <= 4 * p ** 11
    with pytest.raises(KeyError):
        e.a(53)
    bad = dict(e.table)
    bad[2] = 91
    with pytest.raises(ValueError):
        EigenData(10, bad)
    with pytest.raises(ValueError):
        EigenData(9, {})


def test_eigen_csv_roundtrip(tmp_path):
    path = tmp_path / "eigen.csv"
    path.write_text("p,a_p\n2,-24\n3,252\n5,4830\n")
    e = eigen_from_csv(str(path), 10)
    assert e.table == {2: -24, 3: 252, 5: 4830}
    bad = tmp_path / "bad.csv"
    bad.write_text("prime,value\n2,-24\n")
    with pytest.raises(ValueError):
        eigen_from_csv(str(bad), 10)


def test_satake_power_sums():
    ts = satake_power_sums(-24, 2, 10, 4)
    assert ts[0] == 2 and ts[1] == -24
    assert ts[2] == (-24) ** 2 - 2 * 2 ** 11
    taus = tau_table(100)
    for p in (2, 3, 5):
        full = satake_power_sums(taus[p - 1], p, 10, 8)
        q = p ** 11
        for j in range(1, 5):
            assert full[j] ** 2 == full[2 * j] + 2 * q ** j
    with pytest.raises(ValueError):
        satake_power_sums(1, 2, 10, -1)


def test_fourier_identity_and_rank_one_tower():
    e = eigen_delta(50)
    taus = tau_table(30)
    assert fourier_coeff(JordanElement.identity(), e) == 1
    for n in range(1, 25):
        a = fourier_coeff(JordanElement.diag(1, 1, n), e)
        assert isinstance(a, int)
        assert a == taus[n - 1]


def test_fourier_hecke_recurrence():
    e = eigen_delta(10)
    for p in (2, 3):
        tower = [fourier_coeff(JordanElement.diag(1, 1, p ** m), e) for m in range(6)]
        for m in range(1, 5):
            assert tower[m + 1] == e.a(p) * tower[m] - p ** 11 * tower[m - 1]


def test_fourier_genus_invariance():
    e = eigen_delta(10)
    rng = random.Random(2027)
    for base in ((1, 1, 2), (1, 2, 3), (1, 1, 12), (2, 3, 4)):
        T = JordanElement.diag(*base)
        want = fourier_coeff(T, e)
        for _ in range(6):
            S = apply_word(T, unit_word(rng, 5))
            if S.is_positive():
                assert fourier_coeff(S, e) == want


def test_fourier_rejects_indefinite():
    e = eigen_delta(10)
    with pytest.raises(ValueError):
        fourier_coeff(JordanElement.diag(1, 1, -1), e)


def test_local_factor_multiprime_split():
    e = eigen_delta(10)
    taus = tau_table(40)
    assert local_factor(2, (0, 0, 1), e) == taus[1]
    assert local_factor(2, (0, 0, 2), e) == taus[3]
    assert local_factor(3, (0, 0, 1), e) == taus[2]
    assert fourier_coeff(JordanElement.diag(1, 1, 36), e) == local_factor(
        2, (0, 0, 2), e
    ) * local_factor(3, (0, 0, 2), e)


def test_sym2_factor():
    assert sym2_coeffs(-24, 2, 10) == [
        Fraction(1),
        Fraction(23, 32),
        Fraction(-23, 32),
        Fraction(-1),
    ]
    # s1 = 3 is the unitary collapse point: the factor becomes (1 - u)^3
    a, p, k = 2, 2, 10
    s1 = Fraction(a * a, p ** (2 * k - 9)) - 1
    collapse = [Fraction(1), -s1, s1, Fraction(-1)]
    assert sym2_coeffs(a, p, k) == collapse


def test_sym3_factor():
    assert _sym3_from(2, 1) == [1, -4, 6, -4, 1]
    q = 2 ** 11
    got = sym3_coeffs(-24, 2, 10)
    a = -24
    assert got[1] == -(a ** 3 - 2 * q * a)
    assert got[4] == q ** 6
    assert got[3] == q ** 3 * got[1]


def test_std56_degree_count():
    L = local_L_factors(2, -24, 10)
    std = L["std56"]
    degree = (len(std["sym3"]) - 1) + sum(len(f) - 1 for _, f in std["block9"])
    degree += sum(len(f) - 1 for _, f in std["block17"])
    assert degree == 56
    assert [i for i, _ in std["block9"]] == list(range(-4, 5))
    assert [i for i, _ in std["block17"]] == list(range(-8, 9))
    shifted = dict(std["block9"])
    assert shifted[0] == [Fraction(1), Fraction(24), Fraction(2 ** 11)]
    assert shifted[1] == [Fraction(1), Fraction(24, 2), Fraction(2 ** 11, 4)]
