import random
from fractions import Fraction

from heptalift.exactnum import (
    BigFloat,
    LaurentPoly,
    SpecialValue,
    TruncSeries,
    bernoulli,
    frac_parse,
    frac_str,
    gamma_half_special,
    poly_mul_int,
    ratfun_expand,
    rational_reconstruct,
    zeta_even_pi_coeff,
    zeta_special,
)


def rand_laurent(rng, var="X", nterms=4, erange=(-4, 4), crange=(-9, 9)):
    c = {}
    for _ in range(rng.randint(0, nterms)):
        c[rng.randint(*erange)] = Fraction(rng.randint(*crange), rng.randint(1, 5))
    return LaurentPoly(var, c)


def test_geometric_series_expansion():
    # 1/((1-t)(1-2t)) has closed form sum (2^(n+1)-1) t^n
    s = ratfun_expand(1, [{0: 1, 1: -1}, {0: 1, 1: -2}], 2)
    assert s.a == [1, 3, 7]
    s = ratfun_expand(1, [{0: 1, 1: -1}, {0: 1, 1: -2}], 8)
    assert s.a == [2 ** (n + 1) - 1 for n in range(9)]


def test_expand_with_numerator():
    s = ratfun_expand({0: 1, 1: 1}, [{0: 1, 1: -1}], 2)
    assert s.a == [1, 2, 2]


def test_expand_roundtrip_random():
    rng = random.Random(7)
    for _ in range(200):
        num = {i: rng.randint(-5, 5) for i in range(rng.randint(1, 3))}
        dens = []
        for _ in range(rng.randint(1, 3)):
            d = {0: rng.choice([1, -1, 2])}
            for i in range(1, rng.randint(1, 3) + 1):
                d[i] = rng.randint(-3, 3)
            dens.append(d)
        M = 7
        s = ratfun_expand(num, dens, M)
        back = TruncSeries.from_poly(num, "t", M)
        prod = s
        for d in dens:
            prod = prod * TruncSeries.from_poly(d, "t", M)
        assert prod == back


def test_laurent_ring_axioms():
    rng = random.Random(11)
    for _ in range(300):
        a, b, c = (rand_laurent(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0


def test_laurent_inverse_substitution():
    f = LaurentPoly("X", {-2: 3, 0: 1, 5: Fraction(1, 2)})
    g = f.subst_inverse()
    assert g.c == {2: 3, 0: 1, -5: Fraction(1, 2)}
    assert g.subst_inverse() == f


def test_laurent_exact_division():
    X = LaurentPoly.gen("X")
    f = (1 - X) * (1 + 3 * X + X ** 2)
    q = f.divide_exact(1 - X)
    assert q == 1 + 3 * X + X ** 2
    # Laurent shifts divide out too
    fs = f.shift(-3)
    assert fs.divide_exact((1 - X).shift(-1)) == (1 + 3 * X + X ** 2).shift(-2)
    try:
        (1 + X).divide_exact(1 - X)
        assert False, "expected inexact division to raise"
    except ArithmeticError:
        pass


def test_series_inverse_roundtrip():
    rng = random.Random(13)
    for _ in range(100):
        coeffs = [rng.choice([1, -1, 2, Fraction(1, 3)])] + [
            Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(6)
        ]
        s = TruncSeries("t", 6, coeffs)
        one = TruncSeries.const(1, "t", 6)
        assert s * s.inverse() == one


def test_bernoulli_classical_values():
    expected = {
        0: Fraction(1),
        1: Fraction(-1, 2),
        2: Fraction(1, 6),
        4: Fraction(-1, 30),
        6: Fraction(1, 42),
        8: Fraction(-1, 30),
        10: Fraction(5, 66),
        12: Fraction(-691, 2730),
    }
    for n, v in expected.items():
        assert bernoulli(n) == v
    assert bernoulli(3) == 0 and bernoulli(7) == 0


def test_even_zeta_values():
    assert zeta_even_pi_coeff(2) == Fraction(1, 6)
    assert zeta_even_pi_coeff(6) == Fraction(1, 945)
    assert zeta_even_pi_coeff(8) == Fraction(1, 9450)
    assert zeta_even_pi_coeff(12) == Fraction(691, 638512875)
    assert zeta_even_pi_coeff(10) == Fraction(1, 93555)


def test_special_value_products():
    z2z6 = zeta_special(2) * zeta_special(6)
    c, h = z2z6.as_rational_pi_power()
    assert (c, h) == (Fraction(1, 5670), 16)  # pi^8 / (2 * 3^4 * 5 * 7)

    v = zeta_special(5) * zeta_special(9)
    assert not v.is_zero()
    w = v / zeta_special(5)
    assert w == zeta_special(9)

    a = SpecialValue.rational(Fraction(2, 3)) * SpecialValue.pi_half_power(-3)
    b = SpecialValue.pi_half_power(-3) * SpecialValue.rational(Fraction(2, 3))
    assert a == b
    assert a.serialize() == [{"coeff": "2/3", "pi_half_power": -3, "symbols": {}}]


def test_gamma_half_values():
    assert gamma_half_special(2) == SpecialValue.rational(1)       # Gamma(1)
    assert gamma_half_special(8) == SpecialValue.rational(6)       # Gamma(4)
    assert gamma_half_special(1) == SpecialValue.pi_half_power(1)  # sqrt(pi)
    assert gamma_half_special(5) == SpecialValue.pi_half_power(1, Fraction(3, 4))
    assert gamma_half_special(9) == SpecialValue.pi_half_power(1, Fraction(105, 16))


def test_rational_reconstruct():
    assert rational_reconstruct("0.333333333333", Fraction(1, 10 ** 10)) == Fraction(1, 3)
    assert rational_reconstruct("0.141592653589", Fraction(1, 10 ** 10), 10 ** 3) is None
    rng = random.Random(17)
    for _ in range(200):
        q = Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 6))
        dec = f"{q.numerator * 10 ** 30 // q.denominator}"
        x = Fraction(int(dec), 10 ** 30)
        got = rational_reconstruct(x, Fraction(1, 10 ** 25), 10 ** 7)
        assert got == q


def test_frac_serialization_roundtrip():
    for q in [Fraction(3), Fraction(-7, 2), Fraction(0), Fraction(691, 32768)]:
        assert frac_parse(frac_str(q)) == q


def test_poly_mul_int_against_naive():
    rng = random.Random(23)
    for _ in range(60):
        a = [rng.randint(-10 ** 12, 10 ** 12) for _ in range(rng.randint(1, 40))]
        b = [rng.randint(-10 ** 12, 10 ** 12) for _ in range(rng.randint(1, 40))]
        naive = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                naive[i + j] += x * y
        assert poly_mul_int(a, b) == naive
        k = rng.randint(1, len(naive))
        assert poly_mul_int(a, b, trunc=k) == naive[:k]


def test_bigfloat_error_tracking():
    import mpmath

    with mpmath.workdps(40):
        a = BigFloat.exact(Fraction(1, 3))
        b = BigFloat.exact(Fraction(2, 7))
        c = a * b + a
        assert abs(c.value - (mpmath.mpf(1) / 3 * 2 / 7 + mpmath.mpf(1) / 3)) < mpmath.mpf(10) ** -35
        assert c.err < mpmath.mpf(10) ** -30
        assert c.digits() > 30
