import random
from fractions import Fraction

import pytest

from heptalift.cayley import Octonion, QQ, ZZ, Zmod
from heptalift.jordan import (
    JordanElement,
    apply_gamma,
    apply_m,
    apply_perm,
    apply_theta,
    apply_word,
    word_multiplier,
)


def rand_oct(rng, ring=ZZ, bound=3):
    return Octonion(ring, [rng.randint(-bound, bound) for _ in range(8)])


def rand_jordan(rng, ring=ZZ, bound=3):
    return JordanElement(
        ring,
        rng.randint(-bound, bound), rng.randint(-bound, bound), rng.randint(-bound, bound),
        rand_oct(rng, ring, bound), rand_oct(rng, ring, bound), rand_oct(rng, ring, bound),
    )


def rand_word(rng, length, bound=2):
    word = []
    for _ in range(length):
        kind = rng.randrange(4)
        if kind == 0:
            word.append(("gamma", rng.choice([1, -1])))
        elif kind == 1:
            i = rng.randint(1, 3)
            j = rng.choice([t for t in (1, 2, 3) if t != i])
            word.append(("m", rand_oct(rng, bound=bound), i, j))
        elif kind == 2:
            word.append(("theta", tuple(rng.choice([1, -1]) for _ in range(3))))
        else:
            word.append(("perm", tuple(rng.sample([1, 2, 3], 3))))
    return word


def test_det_example():
    T = JordanElement(ZZ, 2, 2, 1, Octonion.basis(1), Octonion.zero(), Octonion.zero())
    assert T.det() == 3


def test_identity_element():
    I = JordanElement.identity()
    assert I.det() == 1
    assert I.inner(I) == 3
    assert I.adj() == I
    IQ = I.map_ring(QQ)
    assert IQ.circ(IQ) == IQ


def test_adjoint_identity():
    rng = random.Random(211)
    for _ in range(1000):
        X = rand_jordan(rng, bound=2)
        assert X.adj().adj() == X.scale(X.det())


def test_det_directional_derivative():
    rng = random.Random(223)
    for _ in range(1000):
        X, Y = rand_jordan(rng, bound=2), rand_jordan(rng, bound=2)
        d = X.det_expansion(Y)
        assert d[1] == X.adj().inner(Y)
        for t in (1, -1, 2):
            assert (X + Y.scale(t)).det() == d[0] + d[1] * t + d[2] * t * t + d[3] * t ** 3


def test_cross_is_polarized_adjoint():
    rng = random.Random(227)
    for _ in range(200):
        X, Y = rand_jordan(rng, QQ, 2), rand_jordan(rng, QQ, 2)
        assert X.cross(X) == X.adj()
        assert X.cross(Y) == Y.cross(X)
        two_cross = (X + Y).adj() - X.adj() - Y.adj()
        assert X.cross(Y).scale(2) == two_cross


def test_jordan_product_laws():
    rng = random.Random(229)
    I = JordanElement.identity(QQ)
    for _ in range(120):
        X, Y = rand_jordan(rng, QQ, 2), rand_jordan(rng, QQ, 2)
        assert X.circ(Y) == Y.circ(X)
        assert X.circ(I) == X
        # Jordan identity: (X o Y) o (X o X) = X o (Y o (X o X))
        X2 = X.circ(X)
        assert X.circ(Y).circ(X2) == X.circ(Y.circ(X2))
        # trace-form associativity
        Z = rand_jordan(rng, QQ, 2)
        assert X.circ(Y).inner(Z) == Y.inner(X.circ(Z))


def test_inner_matches_trace_of_circ():
    rng = random.Random(233)
    for _ in range(200):
        X, Y = rand_jordan(rng, QQ, 3), rand_jordan(rng, QQ, 3)
        assert X.inner(Y) == X.circ(Y).trace()


def test_circ_integrality_guard():
    X = JordanElement.diag(1, 0, 0)
    Y = JordanElement(ZZ, 0, 0, 0, Octonion.basis(0), Octonion.zero(), Octonion.zero())
    with pytest.raises(ArithmeticError):
        X.circ(Y)  # (X Y + Y X)/2 has a half-integral entry
    with pytest.raises(ZeroDivisionError):
        X.map_ring(Zmod(4)).circ(Y.map_ring(Zmod(4)))


def test_m_generator_diagonal_formula():
    rng = random.Random(239)
    for _ in range(100):
        a, b, c = (rng.randint(-9, 9) for _ in range(3))
        D = JordanElement.diag(a, b, c)
        xi = rand_oct(rng)
        assert apply_m(D, xi, 2, 1).a == a + b * xi.norm()
        assert apply_m(D, xi, 1, 2).b == b + a * xi.norm()
        assert apply_m(D, xi, 3, 2).b == b + c * xi.norm()


def test_perm_transpositions():
    rng = random.Random(241)
    for _ in range(50):
        X = rand_jordan(rng)
        s12 = apply_perm(X, (2, 1, 3))
        assert (s12.a, s12.b, s12.c) == (X.b, X.a, X.c)
        assert s12.x == X.x.conj() and s12.y == X.z and s12.z == X.y
        s23 = apply_perm(X, (1, 3, 2))
        assert (s23.a, s23.b, s23.c) == (X.a, X.c, X.b)
        assert s23.x == X.y and s23.y == X.x and s23.z == X.z.conj()
        assert apply_perm(apply_perm(X, (2, 1, 3)), (2, 1, 3)) == X


def test_generator_word_multipliers():
    rng = random.Random(251)
    for _ in range(1000):
        X = rand_jordan(rng, bound=2)
        word = rand_word(rng, rng.randint(1, 12))
        assert apply_word(X, word).det() == word_multiplier(word) * X.det()


def test_generators_preserve_inner_products_scaled():
    # m and perm preserve det; check they also keep integrality
    rng = random.Random(257)
    for _ in range(200):
        X = rand_jordan(rng, bound=2)
        Y = apply_m(X, rand_oct(rng, bound=2), 1, 3)
        assert all(isinstance(v, int) for v in Y.coords())


def test_positivity():
    rng = random.Random(263)
    assert JordanElement.identity().is_positive()
    assert not JordanElement.diag(1, 1, -1).is_positive()
    assert not JordanElement.diag(0, 1, 1).is_positive()
    assert not JordanElement.zero().is_positive()
    found = 0
    while found < 200:
        S = rand_jordan(rng, QQ, 2)
        if S.det() == 0:
            continue
        sq = S.circ(S)
        found += 1
        assert sq.is_positive(), S
        assert sq.scale(-1).is_positive() is False


def test_rank_classification_mod_p():
    R = Zmod(2)
    assert JordanElement.zero(R).rank_mod_p() == 0
    assert JordanElement.diag(1, 0, 0, R).rank_mod_p() == 1
    assert JordanElement.diag(1, 1, 0, R).rank_mod_p() == 2
    assert JordanElement.identity(R).rank_mod_p() == 3


def test_json_roundtrip():
    rng = random.Random(269)
    for _ in range(20):
        X = rand_jordan(rng)
        assert JordanElement.from_json(X.to_json()) == X
