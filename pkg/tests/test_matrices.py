import random
from fractions import Fraction

import pytest

from solvlie.errors import DimensionError, NonCommuting
from solvlie.matrices import (
    Mat,
    char_poly,
    common_eigenvector,
    det,
    eigendirections_2x2,
    inverse,
    kernel_basis,
    rank,
    row_space,
    solve,
    spectral_classify_2x2,
)
from solvlie.scalars import QuadExt


def test_char_poly_examples():
    # direct expansions
    assert char_poly(Mat([[1, 0], [0, 0]])) == [0, -1, 1]  # x^2 - x
    assert char_poly(Mat([[0, 1], [0, 0]])) == [0, 0, 1]  # x^2
    # singular 2x2 with trace t has characteristic polynomial x^2 - t x
    for m in (Mat([[3, 1], [6, 2]]), Mat([[2, 4], [1, 2]])):
        assert det(m) == 0
        t = m.trace()
        assert char_poly(m) == [0, -t, 1]


def test_char_poly_requires_square():
    with pytest.raises(DimensionError):
        char_poly(Mat([[1, 2, 3], [4, 5, 6]]))


def test_char_poly_conjugation_invariant():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.choice((2, 3, 4))
        m = Mat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        while True:
            p = Mat([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
            if det(p) != 0:
                break
        assert char_poly(inverse(p) @ m @ p) == char_poly(m)


def test_elimination_basics():
    a = Mat([[2, 4], [6, 9]])
    assert det(a) == -6
    assert inverse(a) @ a == Mat.identity(2)
    assert rank(Mat([[1, 2], [2, 4]])) == 1
    assert kernel_basis(Mat([[1, 2], [2, 4]])) == [(-2, 1)]
    assert row_space(Mat([[2, 4], [1, 2]])) == [(1, 2)]
    assert solve(Mat([[1, 1], [0, 1]]), (3, 2)) == (1, 2)
    assert solve(Mat([[1, 1], [1, 1]]), (0, 1)) is None


def test_spectral_classify_variants():
    sc = spectral_classify_2x2(Mat([[1, 0], [0, 3]]))
    assert sc.kind == "real_distinct" and (sc.mu1, sc.mu2) == (1, 3)
    sc = spectral_classify_2x2(Mat([[1, 1], [0, 1]]))
    assert sc.kind == "repeated_jordan" and sc.mu1 == 1
    sc = spectral_classify_2x2(Mat([[5, 0], [0, 5]]))
    assert sc.kind == "repeated_diagonalizable" and sc.mu1 == 5
    # roots of x^2 - 2x + 2 are 1 +- i by the quadratic formula
    sc = spectral_classify_2x2(Mat([[1, -1], [1, 1]]))
    assert sc.kind == "complex_pair" and sc.re == 1 and sc.im2 == 1
    # irrational eigenvalues land in a quadratic extension
    sc = spectral_classify_2x2(Mat([[0, 2], [1, 0]]))
    assert sc.mu1 == QuadExt(0, -1, 2) and sc.mu2 == QuadExt(0, 1, 2)


def test_spectral_classify_conjugation_invariant():
    rng = random.Random(3)
    for _ in range(40):
        m = Mat([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        while True:
            p = Mat([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
            if det(p) != 0:
                break
        a = spectral_classify_2x2(m)
        b = spectral_classify_2x2(inverse(p) @ m @ p)
        assert a.kind == b.kind
        assert (a.mu1, a.mu2, a.re, a.im2) == (b.mu1, b.mu2, b.re, b.im2)


def test_common_eigenvector_examples():
    assert common_eigenvector(Mat([[1, 0], [0, 0]]), Mat([[0, 0], [0, 1]])) == (1, 0)
    assert common_eigenvector(Mat([[0, 1], [0, 0]]), Mat.identity(2)) == (1, 0)
    assert common_eigenvector(Mat([[0, 1], [-1, 0]]), Mat.identity(2)) is None


def test_common_eigenvector_checks_commutation():
    with pytest.raises(NonCommuting):
        common_eigenvector(Mat([[1, 0], [0, 0]]), Mat([[0, 1], [0, 0]]))


def test_common_eigenvector_is_simultaneous():
    rng = random.Random(9)
    for _ in range(40):
        a = Mat([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        s, t = rng.randint(-2, 2), rng.randint(-2, 2)
        b = Mat.identity(2).scale(s) + a.scale(t)
        if spectral_classify_2x2(a).kind == "complex_pair":
            assert common_eigenvector(a, b) is None or t == 0
            continue
        if spectral_classify_2x2(b).kind == "complex_pair":
            continue
        v = common_eigenvector(a, b)
        assert v is not None
        for m in (a, b):
            w = m.apply(v)
            # w is proportional to v
            assert w[0] * v[1] == w[1] * v[0]


def test_eigendirections_cover_scalar_case():
    dirs = eigendirections_2x2(Mat.identity(2).scale(Fraction(7)))
    assert ((1, 0) in [d for _, d in dirs]) and ((0, 1) in [d for _, d in dirs])
