import random
from fractions import Fraction

import pytest

from solvlie.errors import DimensionMismatch, SingularInput
from solvlie.matrices import Mat, det, inverse
from solvlie.propsim import EXACT, NUMERIC, prop_similar, propsim_classify_gl2
from solvlie.scalars import QuadExt


def test_reflexive_trivial():
    a = Mat([[1, 2], [3, 4]])
    v = prop_similar(a, a)
    assert v.equivalent and v.c == 1 and v.verify(a, a)


def test_exact_scalar_multiple():
    v = prop_similar(Mat([[1, 0], [0, 2]]), Mat([[3, 0], [0, 6]]))
    assert v.equivalent and v.c == 3


def test_refuted_after_trace_match():
    # trace match forces c = 4/3, but then det(cA) = 32/9 != 3
    a, b = Mat([[1, 0], [0, 2]]), Mat([[1, 0], [0, 3]])
    assert Fraction(4, 3) * a.trace() == b.trace()
    assert Fraction(4, 3) ** 2 * det(a) == Fraction(32, 9) != det(b)
    assert not prop_similar(a, b).equivalent


def test_half_scale_with_swap():
    a, b = Mat([[1, 0], [0, 2]]), Mat([[1, 0], [0, Fraction(1, 2)]])
    v = prop_similar(a, b)
    assert v.equivalent and v.c == Fraction(1, 2)
    assert v.verify(a, b)


def test_nilpotent_pair_ignores_scale():
    a, b = Mat([[0, 5], [0, 0]]), Mat([[0, -3], [0, 0]])
    v = prop_similar(a, b)
    assert v.equivalent and v.c == 1 and v.verify(a, b)
    assert not prop_similar(a, Mat([[1, 0], [0, 0]])).equivalent
    assert not prop_similar(Mat([[1, 0], [0, 0]]), a).equivalent


def test_quadratic_extension_scale():
    # c^2 = 2 is forced; the verdict stays exact over Q(sqrt(2))
    a = Mat([[0, 2], [1, 0]])
    b = Mat([[0, 4], [1, 0]])
    v = prop_similar(a, b)
    assert v.equivalent and v.mode == EXACT
    assert v.c == QuadExt(0, 1, 2)
    assert v.verify(a, b)


def test_numeric_fallback_cube_root():
    a = Mat([[0, 0, 2], [1, 0, 0], [0, 1, 0]])  # char x^3 - 2
    b = Mat([[0, 0, 4], [1, 0, 0], [0, 1, 0]])  # char x^3 - 4, c = 2^(1/3)
    v = prop_similar(a, b)
    assert v.equivalent and v.mode == NUMERIC and v.witness is None
    v = prop_similar(a, Mat([[0, 0, 4], [1, 0, 0], [0, 1, 1]]))
    assert not v.equivalent


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        prop_similar(Mat.identity(2), Mat.identity(3))


def test_equivalence_relation_laws_on_random_pairs():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.choice((2, 3))
        a = Mat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        while True:
            p = Mat([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
            if det(p) != 0:
                break
        c = rng.choice((1, -1, 2, Fraction(1, 2), Fraction(-3, 2)))
        b = (inverse(p) @ a @ p).scale(c)
        v = prop_similar(a, b)
        assert v.equivalent, (a, b, c)
        if v.mode == EXACT:
            assert v.verify(a, b)
            # symmetry: the witness inverts
            back = prop_similar(b, a)
            assert back.equivalent
            if back.mode == EXACT:
                assert back.verify(b, a)
                assert back.c * v.c == 1 or a.is_zero()


def test_gl2_classification_examples():
    cls = propsim_classify_gl2(Mat([[2, 0], [0, 6]]))
    assert cls.family == "diag" and cls.lam == 3
    assert cls.j == Fraction(16, 3)  # tr^2/det of diag(2, 6) = 64/12
    cls = propsim_classify_gl2(Mat([[5, 1], [0, 5]]))
    assert cls.family == "jordan" and cls.j == 4
    cls = propsim_classify_gl2(Mat([[1, -1], [1, 1]]))
    assert cls.family == "rotation" and cls.j == 2 and cls.cos_sign == 1
    cls = propsim_classify_gl2(Mat([[0, -5], [5, 0]]))
    assert cls.family == "rotation" and cls.j == 0 and cls.cos_sign == 0
    with pytest.raises(SingularInput):
        propsim_classify_gl2(Mat([[1, 0], [0, 0]]))


def test_gl2_witness_identity():
    rng = random.Random(4)
    for _ in range(50):
        a = Mat([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        if det(a) == 0:
            continue
        cls = propsim_classify_gl2(a)
        assert (inverse(cls.cmat) @ a @ cls.cmat).scale(cls.c) == cls.rep


def test_j_is_a_class_invariant_and_never_splits_redundant_pairs():
    rng = random.Random(6)
    for _ in range(30):
        a = Mat([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        if det(a) == 0:
            continue
        while True:
            p = Mat([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
            if det(p) != 0:
                break
        c = rng.choice((1, -1, 2, Fraction(-1, 2)))
        b = (inverse(p) @ a @ p).scale(c)
        assert propsim_classify_gl2(a).j == propsim_classify_gl2(b).j
        assert propsim_classify_gl2(a).family == propsim_classify_gl2(b).family
    # j(diag(1, lam)) == j(diag(1, 1/lam)), and the classifier normalizes
    for lam in (Fraction(3), Fraction(-2), Fraction(5, 2)):
        c1 = propsim_classify_gl2(Mat([[1, 0], [0, lam]]))
        c2 = propsim_classify_gl2(Mat([[1, 0], [0, Fraction(1, 1) / lam]]))
        assert c1.j == c2.j and c1.lam == c2.lam
    # j(rotation(phi)) == j(rotation(pi - phi))
    c1 = propsim_classify_gl2(Mat([[1, -1], [1, 1]]))
    c2 = propsim_classify_gl2(Mat([[-1, -1], [1, -1]]))
    assert c1.j == c2.j and c1.cos_sign == -c2.cos_sign
    v = prop_similar(Mat([[1, -1], [1, 1]]), Mat([[-1, -1], [1, -1]]))
    assert v.equivalent and v.c == -1


def test_rotation_scale_in_quadratic_extension():
    # zero trace, determinant 2: the scale is 1/sqrt(2)
    cls = propsim_classify_gl2(Mat([[0, -2], [1, 0]]))
    assert cls.family == "rotation" and cls.j == 0
    assert isinstance(cls.c, QuadExt)
