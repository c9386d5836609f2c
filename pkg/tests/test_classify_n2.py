import random
from fractions import Fraction

import pytest

from solvlie import catalog, labels
from solvlie.classify_n2 import classify_n2
from solvlie.catalog import build, build_tensor, scramble_tensor, tensor_from_brackets
from solvlie.errors import NotInClass
from solvlie.harness import corpus_labels, expected_key
from solvlie.labels import ClassLabel
from solvlie.liealg import LieAlgebra, StructureTensor, validate


def test_two_step_nilpotent_regime():
    t = tensor_from_brackets(6, [(1, 2, {5: 1}), (3, 4, {6: 1})])
    c = classify_n2(LieAlgebra(t))
    assert c.label.family == labels.TWO_STEP_NILPOTENT
    assert c.witness.canonical is None


def test_aff_c_and_chain_examples():
    c = classify_n2(LieAlgebra(catalog.aff_c()))
    assert c.label.family == labels.G4_2_4_AFFC and c.label.abelian_ext == 0
    t = tensor_from_brackets(
        7, [(3, 1, {2: 1}), (3, 4, {1: 1}), (4, 5, {2: 1}), (6, 7, {2: 1})]
    )
    c = classify_n2(LieAlgebra(t))
    assert c.label.family == labels.G5P2K_2 and c.label.k == 1 and c.label.abelian_ext == 0


def test_not_in_class_reasons():
    sl2 = tensor_from_brackets(3, [(1, 2, {2: 2}), (1, 3, {3: -2}), (2, 3, {1: 1})])
    with pytest.raises(NotInClass) as exc:
        classify_n2(LieAlgebra(sl2))
    assert exc.value.reason == "NotSolvable"
    with pytest.raises(NotInClass) as exc:
        classify_n2(LieAlgebra(catalog.heisenberg(2)))
    assert exc.value.reason == "DerivedDimNot2"
    bad = StructureTensor(3, {(0, 1): (1, 0, 0), (0, 2): (0, 1, 0)})
    with pytest.raises(NotInClass) as exc:
        classify_n2(bad)
    assert exc.value.reason == "JacobiFails"


def test_nonsingular_pipeline_examples():
    # diag(2, -2) scales to diag(1, -1)
    t = tensor_from_brackets(3, [(3, 1, {1: 2}), (3, 2, {2: -2})])
    c = classify_n2(LieAlgebra(t))
    assert c.label.family == labels.G3_2_1 and c.label.lam == -1
    # jordan shape with junk brackets toward the abelian tail
    t = tensor_from_brackets(
        5,
        [(3, 1, {1: 3}), (3, 2, {1: 3, 2: 3}), (3, 4, {1: 7, 2: -2}), (3, 5, {1: 1, 2: 1})],
    )
    assert validate(t).ok
    c = classify_n2(LieAlgebra(t))
    assert c.label.family == labels.G3_2_2 and c.label.abelian_ext == 2
    # pure quarter turn
    t = tensor_from_brackets(3, [(3, 1, {2: 5}), (3, 2, {1: -5})])
    c = classify_n2(LieAlgebra(t))
    assert c.label.family == labels.G3_2_3 and c.label.j == 0


def test_adjoint_line_renumbering_inside_pipeline():
    # take the projector family and hide the acting vector at position 5
    base = build_tensor(ClassLabel(labels.G4_2_1, abelian_ext=1))
    # swap X3 and X5 so the pipeline has to renumber, then perturb X5 by X3
    order = [0, 1, 4, 3, 2]
    perm = base.permute(order)
    c = classify_n2(perm)
    assert c.label.family == labels.G4_2_1 and c.label.abelian_ext == 1


def test_singular_pipeline_examples():
    t = tensor_from_brackets(4, [(3, 1, {1: 1}), (3, 4, {2: 1})])
    assert classify_n2(LieAlgebra(t)).label.family == labels.G4_2_1
    t = tensor_from_brackets(4, [(3, 2, {1: 1}), (3, 4, {2: 1})])
    assert classify_n2(LieAlgebra(t)).label.family == labels.G4_2_2
    t = tensor_from_brackets(7, [(3, 1, {1: 1}), (4, 5, {2: 1})])
    c = classify_n2(LieAlgebra(t))
    assert c.label.family == labels.AFFR_PLUS_HEIS and c.label.m == 1
    assert c.label.abelian_ext == 2


def test_commuting_pair_pipeline_examples():
    t = tensor_from_brackets(4, [(3, 1, {1: 1}), (4, 2, {2: 1})])
    assert classify_n2(LieAlgebra(t)).label.family == labels.AFFR_PLUS_AFFR
    # commuting upper-triangular pair with one common eigendirection
    t = tensor_from_brackets(
        4, [(3, 1, {1: 2}), (3, 2, {1: 3, 2: 2}), (4, 1, {1: 5}), (4, 2, {1: 1, 2: 5})]
    )
    assert validate(t).ok
    c = classify_n2(LieAlgebra(t))
    assert c.label.family == labels.G4_2_3 and c.label.lam == 0
    # complex eigenvalues with determinant 1
    t = tensor_from_brackets(
        5, [(3, 1, {1: 1, 2: 1}), (3, 2, {1: -2, 2: -1}), (4, 1, {1: 1}), (4, 2, {2: 1})]
    )
    c = classify_n2(LieAlgebra(t))
    assert c.label.family == labels.G4_2_4_AFFC and c.label.abelian_ext == 1


def test_jordan_pair_with_nonzero_parameter_is_decomposable():
    """The pair ([[0,1],[0,lam]], I) with lam != 0 is simultaneously
    diagonalizable, so those members coincide with the split family; only
    lam = 0 is a genuinely new class."""
    for lam in (1, -1, 2, Fraction(-3, 2)):
        c = classify_n2(build(ClassLabel(labels.G4_2_3, lam=Fraction(lam))))
        assert c.label.family == labels.AFFR_PLUS_AFFR
        # and an explicit exact witness certifies it
        w = c.witness
        moved = build_tensor(ClassLabel(labels.G4_2_3, lam=Fraction(lam))).transform(
            w.transform.matrix, w.transform.inverse
        )
        assert moved == w.canonical


def test_witness_soundness_on_scrambles():
    rng = random.Random(0)
    labs = [
        ClassLabel(labels.G3_2_1, lam=Fraction(5, 2)),
        ClassLabel(labels.G3_2_3, j=Fraction(1)),
        ClassLabel(labels.G5P2K_2, k=0, abelian_ext=1),
        ClassLabel(labels.G6P2K_2_2, k=1),
        ClassLabel(labels.AFFR_PLUS_HEIS, m=2),
        ClassLabel(labels.G4_2_4_AFFC),
    ]
    for lab in labs:
        t = build_tensor(lab)
        for seed in range(10):
            st, _ = scramble_tensor(t, rng.random())
            c = classify_n2(st)
            moved = st.transform(c.witness.transform.matrix, c.witness.transform.inverse)
            assert moved == c.witness.canonical
            assert moved == build_tensor(c.label)


def test_invariance_of_keys_under_scrambles():
    rng = random.Random(99)
    for lab in corpus_labels()[::7]:
        t = build_tensor(lab)
        want = expected_key(lab)
        for seed in range(8):
            st, _ = scramble_tensor(t, rng.random())
            assert classify_n2(st).label.key == want


def test_mutual_exclusivity_under_random_conjugation():
    """Canonical tensors of distinct class keys are never connected by a
    random basis change."""
    rng = random.Random(123)
    labs = [
        ClassLabel(labels.G4_2_1),
        ClassLabel(labels.G4_2_2),
        ClassLabel(labels.G4_2_3, lam=Fraction(0)),
        ClassLabel(labels.G4_2_4_AFFC),
        ClassLabel(labels.AFFR_PLUS_AFFR),
        ClassLabel(labels.G3_2_1, lam=Fraction(2), abelian_ext=1),
        ClassLabel(labels.G3_2_2, abelian_ext=1),
        ClassLabel(labels.G3_2_3, j=Fraction(2), abelian_ext=1),
    ]
    tensors = [build_tensor(lab) for lab in labs]
    attempts = 0
    while attempts < 500:
        i, j = rng.randrange(len(labs)), rng.randrange(len(labs))
        if i == j:
            continue
        st, _ = scramble_tensor(tensors[i], rng.random())
        assert st != tensors[j]
        attempts += 1


def test_dimension_bookkeeping():
    for lab in corpus_labels()[::5]:
        t = build_tensor(lab)
        c = classify_n2(t)
        core = build_tensor(
            ClassLabel(
                c.label.family,
                abelian_ext=0,
                lam=c.label.lam,
                j=c.label.j,
                cos_sign=c.label.cos_sign,
                k=c.label.k,
                m=c.label.m,
            )
        )
        assert core.n + c.label.abelian_ext == t.n
