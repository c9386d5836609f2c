"""Constructors for every canonical family, regression fixtures, and the
deterministic basis scrambler used by the invariance harnesses."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import labels
from .errors import ParamOutOfDomain
from .labels import ClassLabel
from .liealg import (
    BasisChange,
    LieAlgebra,
    StructureTensor,
    abelian_tensor,
    direct_sum,
    validate,
)
from .matrices import Mat
from .scalars import Scalar, exdiv, scalar_sign, sqrt_exact


def tensor_from_brackets(n: int, brackets: Sequence[tuple]) -> StructureTensor:
    """Build a tensor from 1-based (i, j, coeffs) entries; i > j is allowed
    and handled by skew symmetry.  coeffs is a dict {index: value} or a
    full-length sequence."""
    table: dict = {}
    for i, j, coeffs in brackets:
        if i == j:
            raise ParamOutOfDomain("bracket of a vector with itself")
        if isinstance(coeffs, dict):
            vec = [0] * n
            for k, val in coeffs.items():
                vec[k - 1] = val
        else:
            vec = list(coeffs)
        sign = 1
        a, b = i - 1, j - 1
        if a > b:
            a, b = b, a
            sign = -1
        cur = list(table.get((a, b), [0] * n))
        for idx in range(n):
            cur[idx] = cur[idx] + sign * vec[idx]
        table[(a, b)] = tuple(cur)
    return StructureTensor(n, table)


def aff_r() -> StructureTensor:
    return tensor_from_brackets(2, [(1, 2, {2: 1})])


def aff_c() -> StructureTensor:
    return tensor_from_brackets(
        4,
        [
            (3, 1, {2: -1}),
            (3, 2, {1: 1}),
            (4, 1, {1: 1}),
            (4, 2, {2: 1}),
        ],
    )


def heisenberg(m: int) -> StructureTensor:
    if m < 1:
        raise ParamOutOfDomain("heisenberg needs m >= 1")
    n = 2 * m + 1
    return tensor_from_brackets(
        n, [(2 * l + 1, 2 * l + 2, {n: 1}) for l in range(m)]
    )


def g3_2_1(lam: Scalar) -> StructureTensor:
    if lam == 0:
        raise ParamOutOfDomain("lambda must be nonzero")
    return tensor_from_brackets(3, [(3, 1, {1: 1}), (3, 2, {2: lam})])


def g3_2_2() -> StructureTensor:
    return tensor_from_brackets(3, [(3, 1, {1: 1}), (3, 2, {1: 1, 2: 1})])


def g3_2_3(j: Fraction) -> StructureTensor:
    """Complex-rotation family, keyed by j = tr^2/det in [0, 4).

    The representative is rational: the quarter turn for j = 0, otherwise
    the companion-style matrix [[0, -j], [1, j]], which has the right key
    and a complex eigenvalue pair.
    """
    j = Fraction(j)
    if not (0 <= j < 4):
        raise ParamOutOfDomain("rotation key j must satisfy 0 <= j < 4")
    if j == 0:
        return tensor_from_brackets(3, [(3, 1, {2: 1}), (3, 2, {1: -1})])
    return tensor_from_brackets(3, [(3, 1, {2: 1}), (3, 2, {1: -j, 2: j})])


def g4_2_1() -> StructureTensor:
    return tensor_from_brackets(4, [(3, 1, {1: 1}), (3, 4, {2: 1})])


def g4_2_2() -> StructureTensor:
    return tensor_from_brackets(4, [(3, 2, {1: 1}), (3, 4, {2: 1})])


def g4_2_3(lam: Scalar) -> StructureTensor:
    return tensor_from_brackets(
        4,
        [
            (3, 2, {1: 1, 2: lam}),
            (4, 1, {1: 1}),
            (4, 2, {2: 1}),
        ],
    )


def g5p2k_2(k: int) -> StructureTensor:
    if k < 0:
        raise ParamOutOfDomain("k must be >= 0")
    n = 5 + 2 * k
    br = [(3, 1, {2: 1}), (3, 4, {1: 1})]
    br += [(4 + 2 * i, 5 + 2 * i, {2: 1}) for i in range(k + 1)]
    return tensor_from_brackets(n, br)


def g6p2k_2_1(k: int) -> StructureTensor:
    if k < 0:
        raise ParamOutOfDomain("k must be >= 0")
    n = 6 + 2 * k
    br = [(3, 1, {1: 1}), (3, 4, {2: 1})]
    br += [(5 + 2 * i, 6 + 2 * i, {2: 1}) for i in range(k + 1)]
    return tensor_from_brackets(n, br)


def g6p2k_2_2(k: int) -> StructureTensor:
    if k < 0:
        raise ParamOutOfDomain("k must be >= 0")
    n = 6 + 2 * k
    br = [(3, 1, {2: 1}), (3, 4, {1: 1})]
    br += [(5 + 2 * i, 6 + 2 * i, {2: 1}) for i in range(k + 1)]
    return tensor_from_brackets(n, br)


def aff_r_plus_aff_r() -> StructureTensor:
    return tensor_from_brackets(4, [(3, 1, {1: 1}), (4, 2, {2: 1})])


def aff_r_plus_heis(m: int) -> StructureTensor:
    if m < 1:
        raise ParamOutOfDomain("m must be >= 1")
    n = 3 + 2 * m
    br = [(3, 1, {1: 1})]
    br += [(4 + 2 * i, 5 + 2 * i, {2: 1}) for i in range(m)]
    return tensor_from_brackets(n, br)


def with_abelian_ext(t: StructureTensor, d: int) -> StructureTensor:
    if d < 0:
        raise ParamOutOfDomain("abelian extension dimension must be >= 0")
    if d == 0:
        return t
    return direct_sum(t, abelian_tensor(d))


def build(label: ClassLabel) -> LieAlgebra:
    """Canonical algebra of a class label; every label built here passes
    validate and classifies back to itself."""
    return LieAlgebra(build_tensor(label))


def build_tensor(label: ClassLabel) -> StructureTensor:
    fam = label.family
    if fam == labels.G3_2_1:
        core = g3_2_1(label.lam)
    elif fam == labels.G3_2_2:
        core = g3_2_2()
    elif fam == labels.G3_2_3:
        core = g3_2_3(label.j)
    elif fam == labels.G4_2_1:
        core = g4_2_1()
    elif fam == labels.G4_2_2:
        core = g4_2_2()
    elif fam == labels.G4_2_3:
        core = g4_2_3(label.lam if label.lam is not None else 0)
    elif fam == labels.G4_2_4_AFFC:
        core = aff_c()
    elif fam == labels.G5P2K_2:
        core = g5p2k_2(label.k)
    elif fam == labels.G6P2K_2_1:
        core = g6p2k_2_1(label.k)
    elif fam == labels.G6P2K_2_2:
        core = g6p2k_2_2(label.k)
    elif fam == labels.AFFR_PLUS_AFFR:
        core = aff_r_plus_aff_r()
    elif fam == labels.AFFR_PLUS_HEIS:
        core = aff_r_plus_heis(label.m)
    else:
        raise ParamOutOfDomain(f"no canonical tensor for family {fam}")
    return with_abelian_ext(core, label.abelian_ext)


def scramble_matrix(n: int, seed, steps: Optional[int] = None) -> Mat:
    """Deterministic pseudo-random integer matrix of determinant +-1: a
    product of elementary transvections (multipliers bounded by 4), swaps,
    and sign flips."""
    rng = random.Random(seed)
    if steps is None:
        steps = 2 * n + 2
    t = Mat.identity(n)
    for _ in range(steps):
        op = rng.randrange(4) if n > 1 else 3
        if op <= 1:
            i, j = rng.sample(range(n), 2)
            lam = rng.choice((-4, -3, -2, -1, 1, 2, 3, 4))
            e = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
            e[i][j] = lam
            t = t @ Mat(e)
        elif op == 2:
            i, j = rng.sample(range(n), 2)
            perm = list(range(n))
            perm[i], perm[j] = perm[j], perm[i]
            t = t @ Mat([[1 if perm[r] == c else 0 for c in range(n)] for r in range(n)])
        else:
            i = rng.randrange(n)
            e = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
            e[i][i] = -1
            t = t @ Mat(e)
    return t


def scramble(a: LieAlgebra, seed, steps: Optional[int] = None):
    """Scrambled copy plus the basis change that produced it."""
    bc = BasisChange(scramble_matrix(a.dim, seed, steps))
    return a.change_basis(bc), bc


def scramble_tensor(t: StructureTensor, seed, steps: Optional[int] = None):
    """Tensor-level scramble for bulk sweeps (skips cached series)."""
    bc = BasisChange(scramble_matrix(t.n, seed, steps))
    return t.transform(bc.matrix, bc.inverse), bc


def l6gamma(gamma: Scalar) -> StructureTensor:
    """Six-dimensional two-step nilpotent family with one parameter."""
    if gamma == 0:
        raise ParamOutOfDomain("gamma must be nonzero")
    return tensor_from_brackets(
        6,
        [
            (1, 3, {5: 1}),
            (1, 4, {6: 1}),
            (2, 3, {6: gamma}),
            (2, 4, {5: 1}),
        ],
    )


def morozov_transform_positive(gamma: Scalar) -> Mat:
    """The printed 6x6 change of basis splitting the gamma > 0 member into
    two Heisenberg blocks; exact over Q(sqrt(gamma))."""
    s = sqrt_exact(gamma)
    sinv = exdiv(1, s)
    return Mat(
        [
            [1, 0, 0, 1, 0, 0],
            [sinv, 0, 0, -sinv, 0, 0],
            [0, 1, 0, 0, 1, 0],
            [0, s, 0, 0, -s, 0],
            [0, 0, 2, 0, 0, 2],
            [0, 0, 2 * s, 0, 0, -2 * s],
        ]
    )


def morozov_transform_negative(gamma: Scalar) -> Mat:
    s = sqrt_exact(-gamma)
    entries = [s, -1, -1, s, -s, -gamma]
    return Mat([[entries[i] if i == j else 0 for j in range(6)] for i in range(6)])


@dataclass(frozen=True)
class MorozovReport:
    gamma: Scalar
    ok: bool
    detail: str


def morozov_check(gammas: Sequence[Scalar] = (1, 4, 2, -1, -3)) -> list[MorozovReport]:
    """Exact verification of the six-dimensional family normalizations.

    For gamma > 0 the printed transform must reduce the table to
    [e1,e2]=e3, [e4,e5]=e6 (two Heisenberg blocks); for gamma < 0 the
    diagonal transform must carry the table onto the gamma = -1 member.
    """
    out = []
    for gamma in gammas:
        t = l6gamma(gamma)
        if scalar_sign(gamma) > 0:
            bc = BasisChange(morozov_transform_positive(gamma))
            got = t.transform(bc.matrix, bc.inverse)
            want = direct_sum(heisenberg(1), heisenberg(1))
        else:
            bc = BasisChange(morozov_transform_negative(gamma))
            got = t.transform(bc.matrix, bc.inverse)
            want = l6gamma(-1)
        if got == want:
            out.append(MorozovReport(gamma, True, "exact"))
        else:
            out.append(MorozovReport(gamma, False, f"residual table {got!r}"))
    return out


def codim2_az_fixtures(lam: Fraction = Fraction(2)) -> list[tuple[str, Mat]]:
    """The five canonical rank-2 a_Z forms on a 3-dimensional derived
    ideal, as concrete rational instances (structure-basis shapes)."""
    rot = Mat([[1, -1, 0], [1, 1, 0], [0, 0, 0]])
    return [
        ("left_diag", Mat([[1, 0, 0], [0, lam, 0], [0, 0, 0]])),
        ("left_jordan", Mat([[1, 1, 0], [0, 1, 0], [0, 0, 0]])),
        ("left_rotation", rot),
        ("right_nilpotent", Mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])),
        ("right_mixed", Mat([[0, 0, 1], [0, 1, 0], [0, 0, 0]])),
    ]


def codim2_algebra(a_z: Mat, bracket_zy_index: Optional[int] = None) -> LieAlgebra:
    """Algebra on basis (X_1..X_k, Y, Z) with abelian span(X_i), a_Y = 0,
    a_Z = a_z, and [Z, Y] = X_k (or the given 1-based index)."""
    k = a_z.rows
    n = k + 2
    idx = k if bracket_zy_index is None else bracket_zy_index
    br = [(n, n - 1, {idx: 1})]
    for j in range(k):
        col = a_z.col(j)
        vec = [0] * n
        for i in range(k):
            vec[i] = col[i]
        br.append((n, j + 1, vec))
    t = tensor_from_brackets(n, br)
    assert validate(t).ok
    return LieAlgebra(t)
