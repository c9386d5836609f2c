"""Normalization and isomorphism testing for solvable algebras whose
derived ideal is abelian of codimension 2, in the one-dimensional
adjoint-line regime.

The normalized data is either a splitting G = R + Ghat (decomposable
case), or the pair ([Z, Y] = X_{n-2}, a_Z = Abar) with Abar in one of the
two rank-(n-3) block shapes; two structure matrices give isomorphic
algebras exactly when they are proportionally similar, and the isomorphism
is materialized as a block matrix and checked by exact bracket transport.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ImpossibleBranch, NotInClass, ShapeMismatch, Unsupported
from .liealg import (
    BasisChange,
    LieAlgebra,
    StructureTensor,
    derived_series_t,
    validate,
    vec_is_zero,
)
from .matrices import Mat, inverse, kernel_basis, rank, row_space, rref, solve
from .propsim import EXACT, PropSimVerdict, prop_similar
from .scalars import exdiv

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class Codim2Form:
    """Outcome of the codimension-2 normalization.

    For the structure-matrix case the witness carries the input onto the
    basis (X_1..X_{n-2}, Y, Z) with abelian span(X_i), a_Y = 0,
    [Z, Y] = X_{n-2} and a_Z = a_bar of the recorded block shape.  For the
    decomposable case the last basis vector spans the split line and
    `inner` is the complementary (n-1)-dimensional algebra.
    """

    case: str  # "decomposable" | "structure_matrix"
    witness: BasisChange
    ambient_dim: int
    shape: Optional[str] = None  # "left" -> [A 0; 0 0], "right" -> [0 A; 0 0]
    a_inner: Optional[Mat] = None
    a_bar: Optional[Mat] = None
    inner: Optional[LieAlgebra] = None


def codim2_tensor(a_bar: Mat) -> StructureTensor:
    """Tensor on (X_1..X_{n-2}, Y, Z) with a_Z = a_bar, [Z, Y] = X_{n-2}."""
    k = a_bar.rows
    n = k + 2
    table = {}
    for j in range(k):
        col = a_bar.col(j)
        if not vec_is_zero(col):
            vec = [0] * n
            for i in range(k):
                vec[i] = -col[i]
            table[(j, n - 1)] = tuple(vec)  # [X_j, Z] = -a_bar e_j
    w = [0] * n
    w[k - 1] = -1
    table[(n - 2, n - 1)] = tuple(w)  # [Y, Z] = -X_{n-2}
    return StructureTensor(n, table)


class _Frame:
    """Accumulated basis change for the codim-2 pipeline."""

    def __init__(self, tensor: StructureTensor):
        self.t = tensor
        self.n = tensor.n
        self.total = Mat.identity(tensor.n)

    def apply(self, mat: Mat):
        inv = inverse(mat)
        self.t = self.t.transform(mat, inv)
        self.total = self.total @ mat

    def sub_vec(self, vec) -> tuple:
        if any(vec[i] != 0 for i in range(self.n - 2, self.n)):
            raise ImpossibleBranch("bracket left the derived ideal")
        return tuple(vec[: self.n - 2])

    def adjoint(self, i: int) -> Mat:
        cols = [self.sub_vec(self.t.bracket_basis(i, j)) for j in range(self.n - 2)]
        return Mat.from_columns(cols)


def _front_transform(rows: list, n: int) -> Mat:
    pivots = []
    for row in rows:
        for c, x in enumerate(row):
            if x != 0:
                pivots.append(c)
                break
    rest = [c for c in range(n) if c not in set(pivots)]
    cols = [list(r) for r in rows]
    for c in rest:
        v = [0] * n
        v[c] = 1
        cols.append(v)
    return Mat.from_columns(cols)


def normalize_codim2(a) -> Codim2Form:
    tensor = a.tensor if isinstance(a, LieAlgebra) else a
    rep = validate(tensor)
    if not rep.ok:
        raise NotInClass("JacobiFails", f"first failing triple {rep.triple}")
    series = derived_series_t(tensor)
    if series[-1]:
        raise NotInClass("NotSolvable")
    n = tensor.n
    if n < 4:
        raise NotInClass("DimensionTooSmall", "need n >= 4")
    g1 = series[1] if len(series) > 1 else []
    if len(g1) != n - 2:
        raise NotInClass("DerivedDimNotCodim2", f"dim of derived ideal is {len(g1)}")
    if len(series) > 2 and series[2]:
        raise NotInClass("DerivedNotAbelian")

    fr = _Frame(tensor)
    fr.apply(_front_transform(g1, n))
    k = n - 2

    a_y = fr.adjoint(n - 2)
    a_z = fr.adjoint(n - 1)
    flat = [tuple(m[r, c] for r in range(k) for c in range(k)) for m in (a_y, a_z)]
    nonzero = [f for f in flat if not vec_is_zero(f)]
    dim_a = len(rref(Mat(nonzero))[1]) if nonzero else 0
    if dim_a == 0:
        raise ImpossibleBranch("adjoint line cannot vanish when the derived ideal is large")
    if dim_a == 2:
        raise Unsupported("two-dimensional adjoint span on a codimension-2 derived ideal")

    if a_z.is_zero():
        swap = list(range(n))
        swap[n - 2], swap[n - 1] = swap[n - 1], swap[n - 2]
        fr.apply(Mat.from_columns([_unit(n, swap[j]) for j in range(n)]))
        a_y, a_z = fr.adjoint(n - 2), fr.adjoint(n - 1)
    if not a_y.is_zero():
        lead = next(
            (r, c) for r in range(k) for c in range(k) if a_z[r, c] != 0
        )
        y = exdiv(a_y[lead[0], lead[1]], a_z[lead[0], lead[1]])
        cols = [_unit(n, j) for j in range(n)]
        cols[n - 2][n - 1] = -y
        fr.apply(Mat.from_columns(cols))
        if not fr.adjoint(n - 2).is_zero():
            raise ImpossibleBranch("a_Y must vanish after the line correction")
        a_z = fr.adjoint(n - 1)

    w = fr.sub_vec(fr.t.bracket_basis(n - 1, n - 2))  # [Z, Y] in derived coords
    r = rank(a_z)
    if r < k - 1:
        raise ImpossibleBranch("rank of a_Z cannot drop below n - 3")

    if not vec_is_zero(w) and r == k:
        u = solve(a_z, w)
        cols = [_unit(n, j) for j in range(n)]
        for i in range(k):
            cols[n - 2][i] = -u[i]
        fr.apply(Mat.from_columns(cols))
        w = fr.sub_vec(fr.t.bracket_basis(n - 1, n - 2))
        if not vec_is_zero(w):
            raise ImpossibleBranch("[Z, Y] must vanish after the inverse correction")

    if vec_is_zero(w):
        # decomposable: move the split line (Y) to the last position
        order = list(range(n - 2)) + [n - 1, n - 2]
        fr.apply(Mat.from_columns([_unit(n, order[j]) for j in range(n)]))
        inner_table = {}
        for (i, j), vec in fr.t.brackets.items():
            if i >= n - 1 or j >= n - 1:
                if not vec_is_zero(vec):
                    raise ImpossibleBranch("split line must decouple")
                continue
            if vec[n - 1] != 0:
                raise ImpossibleBranch("split line must decouple")
            inner_table[(i, j)] = tuple(vec[: n - 1])
        inner = LieAlgebra(StructureTensor(n - 1, inner_table))
        return Codim2Form(
            case="decomposable",
            witness=BasisChange(fr.total),
            ambient_dim=n,
            inner=inner,
        )

    if r != k - 1:
        raise ImpossibleBranch("indecomposable case requires a singular a_Z")
    kvec = kernel_basis(a_z)[0]
    im_rows = row_space(a_z.transpose())
    im_mat = Mat.from_columns(im_rows) if im_rows else None
    in_im = solve(im_mat, kvec) is not None

    if not in_im:
        # B1: derived = Im + Ker; split [Z, Y] accordingly
        sys_cols = [a_z.col(j) for j in range(k)] + [kvec]
        sol = solve(Mat.from_columns(sys_cols), w)
        if sol is None:
            raise ImpossibleBranch("[Z, Y] must decompose along Im + Ker")
        u = sol[:k]
        vcoef = sol[k]
        if vcoef == 0:
            raise ImpossibleBranch("[Z, Y] cannot lie in the image here")
        vvec = tuple(vcoef * x for x in kvec)
        new_basis = [list(row) for row in im_rows] + [list(vvec)]
        cols = [vec + [0, 0] for vec in new_basis]
        step = [list(c) for c in cols]
        ycol = _unit(n, n - 2)
        for i in range(k):
            ycol[i] = -u[i]
        step.append(ycol)
        step.append(_unit(n, n - 1))
        fr.apply(Mat.from_columns(step))
        shape = LEFT
    else:
        # B2: kernel sits inside the image
        basis = [list(kvec)]
        for row in im_rows:
            cand = basis + [list(row)]
            if len(rref(Mat(cand))[1]) == len(cand):
                basis.append(list(row))
        if len(basis) != k - 1:
            raise ImpossibleBranch("image completion failed")
        basis.append(list(w))
        cols = [vec + [0, 0] for vec in basis]
        cols.append(_unit(n, n - 2))
        cols.append(_unit(n, n - 1))
        fr.apply(Mat.from_columns(cols))
        shape = RIGHT

    a_bar = fr.adjoint(n - 1)
    w = fr.sub_vec(fr.t.bracket_basis(n - 1, n - 2))
    want = tuple(1 if i == k - 1 else 0 for i in range(k))
    if w != want:
        raise ImpossibleBranch("[Z, Y] must be the last derived basis vector")
    if shape == LEFT:
        ok_shape = all(a_bar[i, k - 1] == 0 for i in range(k)) and all(
            a_bar[k - 1, j] == 0 for j in range(k)
        )
        a_in = Mat([[a_bar[i, j] for j in range(k - 1)] for i in range(k - 1)])
    else:
        ok_shape = all(a_bar[i, 0] == 0 for i in range(k)) and all(
            a_bar[k - 1, j] == 0 for j in range(k)
        )
        a_in = Mat([[a_bar[i, j + 1] for j in range(k - 1)] for i in range(k - 1)])
    from .matrices import det

    if not ok_shape or det(a_in) == 0:
        raise ImpossibleBranch(f"structure matrix is not in {shape} block shape")
    if fr.t != codim2_tensor(a_bar):
        raise ImpossibleBranch("normalized tensor does not match its structure matrix")
    return Codim2Form(
        case="structure_matrix",
        witness=BasisChange(fr.total),
        ambient_dim=n,
        shape=shape,
        a_inner=a_in,
        a_bar=a_bar,
    )


def _unit(n: int, i: int) -> list:
    v = [0] * n
    v[i] = 1
    return v


@dataclass(frozen=True)
class Codim2IsoVerdict:
    isomorphic: bool
    c: Optional[object] = None
    m_f: Optional[Mat] = None
    mode: str = EXACT


def codim2_isomorphic(f1: Codim2Form, f2: Codim2Form) -> Codim2IsoVerdict:
    """Isomorphism of two structure-matrix forms, with the block isomorphism
    matrix when the proportional-similarity witness is exact."""
    if f1.case != "structure_matrix" or f2.case != "structure_matrix":
        raise ShapeMismatch("isomorphism test needs structure-matrix forms")
    if f1.ambient_dim != f2.ambient_dim:
        raise ShapeMismatch("ambient dimensions differ")
    verdict: PropSimVerdict = prop_similar(f1.a_bar, f2.a_bar)
    if not verdict.equivalent:
        return Codim2IsoVerdict(False, mode=verdict.mode)
    if verdict.mode != EXACT:
        return Codim2IsoVerdict(True, c=None, m_f=None, mode=verdict.mode)
    m_f = _build_m_f(f1.a_bar, f2.a_bar, verdict.c, verdict.witness)
    return Codim2IsoVerdict(True, c=verdict.c, m_f=m_f, mode=EXACT)


def _build_m_f(a_bar: Mat, b_bar: Mat, c, cmat: Mat) -> Mat:
    """Assemble the isomorphism matrix diag(C, c, 1/c), correcting the
    derived block so it fixes X_{n-2} modulo the image and absorbing the
    leftover image part into the Y column."""
    k = a_bar.rows
    n = k + 2
    e_last = tuple(1 if i == k - 1 else 0 for i in range(k))
    img = cmat.apply(e_last)
    kappa = img[k - 1]
    if kappa == 0:
        raise ImpossibleBranch("similarity witness degenerates on X_{n-2}")
    cmat = cmat.scale(exdiv(1, kappa))
    img = cmat.apply(e_last)
    v = tuple(img[i] - e_last[i] for i in range(k))
    u = [0] * k
    if not vec_is_zero(v):
        sol = solve(b_bar, v)
        if sol is None:
            raise ImpossibleBranch("Y-column correction must lie in the image")
        u = [c * x for x in sol]
    rows = []
    for i in range(k):
        rows.append([cmat[i, j] for j in range(k)] + [u[i], 0])
    rows.append([0] * k + [c, 0])
    rows.append([0] * k + [0, exdiv(1, c)])
    m_f = Mat(rows)
    # exact bracket transport: the target tensor in the m_f basis is the source
    if codim2_tensor(b_bar).transform(m_f, inverse(m_f)) != codim2_tensor(a_bar):
        raise ImpossibleBranch("isomorphism matrix failed bracket transport")
    return m_f
