"""Structure-constant Lie algebras: validation, basis change, series.

Basis indices are 0-based internally; human-facing output (validation
reports, JSON) is 1-based.  A structure tensor stores only pairs i < j with
a nonzero bracket vector; skew symmetry and bilinearity hold by
construction.  Subspaces are kept as reduced-echelon row lists, so subspace
equality is plain list equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import DimensionError, NonAbelianDerivedIdeal, SingularTransform
from .matrices import (
    Mat,
    Vec,
    inverse,
    rref,
    row_space,
    solve,
    vec_add,
    vec_is_zero,
    vec_scale,
)
from .scalars import Scalar, compact


class StructureTensor:
    """Skew-symmetric bracket table [X_i, X_j] = sum_k c_ijk X_k, i < j."""

    __slots__ = ("n", "brackets")

    def __init__(self, n: int, brackets: Mapping[tuple, Sequence[Scalar]]):
        if n < 1:
            raise DimensionError("dimension must be >= 1")
        self.n = n
        table = {}
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < n):
                raise DimensionError(f"bad bracket index pair ({i}, {j})")
            v = tuple(compact(x) for x in coeffs)
            if len(v) != n:
                raise DimensionError("bracket vector length mismatch")
            for x in v:
                if isinstance(x, float):
                    raise TypeError("float entry in structure tensor")
            if not vec_is_zero(v):
                table[(i, j)] = v
        self.brackets = table

    def items(self):
        return sorted(self.brackets.items())

    def bracket_basis(self, i: int, j: int) -> Vec:
        if i == j:
            return self.zero_vec()
        if i < j:
            return self.brackets.get((i, j), self.zero_vec())
        v = self.brackets.get((j, i))
        return self.zero_vec() if v is None else tuple(-x for x in v)

    def zero_vec(self) -> Vec:
        return (0,) * self.n

    def bracket(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vec:
        out: list = [0] * self.n
        for (i, j), c in self.brackets.items():
            s = u[i] * v[j] - u[j] * v[i]
            if s != 0:
                for k, ck in enumerate(c):
                    if ck != 0:
                        out[k] = out[k] + s * ck
        return tuple(out)

    def transform(self, t: Mat, tinv: Mat) -> "StructureTensor":
        """Tensor in the basis given by the columns of t."""
        n = self.n
        if t.shape != (n, n):
            raise DimensionError("transform size mismatch")
        cols = t.columns()
        out = {}
        for i in range(n):
            for j in range(i + 1, n):
                w = self.bracket(cols[i], cols[j])
                if not vec_is_zero(w):
                    out[(i, j)] = tinv.apply(w)
        return StructureTensor(n, out)

    def transform_sparse(self, repl: Mapping[int, Sequence[Scalar]],
                         inv_cols: Mapping[int, Sequence[Scalar]]) -> "StructureTensor":
        """Transform under a basis change differing from the identity only
        in the columns `repl`; `inv_cols` are the matching columns of the
        inverse.  Pairs of untouched vectors just get re-expressed, so the
        cost scales with the sparsity, not with n^3."""
        n = self.n
        touched = set(repl)

        def reexpress(w):
            extra = None
            for j, c in inv_cols.items():
                wj = w[j]
                if wj != 0:
                    if extra is None:
                        extra = [0] * n
                    for r, x in enumerate(c):
                        if x != 0:
                            extra[r] = extra[r] + wj * x
            if extra is None:
                return tuple(w)
            return tuple(
                (0 if r in touched else w[r]) + extra[r] for r in range(n)
            )

        out = {}
        for (i, j), vec in self.brackets.items():
            if i in touched or j in touched:
                continue
            w = reexpress(vec)
            if not vec_is_zero(w):
                out[(i, j)] = w
        basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        for i in sorted(touched):
            vi = repl[i]
            for j in range(n):
                if j == i or (j in touched and j < i):
                    continue
                vj = repl.get(j, basis[j])
                w = self.bracket(vi, vj)
                if vec_is_zero(w):
                    continue
                w = reexpress(w)
                if vec_is_zero(w):
                    continue
                if i < j:
                    out[(i, j)] = w
                else:
                    out[(j, i)] = tuple(-x for x in w)
        return StructureTensor(n, out)

    def permute(self, order: Sequence[int]) -> "StructureTensor":
        """Basis relabelling: new X_j is old X_{order[j]}."""
        n = self.n
        pos = [0] * n
        for newi, oldi in enumerate(order):
            pos[oldi] = newi
        out = {}
        for (a, b), vec in self.brackets.items():
            i, j = pos[a], pos[b]
            w = tuple(vec[order[r]] for r in range(n))
            if i < j:
                out[(i, j)] = w
            else:
                out[(j, i)] = tuple(-x for x in w)
        return StructureTensor(n, out)

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        if self.n != other.n:
            return False
        keys = set(self.brackets) | set(other.brackets)
        return all(self.bracket_basis(i, j) == other.bracket_basis(i, j) for i, j in keys)

    def __hash__(self):
        return hash((self.n, tuple(self.items())))

    def __repr__(self):
        parts = ", ".join(f"[{i + 1},{j + 1}]->{list(v)}" for (i, j), v in self.items())
        return f"StructureTensor(n={self.n}, {parts})"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    triple: Optional[tuple] = None  # 1-based (i, j, k) of the first failure
    residual: Optional[Vec] = None

    def __bool__(self):
        return self.ok


def validate(t: StructureTensor) -> ValidationReport:
    """Check the Jacobi identity on all basis triples; a violation is a
    value (first failing triple plus residual), not an exception."""
    n = t.n
    basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            bij = t.bracket_basis(i, j)
            if vec_is_zero(bij):
                bij = None
            for k in range(j + 1, n):
                r = t.zero_vec()
                if bij is not None:
                    r = vec_add(r, t.bracket(bij, basis[k]))
                bki = t.bracket_basis(k, i)
                if not vec_is_zero(bki):
                    r = vec_add(r, t.bracket(bki, basis[j]))
                bjk = t.bracket_basis(j, k)
                if not vec_is_zero(bjk):
                    r = vec_add(r, t.bracket(bjk, basis[i]))
                if not vec_is_zero(r):
                    return ValidationReport(False, (i + 1, j + 1, k + 1), r)
    return ValidationReport(True)


class BasisChange:
    """Invertible change of basis; columns are the new basis vectors in old
    coordinates.  The inverse is computed once and cached."""

    __slots__ = ("matrix", "inverse")

    def __init__(self, matrix: Mat):
        if not matrix.is_square:
            raise DimensionError("basis change must be square")
        try:
            self.inverse = inverse(matrix)
        except Exception as exc:
            raise SingularTransform(str(exc)) from exc
        self.matrix = matrix

    @staticmethod
    def identity(n: int) -> "BasisChange":
        return BasisChange(Mat.identity(n))

    def then(self, other: "BasisChange") -> "BasisChange":
        """First this change, then `other` expressed in the new basis."""
        return BasisChange(self.matrix @ other.matrix)

    def __repr__(self):
        return f"BasisChange({self.matrix!r})"


def span_rows(vectors: Sequence[Vec], n: int) -> list[Vec]:
    if not vectors:
        return []
    return row_space(Mat(list(vectors))) if any(not vec_is_zero(v) for v in vectors) else []


def bracket_span(t: StructureTensor, basis_a: Sequence[Vec], basis_b: Sequence[Vec]) -> list[Vec]:
    vecs = []
    for u in basis_a:
        for v in basis_b:
            w = t.bracket(u, v)
            if not vec_is_zero(w):
                vecs.append(w)
    return span_rows(vecs, t.n)


def standard_basis(n: int) -> list[Vec]:
    return [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]


def derived_series_t(t: StructureTensor) -> list[list[Vec]]:
    series = [span_rows(standard_basis(t.n), t.n)]
    for _ in range(t.n + 1):
        nxt = bracket_span(t, series[-1], series[-1])
        if len(nxt) == len(series[-1]):
            break
        series.append(nxt)
        if not nxt:
            break
    return series


def lower_central_series_t(t: StructureTensor) -> list[list[Vec]]:
    full = span_rows(standard_basis(t.n), t.n)
    series = [full]
    for _ in range(t.n + 1):
        nxt = bracket_span(t, full, series[-1])
        if len(nxt) == len(series[-1]):
            break
        series.append(nxt)
        if not nxt:
            break
    return series


def _ad_columns(t: StructureTensor) -> list[Mat]:
    """For each basis vector e_j, the matrix sending x to [x, e_j]."""
    n = t.n
    mats = []
    for j in range(n):
        cols = [t.bracket_basis(i, j) for i in range(n)]
        mats.append(Mat.from_columns(cols))
    return mats


def center_t(t: StructureTensor) -> list[Vec]:
    n = t.n
    stacked = []
    for m in _ad_columns(t):
        stacked.extend(m.data)
    from .matrices import kernel_basis

    kern = kernel_basis(Mat(stacked))
    return span_rows(kern, n)


def upper_central_dims_t(t: StructureTensor) -> list[int]:
    """Dimensions of the upper central series until it stabilizes."""
    n = t.n
    ads = _ad_columns(t)
    current: list[Vec] = []  # basis of C_k, starts at C_0 = 0
    dims = []
    from .matrices import kernel_basis

    for _ in range(n + 1):
        if len(current) == n:
            break
        if current:
            red, pivots = rref(Mat(current))
            rows, piv = red.data, pivots
        else:
            rows, piv = [], []
        stacked = []
        for m in ads:
            for i in range(n):
                row = [m[i, j] for j in range(n)]
                stacked.append(row)
        # reduce each [x, e_j] modulo C_k: drop components along pivot coords
        proj_rows = []
        for m in ads:
            cols = []
            for j in range(n):
                col = list(m.col(j))
                for rrow, p in zip(rows, piv):
                    if col[p] != 0:
                        c = col[p]
                        col = [a - c * b for a, b in zip(col, rrow)]
                cols.append(col)
            proj_rows.extend(Mat.from_columns(cols).data)
        kern = kernel_basis(Mat(proj_rows))
        nxt = span_rows(kern, n)
        if len(nxt) == len(current):
            break
        dims.append(len(nxt))
        current = nxt
    return dims


def adjoint_restriction(t: StructureTensor, x: Sequence[Scalar], sub_basis: Sequence[Vec]) -> Mat:
    """Matrix of ad_x restricted to the span of sub_basis, in that basis."""
    k = len(sub_basis)
    base = Mat.from_columns(list(sub_basis))
    cols = []
    for b in sub_basis:
        w = t.bracket(x, b)
        coords = solve(base, w)
        if coords is None:
            raise DimensionError("subspace is not invariant under ad_x")
        cols.append(coords)
    return Mat.from_columns(cols) if k else Mat([[0]])


def adjoint_algebra_t(t: StructureTensor, derived_basis: Optional[list[Vec]] = None):
    """Adjoint restriction algebra on the derived ideal.

    Returns (canonical basis of the span as matrices, dim, per-generator
    restrictions a_{X_i} for the standard basis).  Requires the derived
    ideal to be abelian.
    """
    g1 = derived_basis if derived_basis is not None else bracket_span(
        t, standard_basis(t.n), standard_basis(t.n)
    )
    k = len(g1)
    for a in range(k):
        for b in range(a + 1, k):
            if not vec_is_zero(t.bracket(g1[a], g1[b])):
                raise NonAbelianDerivedIdeal("derived ideal is not abelian")
    gens = []
    for i in range(t.n):
        e = tuple(1 if q == i else 0 for q in range(t.n))
        gens.append(adjoint_restriction(t, e, g1))
    if k == 0:
        return [], 0, gens
    flat = [[m[r, c] for r in range(k) for c in range(k)] for m in gens]
    rows = span_rows([tuple(f) for f in flat], k * k)
    mats = [Mat([row[r * k : (r + 1) * k] for r in range(k)]) for row in rows]
    return mats, len(mats), gens


class LieAlgebra:
    """Validated structure tensor with eagerly cached characteristic data.

    Values are immutable; every derived quantity is computed at
    construction, so instances are safe to share across threads.
    """

    __slots__ = (
        "tensor",
        "derived_series",
        "lower_central_series",
        "upper_central_dims",
        "center",
        "solvable",
        "nilpotent",
        "nilpotency_step",
    )

    def __init__(self, tensor: StructureTensor):
        self.tensor = tensor
        self.derived_series = derived_series_t(tensor)
        self.lower_central_series = lower_central_series_t(tensor)
        self.upper_central_dims = upper_central_dims_t(tensor)
        self.center = center_t(tensor)
        self.solvable = not self.derived_series[-1]
        self.nilpotent = not self.lower_central_series[-1]
        if self.nilpotent and len(self.lower_central_series) >= 2:
            self.nilpotency_step = len(self.lower_central_series) - 1
        else:
            self.nilpotency_step = None

    @property
    def dim(self) -> int:
        return self.tensor.n

    @property
    def derived_ideal(self) -> list[Vec]:
        return self.derived_series[1] if len(self.derived_series) > 1 else []

    def validate(self) -> ValidationReport:
        return validate(self.tensor)

    def bracket(self, u, v) -> Vec:
        return self.tensor.bracket(u, v)

    def change_basis(self, t: BasisChange) -> "LieAlgebra":
        if t.matrix.rows != self.dim:
            raise DimensionError("basis change dimension mismatch")
        return LieAlgebra(self.tensor.transform(t.matrix, t.inverse))

    def adjoint_algebra(self):
        mats, dim, _ = adjoint_algebra_t(self.tensor, self.derived_ideal)
        return mats, dim

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.tensor == other.tensor

    def __hash__(self):
        return hash(self.tensor)

    def __repr__(self):
        return f"LieAlgebra({self.tensor!r})"


def direct_sum(*tensors: StructureTensor) -> StructureTensor:
    """Direct sum with blocks in the given order."""
    n = sum(t.n for t in tensors)
    out = {}
    off = 0
    for t in tensors:
        for (i, j), v in t.brackets.items():
            vec: list = [0] * n
            for k, x in enumerate(v):
                vec[off + k] = x
            out[(off + i, off + j)] = tuple(vec)
        off += t.n
    return StructureTensor(n, out)


def abelian_tensor(n: int) -> StructureTensor:
    return StructureTensor(n, {})
