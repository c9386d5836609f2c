"""Exact dense matrices over the rationals or a quadratic extension.

Everything is computed by exact elimination over the scalar field; a matrix
is invertible exactly when its determinant is nonzero, which is always
checked and never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, NonCommuting, SingularInput
from .scalars import ONE, ZERO, Scalar, compact, exdiv, scalar_sign, sqrt_exact

Vec = tuple


class Mat:
    """Immutable row-major matrix of exact scalars."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable[Scalar]]):
        self.data = tuple(tuple(row) for row in data)
        self.rows = len(self.data)
        if self.rows == 0:
            raise DimensionError("empty matrix")
        self.cols = len(self.data[0])
        if any(len(r) != self.cols for r in self.data):
            raise DimensionError("ragged rows")
        for row in self.data:
            for x in row:
                if isinstance(x, float):
                    raise TypeError("float entry leaked into an exact matrix")

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "Mat":
        return Mat([[0] * c for _ in range(r)])

    @staticmethod
    def from_columns(cols: Sequence[Sequence[Scalar]]) -> "Mat":
        n = len(cols[0])
        return Mat([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> Vec:
        return self.data[i]

    def col(self, j: int) -> Vec:
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        return all(
            self.data[i][j] == other.data[i][j]
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def __hash__(self):
        return hash(self.data)

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(
            [
                [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(
            [
                [self.data[i][j] - other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __neg__(self) -> "Mat":
        return self.scale(-1)

    def scale(self, c: Scalar) -> "Mat":
        return Mat([[c * x for x in row] for row in self.data])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise DimensionError(f"{self.shape} @ {other.shape}")
        ocols = other.cols
        out = []
        for i in range(self.rows):
            ri = self.data[i]
            out.append(
                [
                    sum(ri[k] * other.data[k][j] for k in range(self.cols))
                    for j in range(ocols)
                ]
            )
        return Mat(out)

    def apply(self, v: Sequence[Scalar]) -> Vec:
        if len(v) != self.cols:
            raise DimensionError("vector length mismatch")
        return tuple(
            sum(self.data[i][j] * v[j] for j in range(self.cols))
            for i in range(self.rows)
        )

    def transpose(self) -> "Mat":
        return Mat([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def trace(self) -> Scalar:
        self._require_square()
        return sum(self.data[i][i] for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def power(self, k: int) -> "Mat":
        self._require_square()
        out = Mat.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def _same_shape(self, other: "Mat"):
        if self.shape != other.shape:
            raise DimensionError(f"{self.shape} vs {other.shape}")

    def _require_square(self):
        if not self.is_square:
            raise DimensionError("square matrix required")

    def __repr__(self):
        return f"Mat({[list(r) for r in self.data]})"


def vec_is_zero(v: Sequence[Scalar]) -> bool:
    return all(x == 0 for x in v)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def normalize_leading(v: Sequence[Scalar]) -> Vec:
    """Scale so the first nonzero entry is 1 (canonical direction vector)."""
    for x in v:
        if x != 0:
            return tuple(exdiv(y, x) for y in v)
    return tuple(v)


def cmp_vec(u, v) -> int:
    for a, b in zip(u, v):
        s = scalar_sign(a - b)
        if s:
            return s
    return 0


def rref(m: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(r) for r in m.data]
    nr, nc = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if a[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [exdiv(x, piv) for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return Mat(a), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def det(m: Mat) -> Scalar:
    m._require_square()
    a = [list(r) for r in m.data]
    n = m.rows
    sign = 1
    out: Scalar = 1
    for c in range(n):
        pr = None
        for i in range(c, n):
            if a[i][c] != 0:
                pr = i
                break
        if pr is None:
            return ZERO
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            sign = -sign
        piv = a[c][c]
        out = out * piv
        inv = exdiv(1, piv) if piv != 1 else None
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv if inv is not None else a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out * sign


def inverse(m: Mat) -> Mat:
    m._require_square()
    n = m.rows
    a = [list(m.data[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    red, pivots = rref(Mat(a))
    if len(pivots) < n or pivots[n - 1] >= n:
        raise SingularInput("matrix is not invertible")
    return Mat([[compact(x) for x in red.data[i][n:]] for i in range(n)])


def kernel_basis(m: Mat) -> list[Vec]:
    """Basis of the right null space, from the reduced echelon form.

    One vector per free column, in ascending column order, with a 1 in the
    free position; this is the deterministic tie-break used everywhere.
    """
    red, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for fc in free:
        v: list = [0] * m.cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = compact(-red.data[r][fc])
        basis.append(tuple(v))
    return basis


def row_space(m: Mat) -> list[Vec]:
    """Canonical (reduced echelon) basis of the row space; subspace equality
    is plain equality of these row lists."""
    red, pivots = rref(m)
    return [tuple(compact(x) for x in red.data[i]) for i in range(len(pivots))]


def column_space(m: Mat) -> list[Vec]:
    return row_space(m.transpose())


def solve(m: Mat, b: Sequence[Scalar]) -> Optional[Vec]:
    """One solution of m x = b, or None when inconsistent.

    Free coordinates are set to zero, so the solution is deterministic.
    """
    if len(b) != m.rows:
        raise DimensionError("rhs length mismatch")
    aug = Mat([list(m.data[i]) + [b[i]] for i in range(m.rows)])
    red, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x: list = [0] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = compact(red.data[r][m.cols])
    return tuple(x)


def char_poly(m: Mat) -> list:
    """Coefficients of det(xI - m), low degree first, leading coefficient 1.

    Uses the trace recursion (Faddeev-LeVerrier), which stays inside the
    scalar field.
    """
    m._require_square()
    n = m.rows
    coeffs_high = [ONE]  # x^n, then x^(n-1), ...
    mk = m
    ck: Scalar = -mk.trace()
    coeffs_high.append(ck)
    for k in range(2, n + 1):
        mk = m @ (mk + Mat.identity(n).scale(ck))
        ck = exdiv(-mk.trace(), k)
        coeffs_high.append(ck)
    return list(reversed(coeffs_high))


@dataclass(frozen=True)
class SpectralClass2x2:
    """Discriminant-based eigenvalue classification of a 2x2 matrix.

    kind is one of "real_distinct" (mu1 < mu2, exact, possibly in a
    quadratic extension), "repeated_diagonalizable" / "repeated_jordan"
    (mu1 == mu2), or "complex_pair" (eigenvalues re +- i*sqrt(im2), im2 > 0).
    """

    kind: str
    mu1: Optional[Scalar] = None
    mu2: Optional[Scalar] = None
    re: Optional[Scalar] = None
    im2: Optional[Scalar] = None

    @property
    def has_real_eigenvalues(self) -> bool:
        return self.kind != "complex_pair"


def spectral_classify_2x2(m: Mat) -> SpectralClass2x2:
    if m.shape != (2, 2):
        raise DimensionError("2x2 matrix required")
    t = m.trace()
    d = det(m)
    disc = t * t - 4 * d
    s = scalar_sign(disc)
    if s > 0:
        root = sqrt_exact(disc)
        mu1 = exdiv(t - root, 2)
        mu2 = exdiv(t + root, 2)
        return SpectralClass2x2("real_distinct", mu1=mu1, mu2=mu2)
    if s == 0:
        mu = exdiv(t, 2)
        if m == Mat.identity(2).scale(mu):
            return SpectralClass2x2("repeated_diagonalizable", mu1=mu, mu2=mu)
        return SpectralClass2x2("repeated_jordan", mu1=mu, mu2=mu)
    return SpectralClass2x2("complex_pair", re=exdiv(t, 2), im2=exdiv(-disc, 4))


def eigendirections_2x2(m: Mat) -> list[tuple[Scalar, Vec]]:
    """All real eigendirections (eigenvalue, canonical vector); empty for a
    complex pair.  A scalar matrix contributes both standard directions."""
    sc = spectral_classify_2x2(m)
    if sc.kind == "complex_pair":
        return []
    if sc.kind == "repeated_diagonalizable":
        return [(sc.mu1, (ONE, ZERO)), (sc.mu1, (ZERO, ONE))]
    eigs = [sc.mu1] if sc.kind == "repeated_jordan" else [sc.mu1, sc.mu2]
    out = []
    for mu in eigs:
        shifted = m - Mat.identity(2).scale(mu)
        for v in kernel_basis(shifted):
            out.append((mu, normalize_leading(v)))
    return out


def common_eigenvector(m1: Mat, m2: Mat) -> Optional[Vec]:
    """Simultaneous eigenvector of a commuting 2x2 pair with real spectra.

    Returns None when either matrix has a complex eigenvalue pair.  When
    several directions qualify, the lexicographically largest normalized
    one is returned (so (1, 0) beats (0, 1)).
    """
    if m1.shape != (2, 2) or m2.shape != (2, 2):
        raise DimensionError("2x2 matrices required")
    if m1 @ m2 != m2 @ m1:
        raise NonCommuting("matrices do not commute")
    dirs = common_eigendirections_2x2(m1, m2)
    if dirs is None:
        return None
    return dirs[0]


def common_eigendirections_2x2(m1: Mat, m2: Mat) -> Optional[list[Vec]]:
    """All common eigendirections of a commuting pair, sorted (largest
    first); None when either spectrum is complex."""
    s1 = spectral_classify_2x2(m1)
    s2 = spectral_classify_2x2(m2)
    if not (s1.has_real_eigenvalues and s2.has_real_eigenvalues):
        return None
    if s1.kind != "repeated_diagonalizable":
        cands = [v for _, v in eigendirections_2x2(m1)]
    elif s2.kind != "repeated_diagonalizable":
        cands = [v for _, v in eigendirections_2x2(m2)]
    else:
        cands = [(ONE, ZERO), (ZERO, ONE)]
    # commuting partners preserve 1-dim eigenspaces, but filter defensively
    out = []
    for v in cands:
        w1, w2 = m1.apply(v), m2.apply(v)
        if _is_multiple(w1, v) and _is_multiple(w2, v):
            out.append(v)
    seen = []
    for v in out:
        if v not in seen:
            seen.append(v)
    seen.sort(key=_VecKey, reverse=True)
    return seen if seen else None


def _is_multiple(w, v) -> bool:
    # v is nonzero; check w = c v for some scalar c
    for i, x in enumerate(v):
        if x != 0:
            c = exdiv(w[i], x)
            return all(w[j] == c * v[j] for j in range(len(v)))
    return False


class _VecKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return cmp_vec(self.v, other.v) < 0
