"""Rational canonical form over an exact field, with explicit conjugator.

Polynomials are coefficient lists, low degree first, with no trailing
zeros.  The invariant factors f1 | f2 | ... are computed by a cyclic
decomposition: pick a vector of maximal annihilator in the current
quotient, lift it, correct the lift inside the span already built (a
linear solve), and append its Krylov chain.  Two matrices over the same
field are similar exactly when their invariant factor lists agree.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import DimensionError
from .matrices import Mat, Vec, inverse, rref, solve, vec_add, vec_is_zero, vec_scale
from .scalars import ONE, ZERO, Scalar, exdiv

Poly = list


def pnormalize(p: Sequence[Scalar]) -> Poly:
    q = list(p)
    while q and q[-1] == 0:
        q.pop()
    return q


def pdeg(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return pnormalize(
        [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    )


def psub(p: Poly, q: Poly) -> Poly:
    return padd(p, [-x for x in q])


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return pnormalize(out)


def pmonic(p: Poly) -> Poly:
    if not p:
        return []
    lead = p[-1]
    if lead == 1:
        return list(p)
    return [exdiv(x, lead) for x in p]


def pdivmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [ZERO] * max(0, len(p) - len(q) + 1)
    dq = pdeg(q)
    lead = q[-1]
    while len(r) - 1 >= dq and r:
        r = pnormalize(r)
        if not r or len(r) - 1 < dq:
            break
        c = exdiv(r[-1], lead)
        k = len(r) - 1 - dq
        quo[k] = c
        for i, b in enumerate(q):
            r[k + i] = r[k + i] - c * b
        r = pnormalize(r)
    return pnormalize(quo), pnormalize(r)


def pquo(p: Poly, q: Poly) -> Poly:
    quo, rem = pdivmod(p, q)
    if rem:
        raise ValueError("non-exact polynomial division")
    return quo


def pgcd(p: Poly, q: Poly) -> Poly:
    a, b = pnormalize(p), pnormalize(q)
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def plcm(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    return pmonic(pquo(pmul(p, q), pgcd(p, q)))


def pdivides(p: Poly, q: Poly) -> bool:
    """p | q"""
    if not q:
        return True
    if not p:
        return False
    return not pdivmod(q, p)[1]


def coprime_split(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """(P, Q) with P | a, Q | b, P*Q = lcm(a, b), gcd(P, Q) = 1."""
    g = pgcd(a, b)
    p, q = pquo(a, g), list(b)
    while True:
        g2 = pgcd(p, q)
        if pdeg(g2) == 0:
            return pmonic(p), pmonic(q)
        q = pquo(q, g2)
        p = pmul(p, g2)


def papply(p: Poly, m: Mat, v: Vec) -> Vec:
    """p(m) applied to vector v, by Horner."""
    out = tuple(0 for _ in v)
    for c in reversed(p):
        out = m.apply(out)
        if c != 0:
            out = vec_add(out, vec_scale(c, v))
    return out


def companion(p: Poly) -> Mat:
    """Companion matrix of a monic polynomial (columns are images)."""
    n = pdeg(p)
    if n < 1:
        raise ValueError("companion needs degree >= 1")
    cols = []
    for j in range(n - 1):
        col = [ZERO] * n
        col[j + 1] = ONE
        cols.append(col)
    cols.append([-c for c in p[:-1]])
    return Mat.from_columns(cols)


class _Span:
    """Incremental row space with membership test and coordinates."""

    def __init__(self, n: int):
        self.n = n
        self.rows: list[Vec] = []  # echelon rows (not reduced)
        self.pivots: list[int] = []

    def reduce(self, v: Vec) -> Vec:
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            if w[p] != 0:
                c = exdiv(w[p], row[p])
                w = [x - c * y for x, y in zip(w, row)]
        return tuple(w)

    def contains(self, v: Vec) -> bool:
        return vec_is_zero(self.reduce(v))

    def add(self, v: Vec) -> bool:
        w = self.reduce(v)
        for p in range(self.n):
            if w[p] != 0:
                self.rows.append(w)
                self.pivots.append(p)
                return True
        return False

    @property
    def dim(self) -> int:
        return len(self.rows)


def local_min_poly(m: Mat, v: Vec) -> tuple[Poly, list[Vec]]:
    """Monic annihilator of v under m, plus the Krylov chain v, m v, ..."""
    chain = [tuple(v)]
    span = _Span(m.rows)
    span.add(chain[0])
    w = m.apply(chain[-1])
    while not span.contains(w):
        span.add(w)
        chain.append(w)
        w = m.apply(w)
    coeffs = solve(Mat.from_columns(chain), w)
    assert coeffs is not None
    poly = pnormalize([-c for c in coeffs] + [ONE])
    return poly, chain


def min_poly(m: Mat) -> Poly:
    m._require_square()
    return _max_vector(m)[1]


def _max_vector(m: Mat) -> tuple[Vec, Poly]:
    """A vector whose annihilator is the minimal polynomial of m."""
    n = m.rows
    best_v: Optional[Vec] = None
    best_f: Poly = []
    for i in range(n):
        e = tuple(ONE if j == i else ZERO for j in range(n))
        f, _ = local_min_poly(m, e)
        if best_v is None:
            best_v, best_f = e, f
        elif pdivides(best_f, f):
            best_v, best_f = e, f
        elif not pdivides(f, best_f):
            pp, qq = coprime_split(best_f, f)
            u2 = papply(pquo(best_f, pp), m, best_v)
            v2 = papply(pquo(f, qq), m, e)
            best_v = vec_add(u2, v2)
            best_f = pmul(pp, qq)
        if pdeg(best_f) == n:
            break
    return best_v, best_f


def cyclic_decomposition(m: Mat) -> list[tuple[Vec, Poly]]:
    """Generators and annihilators, largest annihilator first; the direct
    sum of the Krylov chains is the whole space."""
    m._require_square()
    n = m.rows
    gens: list[tuple[Vec, Poly]] = []
    chain_vectors: list[Vec] = []
    span = _Span(n)
    while span.dim < n:
        if span.dim == 0:
            v, f = _max_vector(m)
        else:
            comp = [c for c in range(n) if c not in set(span.pivots)]
            red = rref(Mat(span.rows))[0]
            rpiv = rref(Mat(span.rows))[1]

            def project(w: Vec) -> Vec:
                x = list(w)
                for row, p in zip(red.data, rpiv):
                    if x[p] != 0:
                        c = x[p]
                        x = [a - c * b for a, b in zip(x, row)]
                return tuple(x[c] for c in comp)

            def lift(q: Vec) -> Vec:
                x = [ZERO] * n
                for c, val in zip(comp, q):
                    x[c] = val
                return tuple(x)

            cols = [project(m.apply(lift(tuple(ONE if k == i else ZERO for k in range(len(comp)))))) for i in range(len(comp))]
            mbar = Mat.from_columns(cols)
            vbar, f = _max_vector(mbar)
            v = lift(vbar)
            # correct the lift so its annihilator is exactly f
            r = papply(f, m, v)
            if not vec_is_zero(r):
                sys = Mat.from_columns([papply(f, m, b) for b in chain_vectors])
                x = solve(sys, r)
                assert x is not None, "cyclic decomposition correction must solve"
                for c, b in zip(x, chain_vectors):
                    if c != 0:
                        v = vec_add(v, vec_scale(-c, b))
                assert vec_is_zero(papply(f, m, v))
        if gens:
            assert pdivides(f, gens[-1][1]), "invariant factors must divide"
        gens.append((v, f))
        w = v
        for _ in range(pdeg(f)):
            added = span.add(w)
            assert added, "Krylov chain must be independent"
            chain_vectors.append(w)
            w = m.apply(w)
    return gens


def frobenius_form(m: Mat) -> tuple[list[Poly], Mat]:
    """Invariant factors (ascending divisibility) and an invertible P with
    P^-1 m P block diagonal with the matching companion blocks."""
    gens = cyclic_decomposition(m)
    gens = list(reversed(gens))  # ascending
    factors = [f for _, f in gens]
    cols: list[Vec] = []
    for v, f in gens:
        w = v
        for _ in range(pdeg(f)):
            cols.append(w)
            w = m.apply(w)
    p = Mat.from_columns(cols)
    return factors, p


def invariant_factors(m: Mat) -> list[Poly]:
    return [f for _, f in reversed(cyclic_decomposition(m))]


def similar(a: Mat, b: Mat) -> bool:
    """Exact similarity test over the scalar field."""
    if a.shape != b.shape:
        raise DimensionError("shape mismatch")
    if not a.is_square:
        raise DimensionError("square matrices required")
    if a.trace() != b.trace():
        return False
    return invariant_factors(a) == invariant_factors(b)


def similarity_witness(a: Mat, b: Mat) -> Optional[Mat]:
    """Invertible C with C^-1 a C = b, or None when not similar."""
    fa, pa = frobenius_form(a)
    fb, pb = frobenius_form(b)
    if fa != fb:
        return None
    return pa @ inverse(pb)
