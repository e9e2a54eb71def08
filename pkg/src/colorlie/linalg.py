"""Exact linear algebra over Q(zeta_N).

Two layers live here:

* dense Gaussian elimination on vectors of CycloScalar (rank, span
  membership, kernels, deterministic basis extension) -- the workhorse for
  central series, centralizers and ideal searches;
* sparse multivariate polynomials over Q(zeta_N) with a fraction-free
  Bareiss elimination, used for generic (symbolic) matrix rank.

All routines are deterministic: pivots are always the first usable entry in
the fixed ordering, so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycloScalar
from .errors import StructuralError

Vector = list  # list[CycloScalar]


def zero_vector(n: int, order: int) -> Vector:
    return [CycloScalar.zero(order) for _ in range(n)]


def unit_vector(n: int, i: int, order: int) -> Vector:
    v = zero_vector(n, order)
    v[i] = CycloScalar.one(order)
    return v


def vec_add(a: Vector, b: Vector) -> Vector:
    return [x + y for x, y in zip(a, b)]


def vec_sub(a: Vector, b: Vector) -> Vector:
    return [x - y for x, y in zip(a, b)]


def vec_scale(a: Vector, c: CycloScalar) -> Vector:
    return [c * x for x in a]


def is_zero_vector(v: Vector) -> bool:
    return not any(v)


class Echelon:
    """Row echelon accumulator with leading-one normalization.

    Rows are kept reduced against each other; `add` reports whether the new
    vector enlarged the span.  Insertion order is preserved in `added`
    bookkeeping by the callers that need it.
    """

    def __init__(self, n: int, order: int):
        self.n = n
        self.order = order
        self.rows: list[Vector] = []
        self.pivots: list[int] = []

    def reduce(self, v: Vector) -> Vector:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                c = v[p]
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def add(self, v: Vector) -> bool:
        v = self.reduce(v)
        for p in range(self.n):
            if v[p]:
                inv = v[p].inverse()
                v = [inv * x for x in v]
                # back-reduce existing rows against the new pivot
                for k, row in enumerate(self.rows):
                    if row[p]:
                        c = row[p]
                        self.rows[k] = [x - c * y for x, y in zip(row, v)]
                self.rows.append(v)
                self.pivots.append(p)
                return True
        return False

    def contains(self, v: Vector) -> bool:
        return is_zero_vector(self.reduce(v))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def coordinates(self, v: Vector) -> Vector | None:
        """Coordinates of v in the row basis (reduced rows), or None."""
        v = list(v)
        coords = [CycloScalar.zero(self.order) for _ in self.rows]
        for i, (row, p) in enumerate(zip(self.rows, self.pivots)):
            if v[p]:
                coords[i] = v[p]
                c = v[p]
                v = [x - c * y for x, y in zip(v, row)]
        if not is_zero_vector(v):
            return None
        return coords

    def basis(self) -> list[Vector]:
        return [list(r) for r in self.rows]


def span(vectors, n: int, order: int) -> Echelon:
    ech = Echelon(n, order)
    for v in vectors:
        ech.add(v)
    return ech


def rank(vectors, n: int, order: int) -> int:
    return span(vectors, n, order).rank


def kernel(rows: list[Vector], n: int, order: int) -> list[Vector]:
    """Null space basis of the linear map x -> (sum_j rows[i][j] x_j)_i,
    i.e. solutions of R x = 0 for the len(rows) x n matrix R."""
    ech = Echelon(n, order)
    for r in rows:
        ech.add(list(r))
    pivots = set(ech.pivots)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = zero_vector(n, order)
        v[f] = CycloScalar.one(order)
        for row, p in zip(ech.rows, ech.pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def intersect_spans(a: list[Vector], b: list[Vector], n: int, order: int) -> list[Vector]:
    """Basis of span(a) intersected with span(b) (Zassenhaus-style: kernel of
    the concatenated coefficient matrix)."""
    if not a or not b:
        return []
    m = len(a) + len(b)
    # columns: coefficients on a then on b; rows: the n coordinate equations
    rows = []
    for coord in range(n):
        rows.append([a[i][coord] for i in range(len(a))]
                    + [-b[j][coord] for j in range(len(b))])
    out = Echelon(n, order)
    for sol in kernel(rows, m, order):
        v = zero_vector(n, order)
        for i in range(len(a)):
            if sol[i]:
                v = vec_add(v, vec_scale(a[i], sol[i]))
        out.add(v)
    return out.basis()


def solve_matrix(mat: list[Vector], rhs: Vector, order: int) -> Vector | None:
    """One solution x of mat @ x = rhs (mat given as list of rows), or None."""
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    aug = [list(mat[i]) + [rhs[i]] for i in range(nrows)]
    ech = Echelon(ncols + 1, order)
    for r in aug:
        ech.add(r)
    x = zero_vector(ncols, order)
    for row, p in zip(ech.rows, ech.pivots):
        if p == ncols:
            return None  # inconsistent
        x[p] = row[ncols]
    return x


# ---------------------------------------------------------------------------
# multivariate polynomials over Q(zeta_N)


@dataclass(frozen=True)
class MPoly:
    """Sparse multivariate polynomial; terms maps exponent tuples to nonzero
    CycloScalar coefficients."""

    order: int
    nvars: int
    terms: tuple  # tuple of (exponent-tuple, CycloScalar), lex-sorted

    @staticmethod
    def _make(order, nvars, term_dict):
        items = tuple(sorted(((e, c) for e, c in term_dict.items() if c),
                             key=lambda t: t[0], reverse=True))
        return MPoly(order, nvars, items)

    @classmethod
    def zero(cls, order: int, nvars: int) -> MPoly:
        return cls._make(order, nvars, {})

    @classmethod
    def constant(cls, order: int, nvars: int, c: CycloScalar) -> MPoly:
        return cls._make(order, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, order: int, nvars: int) -> MPoly:
        return cls.constant(order, nvars, CycloScalar.one(order))

    @classmethod
    def variable(cls, order: int, nvars: int, k: int,
                 coeff: CycloScalar | None = None) -> MPoly:
        e = tuple(1 if i == k else 0 for i in range(nvars))
        return cls._make(order, nvars, {e: coeff if coeff is not None
                                        else CycloScalar.one(order)})

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def __add__(self, other: MPoly) -> MPoly:
        d = dict(self.terms)
        for e, c in other.terms:
            s = d.get(e)
            d[e] = c if s is None else s + c
        return MPoly._make(self.order, self.nvars, d)

    def __neg__(self) -> MPoly:
        return MPoly(self.order, self.nvars,
                     tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: MPoly) -> MPoly:
        return self + (-other)

    def __mul__(self, other: MPoly) -> MPoly:
        d = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = d.get(e)
                d[e] = prod if s is None else s + prod
        return MPoly._make(self.order, self.nvars, d)

    def exact_div(self, divisor: MPoly) -> MPoly:
        """Exact quotient self / divisor; raises if the division leaves a
        remainder (Bareiss guarantees exactness where this is used)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_e, lead_c = divisor.terms[0]
        lead_c_inv = lead_c.inverse()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)  # lex-leading exponent
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if any(x < 0 for x in qe):
                raise StructuralError("inexact polynomial division")
            qc = c * lead_c_inv
            quot[qe] = quot.get(qe, CycloScalar.zero(self.order)) + qc
            for de, dc in divisor.terms:
                te = tuple(a + b for a, b in zip(qe, de))
                val = rem.get(te, CycloScalar.zero(self.order)) - qc * dc
                if val:
                    rem[te] = val
                elif te in rem:
                    del rem[te]
        return MPoly._make(self.order, self.nvars, quot)

    def evaluate(self, values: list[CycloScalar]) -> CycloScalar:
        total = CycloScalar.zero(self.order)
        for e, c in self.terms:
            term = c
            for k, exp in enumerate(e):
                if exp:
                    term = term * values[k] ** exp
            total = total + term
        return total


def bareiss_rank(matrix: list[list[MPoly]]) -> int:
    """Rank of a matrix of polynomials over the fraction field, by
    fraction-free (Bareiss) elimination with full pivoting.  Pivots are
    chosen smallest-first by (term count, total degree) to keep the exact
    divisions cheap."""
    m = [row[:] for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    if nrows == 0 or ncols == 0:
        return 0
    order = m[0][0].order
    nvars = m[0][0].nvars
    prev = MPoly.one(order, nvars)
    r = 0
    while r < min(nrows, ncols):
        best = None
        for i in range(r, nrows):
            for j in range(r, ncols):
                if not m[i][j].is_zero():
                    key = (m[i][j].num_terms(), m[i][j].total_degree())
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != r:
            m[r], m[pi] = m[pi], m[r]
        if pj != r:
            for row in m:
                row[r], row[pj] = row[pj], row[r]
        pivot = m[r][r]
        for i in range(r + 1, nrows):
            for j in range(r + 1, ncols):
                num = pivot * m[i][j] - m[i][r] * m[r][j]
                m[i][j] = num.exact_div(prev)
            m[i][r] = MPoly.zero(order, nvars)
        prev = pivot
        r += 1
    return r
