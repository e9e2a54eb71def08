"""Ordinary (trivially colored) Lie algebra analysis.

This module carries the decision machinery behind the diamond verdict:

* generic rank / index of the structure matrix (Sum_k c_ij^k x_k), computed
  symbolically by fraction-free elimination and cross-checked against
  random rational evaluations;
* the complete search for an abelian ideal of codimension one (every such
  ideal contains the derived subalgebra, which turns the search into exact
  kernel computations plus a wedge criterion);
* stripping of the central abelian direct factor;
* the two-route diamond decision with mandatory route agreement.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .color import ColorAlgebra, SeriesProfile, ValidationReport, _clean_combo, _combo_scale
from .cyclo import CycloScalar
from .errors import ConsistencyError, StructuralError, ValidationError
from .linalg import (Echelon, MPoly, bareiss_rank, kernel, intersect_spans,
                     span, unit_vector, vec_add, vec_scale, zero_vector)

DEFAULT_SEED = 20210

L5_PROFILE = (5, 3, 2, 0)
L6_PROFILE = (6, 3, 0)


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q(zeta_N) given by a sparse
    antisymmetric bracket table (i, j) -> {k: coefficient}."""

    def __init__(self, order: int, dim: int, brackets: dict):
        self.order = order
        self.dim = dim
        self.brackets = {key: _clean_combo(val) for key, val in brackets.items()
                         if _clean_combo(val)}
        for (i, j), combo in self.brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValidationError(f"bracket index ({i + 1},{j + 1}) out of range")
            for k in combo:
                if not 0 <= k < dim:
                    raise ValidationError(
                        f"[e{i + 1},e{j + 1}] hits e{k + 1} outside the basis")

    def entry(self, i: int, j: int) -> dict:
        return self.brackets.get((i, j), {})

    def bracket_vec(self, v, w):
        out = zero_vector(self.dim, self.order)
        for i, ci in enumerate(v):
            if not ci:
                continue
            for j, cj in enumerate(w):
                if not cj:
                    continue
                for k, c in self.entry(i, j).items():
                    out[k] = out[k] + ci * cj * c
        return out

    def validate(self) -> ValidationReport:
        report = ValidationReport("Lie algebra")
        one = CycloScalar.one(self.order)
        for i in range(self.dim):
            for j in range(self.dim):
                if _clean_combo(self.entry(i, j)) != _combo_scale(self.entry(j, i), -one):
                    report.note(f"antisymmetry fails on (e{i + 1}, e{j + 1})")
        for i in range(self.dim):
            ei = unit_vector(self.dim, i, self.order)
            for j in range(self.dim):
                ej = unit_vector(self.dim, j, self.order)
                for k in range(self.dim):
                    ek = unit_vector(self.dim, k, self.order)
                    jac = self.bracket_vec(self.bracket_vec(ei, ej), ek)
                    jac = vec_add(jac, self.bracket_vec(self.bracket_vec(ej, ek), ei))
                    jac = vec_add(jac, self.bracket_vec(self.bracket_vec(ek, ei), ej))
                    if any(jac):
                        report.note(f"Jacobi fails on (e{i + 1}, e{j + 1}, e{k + 1})")
        return report

    def descending_central_series(self) -> SeriesProfile:
        current = [unit_vector(self.dim, i, self.order) for i in range(self.dim)]
        dims = [self.dim]
        bases = [current]
        while True:
            ech = Echelon(self.dim, self.order)
            for v in current:
                for j in range(self.dim):
                    ej = unit_vector(self.dim, j, self.order)
                    ech.add(self.bracket_vec(v, ej))
            nxt = ech.basis()
            dims.append(len(nxt))
            bases.append(nxt)
            if len(nxt) == dims[-2] or not nxt:
                break
            current = nxt
        return SeriesProfile(tuple(dims), bases)

    def is_nilpotent(self) -> bool:
        return self.descending_central_series().nilpotent

    def derived_subalgebra(self) -> Echelon:
        ech = Echelon(self.dim, self.order)
        for (i, j), combo in sorted(self.brackets.items()):
            v = zero_vector(self.dim, self.order)
            for k, c in combo.items():
                v[k] = v[k] + c
            ech.add(v)
        return ech

    def centralizer_of(self, vectors) -> list:
        """Basis of {x : [x, v] = 0 for all v in vectors}."""
        eqs = []
        for v in vectors:
            # row e: coefficient of x_i in component k of [x, v]
            for k in range(self.dim):
                row = zero_vector(self.dim, self.order)
                for i in range(self.dim):
                    ei = unit_vector(self.dim, i, self.order)
                    row[i] = self.bracket_vec(ei, v)[k]
                eqs.append(row)
        return kernel(eqs, self.dim, self.order)

    def center(self) -> list:
        basis = [unit_vector(self.dim, i, self.order) for i in range(self.dim)]
        return self.centralizer_of(basis)

    def direct_sum(self, other: LieAlgebra) -> LieAlgebra:
        if self.order != other.order:
            raise StructuralError("mixed scalar fields")
        brackets = dict(self.brackets)
        for (i, j), combo in other.brackets.items():
            brackets[(i + self.dim, j + self.dim)] = {
                k + self.dim: c for k, c in combo.items()}
        return LieAlgebra(self.order, self.dim + other.dim, brackets)


def from_color_even(L: ColorAlgebra) -> LieAlgebra:
    """The even part of a color algebra as an ordinary Lie algebra.

    Requires the commutation factor to be identically 1 on pairs of even
    support degrees (which holds after superization); otherwise the even
    part is not an ordinary Lie algebra and we refuse.
    """
    even, _ = L.parity_parts()
    one = CycloScalar.one(L.order)
    for i in even:
        for j in even:
            if L.epsilon(L.degrees[i], L.degrees[j]) != one:
                raise ValidationError(
                    f"commutation factor is not trivial on even degrees "
                    f"({L.degrees[i]}, {L.degrees[j]}); not a superization's "
                    "even part")
    reindex = {old: new for new, old in enumerate(even)}
    brackets = {}
    for (i, j), combo in L.brackets.items():
        if i in reindex and j in reindex:
            brackets[(reindex[i], reindex[j])] = {
                reindex[k]: c for k, c in combo.items()}
    out = LieAlgebra(L.order, len(even), brackets)
    report = out.validate()
    if not report.ok:
        raise ValidationError(f"even part is not a Lie algebra:\n{report}")
    return out


# ---------------------------------------------------------------------------
# index


@dataclass
class IndexReport:
    dim: int
    generic_rank: int
    index: int
    almost_maximal: bool
    evaluation_ranks: tuple[int, ...]


def structure_matrix(g: LieAlgebra) -> list:
    """The n x n matrix with (i,j) entry Sum_k c_ij^k x_k."""
    n = g.dim
    mat = [[MPoly.zero(g.order, n) for _ in range(n)] for _ in range(n)]
    for (i, j), combo in g.brackets.items():
        for k, c in combo.items():
            mat[i][j] = mat[i][j] + MPoly.variable(g.order, n, k, c)
    return mat


def lie_index(g: LieAlgebra, seed: int = DEFAULT_SEED) -> IndexReport:
    """Index = dim - generic rank of the structure matrix.

    The symbolic rank (Bareiss over the polynomial ring) is the primary
    route; three random rational evaluations are an independent oracle and
    any disagreement raises ConsistencyError.
    """
    n = g.dim
    mat = structure_matrix(g)
    symbolic = bareiss_rank(mat)
    rng = random.Random(seed)
    eval_ranks = []
    for _ in range(3):
        values = [CycloScalar.from_rational(
            g.order, Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3)))
            for _ in range(n)]
        rows = [[mat[i][j].evaluate(values) for j in range(n)] for i in range(n)]
        eval_ranks.append(span(rows, n, g.order).rank)
    if any(r != symbolic for r in eval_ranks):
        raise ConsistencyError(
            f"symbolic rank {symbolic} disagrees with evaluation ranks "
            f"{tuple(eval_ranks)}")
    if symbolic % 2 != 0:
        raise ConsistencyError("generic rank of a skew matrix must be even")
    return IndexReport(dim=n, generic_rank=symbolic, index=n - symbolic,
                       almost_maximal=(n - symbolic == n - 2),
                       evaluation_ranks=tuple(eval_ranks))


# ---------------------------------------------------------------------------
# codimension-one abelian ideals


def _wedge_rows(omega, m: int, order: int):
    """Rows of the map phi -> omega ^ phi, one per ordered triple a<b<c."""
    rows = []
    for a in range(m):
        for b in range(a + 1, m):
            for c in range(b + 1, m):
                row = zero_vector(m, order)
                row[c] = row[c] + omega[a][b]
                row[b] = row[b] - omega[a][c]
                row[a] = row[a] + omega[b][c]
                rows.append(row)
    return rows


def has_codim1_abelian_ideal(g: LieAlgebra):
    """A hyperplane basis spanning an abelian ideal of codimension one, or
    None.  Complete search: such an ideal contains the derived subalgebra D
    (the quotient is abelian), so it is determined inside the centralizer of
    D, and when D is central the hyperplanes correspond to kernels of linear
    functionals phi with omega_l ^ phi = 0 for the induced D-valued 2-form.
    """
    n = g.dim
    if n == 0:
        return None
    derived = g.derived_subalgebra()
    d_basis = derived.basis()
    # step 1: D must itself be abelian
    for v in d_basis:
        for w in d_basis:
            if any(g.bracket_vec(v, w)):
                return None
    cent = g.centralizer_of(d_basis) if d_basis else \
        [unit_vector(n, i, g.order) for i in range(n)]
    cdim = span(cent, n, g.order).rank
    if cdim <= n - 2:
        return None
    if cdim == n - 1:
        for v in cent:
            for w in cent:
                if any(g.bracket_vec(v, w)):
                    return None
        return _verify_witness(g, cent)
    # cdim == n: D is central; pass to the quotient q = g/D
    dd = derived.rank
    m = n - dd
    section = []  # unit vectors lifting a basis of q
    ext = Echelon(n, g.order)
    for v in d_basis:
        ext.add(v)
    for i in range(n):
        e = unit_vector(n, i, g.order)
        if ext.add(e):
            section.append(e)
    if len(section) != m:
        raise ConsistencyError("quotient section has wrong dimension")
    if dd == 0:
        # abelian algebra: any hyperplane works; take the first n-1 basis vectors
        witness = [unit_vector(n, i, g.order) for i in range(n - 1)]
        return _verify_witness(g, witness)
    # omega_l[a][b] = l-th D-coordinate of [s_a, s_b]
    omegas = [[[CycloScalar.zero(g.order) for _ in range(m)] for _ in range(m)]
              for _ in range(dd)]
    for a in range(m):
        for b in range(m):
            coords = derived.coordinates(g.bracket_vec(section[a], section[b]))
            if coords is None:
                raise ConsistencyError("bracket escaped the derived subalgebra")
            for l in range(dd):
                omegas[l][a][b] = coords[l]
    rows = []
    for l in range(dd):
        rows.extend(_wedge_rows(omegas[l], m, g.order))
    if rows:
        phis = kernel(rows, m, g.order)
    else:
        phis = [unit_vector(m, 0, g.order)]  # m <= 2: condition is vacuous
    if not phis:
        return None
    phi = phis[0]
    # hyperplane in q: kernel of the functional phi
    h_basis = kernel([phi], m, g.order)
    witness = [list(v) for v in d_basis]
    for h in h_basis:
        lift = zero_vector(n, g.order)
        for a, c in enumerate(h):
            if c:
                lift = vec_add(lift, vec_scale(section[a], c))
        witness.append(lift)
    return _verify_witness(g, witness)


def _verify_witness(g: LieAlgebra, witness):
    """Bug trap: the returned hyperplane must be an abelian ideal of
    codimension one."""
    n = g.dim
    ech = span(witness, n, g.order)
    if ech.rank != n - 1:
        raise ConsistencyError("witness is not a hyperplane")
    basis = ech.basis()
    for v in basis:
        for w in basis:
            if any(g.bracket_vec(v, w)):
                raise ConsistencyError("witness is not abelian")
        for i in range(n):
            ei = unit_vector(n, i, g.order)
            if not ech.contains(g.bracket_vec(ei, v)):
                raise ConsistencyError("witness is not an ideal")
    return basis


# ---------------------------------------------------------------------------
# central abelian direct factor


@dataclass
class StripResult:
    factor_basis: list          # basis of the central abelian factor A
    subalgebra: LieAlgebra      # B in its own coordinates
    subalgebra_basis: list      # basis vectors of B inside the input algebra


def strip_central_abelian_factor(g: LieAlgebra) -> StripResult:
    """Split g = A x B with A central abelian and B without any further
    central abelian direct factor (its center sits inside [B, B])."""
    n = g.dim
    center = g.center()
    derived = g.derived_subalgebra()
    zi = intersect_spans(center, derived.basis(), n, g.order)
    # A: extend Z cap [g,g] to Z, keeping the newly added vectors
    ext = Echelon(n, g.order)
    for v in zi:
        ext.add(v)
    a_basis = []
    for v in center:
        if ext.add(v):
            a_basis.append(v)
    # B: extend [g,g] by standard basis vectors, staying independent of A
    b_ech = Echelon(n, g.order)
    full = Echelon(n, g.order)
    for v in a_basis:
        full.add(v)
    b_basis = []
    for v in derived.basis():
        if full.add(v):
            b_ech.add(v)
            b_basis.append(v)
    for i in range(n):
        if len(a_basis) + len(b_basis) == n:
            break
        e = unit_vector(n, i, g.order)
        if full.add(e):
            b_ech.add(e)
            b_basis.append(e)
    if len(a_basis) + len(b_basis) != n:
        raise ConsistencyError("A + B does not span the algebra")
    # structure constants of B in its own basis
    m = len(b_basis)
    brackets = {}
    for i in range(m):
        for j in range(m):
            v = g.bracket_vec(b_basis[i], b_basis[j])
            coords = b_ech.coordinates(v)
            if coords is None:
                raise ConsistencyError("[B, B] escaped B")
            # coordinates are w.r.t. the reduced echelon rows; convert the
            # basis we return to those rows so the table matches
            combo = {k: c for k, c in enumerate(coords) if c}
            brackets[(i, j)] = combo
    sub = LieAlgebra(g.order, m, brackets)
    # assertions from the construction
    for v in a_basis:
        for i in range(n):
            if any(g.bracket_vec(v, unit_vector(n, i, g.order))):
                raise ConsistencyError("A is not central")
    sub_center = sub.center()
    sub_derived = sub.derived_subalgebra()
    for z in sub_center:
        if not sub_derived.contains(z):
            raise ConsistencyError("B still has a central abelian direct factor")
    return StripResult(factor_basis=a_basis, subalgebra=sub,
                       subalgebra_basis=b_ech.basis())


# ---------------------------------------------------------------------------
# diamond decision


@dataclass
class DiamondVerdict:
    holds: bool
    classification: str  # abelian-after-strip | codim1-abelian-ideal |
    #                      type-L5 | type-L6 | not-diamond
    stripped_dim: int
    witness: list | None
    index_report: IndexReport | None
    series_dims: tuple[int, ...]
    routes_agree: bool


def diamond_check(g: LieAlgebra, seed: int = DEFAULT_SEED) -> DiamondVerdict:
    """Decide the diamond property by two independent routes (structural
    classification vs almost-maximal index) with mandatory agreement."""
    profile = g.descending_central_series()
    if not profile.nilpotent:
        raise ValidationError("diamond decision requires a nilpotent algebra")
    stripped = strip_central_abelian_factor(g)
    b = stripped.subalgebra
    if b.dim == 0:
        return DiamondVerdict(True, "abelian-after-strip", 0, None, None,
                              profile.dims, True)
    b_profile = b.descending_central_series()
    witness = has_codim1_abelian_ideal(b)
    index_rep = lie_index(b, seed)
    if witness is not None:
        classification = "codim1-abelian-ideal"
    elif b.dim == 5 and index_rep.almost_maximal:
        if b_profile.dims != L5_PROFILE:
            raise ConsistencyError(
                f"5-dim almost-maximal algebra with series {b_profile.dims}; "
                "contradicts the classification")
        classification = "type-L5"
    elif b.dim == 6 and index_rep.almost_maximal:
        if b_profile.dims != L6_PROFILE:
            raise ConsistencyError(
                f"6-dim almost-maximal algebra with series {b_profile.dims}; "
                "contradicts the classification")
        classification = "type-L6"
    else:
        classification = "not-diamond"
    structural_holds = classification != "not-diamond"
    if structural_holds != index_rep.almost_maximal:
        raise ConsistencyError(
            f"route disagreement: structural={classification} but "
            f"index report says almost_maximal={index_rep.almost_maximal} "
            f"(dim {b.dim}, index {index_rep.index})")
    return DiamondVerdict(structural_holds, classification, b.dim, witness,
                          index_rep, b_profile.dims, True)


# ---------------------------------------------------------------------------
# codim-1 realization kx + V


@dataclass
class Codim1Decomposition:
    x: list                      # the chosen complement vector
    f_matrix: list               # ad x restricted to the ideal, in its basis
    chain_basis: list            # ideal vectors grouped chain by chain
    block_sizes: tuple[int, ...]  # Jordan block sizes, descending


def _mat_apply(f, v, order):
    m = len(v)
    out = zero_vector(m, order)
    for j, c in enumerate(v):
        if c:
            out = vec_add(out, vec_scale([f[i][j] for i in range(m)], c))
    return out


def decompose_codim1(g: LieAlgebra, witness,
                     seed: int = DEFAULT_SEED) -> Codim1Decomposition:
    """Realize g as kx + V with nilpotent f = ad x restricted to the abelian
    codim-1 ideal V; returns a Jordan chain basis of f."""
    n = g.dim
    try:
        basis = _verify_witness(g, witness)
    except ConsistencyError as exc:
        raise ValidationError(f"invalid codim-1 witness: {exc}") from exc
    ech = span(basis, n, g.order)
    x = None
    for i in range(n):
        e = unit_vector(n, i, g.order)
        if not ech.contains(e):
            x = e
            break
    if x is None:
        raise ValidationError("witness spans the whole algebra")
    m = n - 1
    # f in the coordinates of the witness basis
    f = [[CycloScalar.zero(g.order) for _ in range(m)] for _ in range(m)]
    for j in range(m):
        img = g.bracket_vec(x, basis[j])
        coords = ech.coordinates(img)
        if coords is None:
            raise ValidationError("ad x does not preserve the witness")
        for i in range(m):
            f[i][j] = coords[i]
    chains = _jordan_chains(f, m, g.order, seed)
    chain_basis = []
    sizes = []
    for chain in chains:
        sizes.append(len(chain))
        for v in chain:
            w = zero_vector(n, g.order)
            for a, c in enumerate(v):
                if c:
                    w = vec_add(w, vec_scale(basis[a], c))
            chain_basis.append(w)
    return Codim1Decomposition(x=x, f_matrix=f, chain_basis=chain_basis,
                               block_sizes=tuple(sorted(sizes, reverse=True)))


def _jordan_chains(f, m: int, order: int, seed: int):
    """Jordan chain basis of a nilpotent matrix: greedy highest-height-first
    chain selection over kernel-flag candidates, verified against the rank
    profile (with a seeded random fallback pool)."""
    if m == 0:
        return []
    powers = [[[CycloScalar.one(order) if i == j else CycloScalar.zero(order)
                for j in range(m)] for i in range(m)]]
    while True:
        prev = powers[-1]
        nxt = [[sum((f[i][k] * prev[k][j] for k in range(m)),
                    CycloScalar.zero(order)) for j in range(m)]
               for i in range(m)]
        powers.append(nxt)
        if all(not c for row in nxt for c in row):
            break
        if len(powers) > m + 1:
            raise ValidationError("endomorphism is not nilpotent")
    p = len(powers) - 1  # f^p = 0, f^(p-1) != 0
    ranks = [span([[pw[i][j] for j in range(m)] for i in range(m)], m, order).rank
             for pw in powers]

    def height(v):
        for q in range(p + 1):
            if not any(_apply_power(powers, q, v, order)):
                return q
        return p

    rng = random.Random(seed)
    pool = [unit_vector(m, i, order) for i in range(m)]
    for q in range(1, p + 1):
        rows = [[powers[q][i][j] for j in range(m)] for i in range(m)]
        pool.extend(kernel(rows, m, order))
    chains = []
    used = Echelon(m, order)
    total = 0
    attempts = 0
    while total < m:
        progress = False
        for v in sorted(pool, key=height, reverse=True):
            h = height(v)
            if h == 0:
                continue
            chain = [_apply_power(powers, k, v, order) for k in range(h)]
            saved_rows = [list(r) for r in used.rows]
            saved_pivots = list(used.pivots)
            if all(used.add(c) for c in chain):
                chains.append(chain)  # v, f v, ..., f^{h-1} v
                total += h
                progress = True
            else:
                used.rows = saved_rows
                used.pivots = saved_pivots
            if total == m:
                break
        if total == m:
            break
        if not progress:
            attempts += 1
            if attempts > 20:
                raise ConsistencyError("Jordan chain search did not converge")
            pool.extend([[CycloScalar.from_rational(order, rng.randint(-3, 3))
                          for _ in range(m)] for _ in range(4)])
    # cross-check block sizes against the rank profile
    sizes = sorted((len(c) for c in chains), reverse=True)
    for q in range(1, p + 1):
        expect = ranks[q - 1] - ranks[q]
        if sum(1 for s in sizes if s >= q) != expect:
            raise ConsistencyError("chain sizes disagree with the rank profile")
    return chains


def _apply_power(powers, q, v, order):
    mat = powers[q]
    m = len(v)
    out = zero_vector(m, order)
    for j, c in enumerate(v):
        if c:
            out = vec_add(out, vec_scale([mat[i][j] for i in range(m)], c))
    return out


# ---------------------------------------------------------------------------
# catalog


def standard_filiform(n: int, order: int = 2) -> LieAlgebra:
    """[e1, ei] = e_{i+1} for i = 2..n-1."""
    if n < 2:
        raise ValidationError("standard filiform needs dimension >= 2")
    one = CycloScalar.one(order)
    brackets = {}
    for i in range(1, n - 1):
        brackets[(0, i)] = {i + 1: one}
        brackets[(i, 0)] = {i + 1: -one}
    return LieAlgebra(order, n, brackets)


def l5(order: int = 2) -> LieAlgebra:
    one = CycloScalar.one(order)
    brackets = {(0, 1): {2: one}, (1, 0): {2: -one},
                (0, 2): {3: one}, (2, 0): {3: -one},
                (1, 2): {4: one}, (2, 1): {4: -one}}
    return LieAlgebra(order, 5, brackets)


def l6(order: int = 2) -> LieAlgebra:
    one = CycloScalar.one(order)
    brackets = {(0, 2): {3: one}, (2, 0): {3: -one},
                (1, 2): {4: one}, (2, 1): {4: -one},
                (0, 1): {5: one}, (1, 0): {5: -one}}
    return LieAlgebra(order, 6, brackets)


def heisenberg(dim: int, order: int = 2) -> LieAlgebra:
    """Heisenberg algebra of odd dimension 2k+1: [e_{2i-1}, e_{2i}] = e_dim."""
    if dim < 3 or dim % 2 == 0:
        raise ValidationError("Heisenberg dimension must be odd and >= 3")
    one = CycloScalar.one(order)
    z = dim - 1
    brackets = {}
    for i in range(0, dim - 1, 2):
        brackets[(i, i + 1)] = {z: one}
        brackets[(i + 1, i)] = {z: -one}
    return LieAlgebra(order, dim, brackets)


def upper_triangular_nil(k: int, order: int = 2) -> LieAlgebra:
    """Strictly upper triangular k x k matrices; basis E_ij (i < j) ordered
    by diagonal then row."""
    if k < 2:
        raise ValidationError("need k >= 2")
    pairs = []
    for d in range(1, k):
        for i in range(k - d):
            pairs.append((i, i + d))
    idx = {p: t for t, p in enumerate(pairs)}
    one = CycloScalar.one(order)
    brackets = {}
    for t1, (i, j) in enumerate(pairs):
        for t2, (a, b) in enumerate(pairs):
            combo = {}
            if j == a:
                combo[idx[(i, b)]] = combo.get(idx[(i, b)], CycloScalar.zero(order)) + one
            if b == i:
                combo[idx[(a, j)]] = combo.get(idx[(a, j)], CycloScalar.zero(order)) - one
            combo = {t: c for t, c in combo.items() if c}
            if combo:
                brackets[(t1, t2)] = combo
    return LieAlgebra(order, len(pairs), brackets)


def abelian(n: int, order: int = 2) -> LieAlgebra:
    if n < 0:
        raise ValidationError("dimension must be nonnegative")
    return LieAlgebra(order, n, {})


def two_block(sizes, order: int = 2) -> LieAlgebra:
    """kx + V with ad x acting on V as chains of the given lengths."""
    sizes = tuple(int(s) for s in sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValidationError("chain sizes must be positive")
    one = CycloScalar.one(order)
    dim = 1 + sum(sizes)
    brackets = {}
    pos = 1
    for s in sizes:
        for t in range(s - 1):
            brackets[(0, pos + t)] = {pos + t + 1: one}
            brackets[(pos + t, 0)] = {pos + t + 1: -one}
        pos += s
    return LieAlgebra(order, dim, brackets)


def catalog(name: str, order: int = 2) -> LieAlgebra:
    """Named catalog access: L5, L6, filiform(n), heisenberg(n),
    upper_triangular_nil(k), abelian(n), two_block(a,b,...)."""
    name = name.strip()
    lowered = name.lower()
    if lowered == "l5":
        return l5(order)
    if lowered == "l6":
        return l6(order)
    if "(" in name and name.endswith(")"):
        head, args = name[:-1].split("(", 1)
        head = head.strip().lower()
        values = [int(a) for a in args.split(",")] if args.strip() else []
        if head == "filiform":
            return standard_filiform(values[0], order)
        if head == "heisenberg":
            return heisenberg(values[0], order)
        if head in ("upper_triangular_nil", "n"):
            return upper_triangular_nil(values[0], order)
        if head == "abelian":
            return abelian(values[0], order)
        if head == "two_block":
            return two_block(values, order)
    raise ValidationError(f"unknown catalog name {name!r}")
