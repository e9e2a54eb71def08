"""Graded associative algebras and Lie color algebras as structure constants.

An algebra is a basis e_1..e_n with a degree map into an abelian group and a
sparse table of products/brackets: (i, j) -> {k: coefficient}.  Skew partners
are stored explicitly and cross-validated, never symmetrized silently.

Everything here is exact and exhaustive: validation walks all basis pairs
and triples, which is cheap at desk scale (n <= ~12).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abgroup import GroupElement, GroupSpec
from .cyclo import CycloScalar
from .errors import ConsistencyError, StructuralError, ValidationError
from .linalg import Echelon, unit_vector, vec_add, vec_scale, zero_vector
from .pairings import Cocycle, CommutationFactor, scheunert_sigma

Combo = dict  # {basis index: CycloScalar}


def _clean_combo(combo: Combo) -> Combo:
    return {k: c for k, c in combo.items() if c}


def _combo_add(a: Combo, b: Combo) -> Combo:
    out = dict(a)
    for k, c in b.items():
        if k in out:
            out[k] = out[k] + c
        else:
            out[k] = c
    return _clean_combo(out)


def _combo_scale(a: Combo, c: CycloScalar) -> Combo:
    return _clean_combo({k: c * v for k, v in a.items()})


@dataclass
class ValidationReport:
    subject: str
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def note(self, msg: str):
        self.violations.append(msg)

    def __str__(self):
        if self.ok:
            return f"{self.subject}: ok"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  - {v}" for v in self.violations]
        return "\n".join(lines)


@dataclass
class SeriesProfile:
    """Dimensions of the descending central series until stabilization."""

    dims: tuple[int, ...]
    bases: list  # list of lists of coordinate vectors

    @property
    def nilpotent(self) -> bool:
        return self.dims[-1] == 0


class _TableAlgebra:
    """Shared plumbing for bracket/multiplication tables."""

    def __init__(self, group, order, dim, degrees, table):
        self.group = group
        self.order = order
        self.dim = dim
        self.degrees = tuple(degrees)
        self.table = {key: _clean_combo(val) for key, val in table.items()
                      if _clean_combo(val)}
        if len(self.degrees) != dim:
            raise ValidationError(f"need {dim} degrees, got {len(self.degrees)}")
        for d in self.degrees:
            if d.spec != group:
                raise StructuralError("basis degree outside the grading group")
        for (i, j), combo in self.table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValidationError(f"table index ({i + 1},{j + 1}) out of range")
            for k in combo:
                if not 0 <= k < dim:
                    raise ValidationError(
                        f"product of e{i + 1}, e{j + 1} hits e{k + 1} outside the basis")

    def entry(self, i: int, j: int) -> Combo:
        return self.table.get((i, j), {})

    def product_vec(self, v, w) -> list:
        """Bilinear extension of the table to coordinate vectors."""
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

    def _grading_violations(self, report: ValidationReport, word: str):
        for (i, j), combo in self.table.items():
            want = self.degrees[i] + self.degrees[j]
            for k in combo:
                if self.degrees[k] != want:
                    report.note(
                        f"{word} of e{i + 1}, e{j + 1} has a component on "
                        f"e{k + 1} of degree {self.degrees[k]}, expected {want}")


class GradedAlgebra(_TableAlgebra):
    """Associative algebra with a compatible G-grading; optional unit combo."""

    def __init__(self, group, order, dim, degrees, mult, unit=None):
        super().__init__(group, order, dim, degrees, mult)
        self.unit = _clean_combo(unit) if unit else None

    def validate(self) -> ValidationReport:
        report = ValidationReport("graded algebra")
        self._grading_violations(report, "product")
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    ei = unit_vector(self.dim, i, self.order)
                    ej = unit_vector(self.dim, j, self.order)
                    ek = unit_vector(self.dim, k, self.order)
                    lhs = self.product_vec(self.product_vec(ei, ej), ek)
                    rhs = self.product_vec(ei, self.product_vec(ej, ek))
                    if lhs != rhs:
                        report.note(
                            f"associativity fails on (e{i + 1}, e{j + 1}, e{k + 1})")
        return report

    def twist(self, sigma: Cocycle) -> GradedAlgebra:
        """Cocycle twist: products rescaled by sigma on the factor degrees."""
        if sigma.group != self.group:
            raise StructuralError("cocycle lives on a different group")
        mult = {(i, j): _combo_scale(combo, sigma(self.degrees[i], self.degrees[j]))
                for (i, j), combo in self.table.items()}
        return GradedAlgebra(self.group, self.order, self.dim, self.degrees,
                             mult, self.unit)


class ColorAlgebra(_TableAlgebra):
    """Lie color algebra: graded brackets plus a commutation factor."""

    def __init__(self, group, order, dim, degrees, brackets,
                 epsilon: CommutationFactor):
        super().__init__(group, order, dim, degrees, brackets)
        if epsilon.group != group or epsilon.order != order:
            raise StructuralError("commutation factor on a different group/field")
        self.epsilon = epsilon

    @property
    def brackets(self):
        return self.table

    def bracket_vec(self, v, w) -> list:
        return self.product_vec(v, w)

    def validate(self) -> ValidationReport:
        report = ValidationReport("color algebra")
        self._grading_violations(report, "bracket")
        one = CycloScalar.one(self.order)
        for i in range(self.dim):
            for j in range(self.dim):
                eps = self.epsilon(self.degrees[i], self.degrees[j])
                want = _combo_scale(self.entry(j, i), -eps)
                if _clean_combo(self.entry(i, j)) != want:
                    report.note(
                        f"color skew symmetry fails on (e{i + 1}, e{j + 1}): "
                        f"[e{i + 1},e{j + 1}] != -eps * [e{j + 1},e{i + 1}]")
        for i in range(self.dim):
            ei = unit_vector(self.dim, i, self.order)
            for j in range(self.dim):
                ej = unit_vector(self.dim, j, self.order)
                eps = self.epsilon(self.degrees[i], self.degrees[j])
                for k in range(self.dim):
                    ek = unit_vector(self.dim, k, self.order)
                    lhs = self.bracket_vec(self.bracket_vec(ei, ej), ek)
                    rhs1 = self.bracket_vec(ei, self.bracket_vec(ej, ek))
                    rhs2 = vec_scale(self.bracket_vec(ej, self.bracket_vec(ei, ek)), eps)
                    if lhs != [a - b for a, b in zip(rhs1, rhs2)]:
                        report.note(
                            f"color Jacobi fails on (e{i + 1}, e{j + 1}, e{k + 1})")
        return report

    def twist(self, sigma: Cocycle) -> ColorAlgebra:
        """Bracket rescaled by sigma; the factor becomes epsilon * delta(sigma)."""
        if sigma.group != self.group:
            raise StructuralError("cocycle lives on a different group")
        brackets = {(i, j): _combo_scale(combo, sigma(self.degrees[i], self.degrees[j]))
                    for (i, j), combo in self.table.items()}
        new_eps = self.epsilon.product(sigma.delta())
        new_eps = CommutationFactor(self.group, self.order, new_eps.values)
        return ColorAlgebra(self.group, self.order, self.dim, self.degrees,
                            brackets, new_eps)

    def descending_central_series(self) -> SeriesProfile:
        """C^0 = L, C^{n+1} = [C^n, L]; exact spans via echelon elimination."""
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
            if len(nxt) == dims[-2]:
                break
            current = nxt
            if not nxt:
                break
        return SeriesProfile(tuple(dims), bases)

    def is_nilpotent(self) -> bool:
        return self.descending_central_series().nilpotent

    def parity_parts(self) -> tuple[list[int], list[int]]:
        """(even indices, odd indices); the even part must be bracket-closed."""
        even, odd = [], []
        for i, d in enumerate(self.degrees):
            (even if self.epsilon.is_even(d) else odd).append(i)
        even_set = set(even)
        for i in even:
            for j in even:
                for k in self.entry(i, j):
                    if k not in even_set:
                        raise ValidationError(
                            f"even part not closed: [e{i + 1},e{j + 1}] "
                            f"hits odd e{k + 1}")
        return even, odd

    def superize(self) -> tuple[ColorAlgebra, Cocycle]:
        """Twist by the Scheunert cocycle of epsilon; the result carries the
        super factor epsilon0 and the same nilpotency profile."""
        sigma = scheunert_sigma(self.epsilon)
        twisted = self.twist(sigma)
        eps0 = self.epsilon.epsilon0()
        if twisted.epsilon.values != eps0.values:
            raise ConsistencyError(
                "superization did not land on the super factor")
        before = self.descending_central_series()
        after = twisted.descending_central_series()
        if before.nilpotent and before.dims != after.dims:
            raise ConsistencyError(
                "cocycle twist changed the central series profile")
        return twisted, sigma


class GradedModule:
    """Finite-dimensional graded right module over a GradedAlgebra.

    action[i] is the p x p matrix of the right action of basis element e_i:
    row index = module basis element acted on, column = output component.
    """

    def __init__(self, algebra: GradedAlgebra, dim, degrees, action):
        self.algebra = algebra
        self.dim = dim
        self.degrees = tuple(degrees)
        self.action = [[list(row) for row in mat] for mat in action]
        if len(self.degrees) != dim:
            raise ValidationError("module degree map has wrong length")
        for d in self.degrees:
            if d.spec != algebra.group:
                raise StructuralError("module degree outside the grading group")
        if len(self.action) != algebra.dim:
            raise ValidationError("need one action matrix per algebra basis element")

    def act_vec(self, m, i: int) -> list:
        """m * e_i for a module coordinate vector m."""
        out = zero_vector(self.dim, self.algebra.order)
        for a, c in enumerate(m):
            if c:
                out = vec_add(out, vec_scale(self.action[i][a], c))
        return out

    def validate(self) -> ValidationReport:
        report = ValidationReport("graded module")
        for i in range(self.algebra.dim):
            for a in range(self.dim):
                want = self.degrees[a] + self.algebra.degrees[i]
                for b, c in enumerate(self.action[i][a]):
                    if c and self.degrees[b] != want:
                        report.note(
                            f"m{a + 1} * e{i + 1} has a component on m{b + 1} "
                            f"of degree {self.degrees[b]}, expected {want}")
        for a in range(self.dim):
            m = unit_vector(self.dim, a, self.algebra.order)
            for i in range(self.algebra.dim):
                for j in range(self.algebra.dim):
                    lhs = self.act_vec(self.act_vec(m, i), j)
                    rhs = zero_vector(self.dim, self.algebra.order)
                    for k, c in self.algebra.entry(i, j).items():
                        rhs = vec_add(rhs, vec_scale(self.act_vec(m, k), c))
                    if lhs != rhs:
                        report.note(
                            f"module axiom fails on (m{a + 1}, e{i + 1}, e{j + 1})")
        return report

    def twist(self, sigma: Cocycle) -> GradedModule:
        """m *_sigma a = sigma(|m|, |a|) m a, over the twisted algebra.

        The module degree goes first: with a ._sigma b = sigma(|a|,|b|) ab
        this is the unique order for which (m * a) * b = m * (a . b) holds
        for every bicharacter sigma (for the reversed order the two sides
        differ by sigma(|a|,|b|)/sigma(|b|,|a|)).
        """
        if sigma.group != self.algebra.group:
            raise StructuralError("cocycle lives on a different group")
        twisted_alg = self.algebra.twist(sigma)
        action = []
        for i in range(self.algebra.dim):
            mat = []
            for a in range(self.dim):
                s = sigma(self.degrees[a], self.algebra.degrees[i])
                mat.append([s * c for c in self.action[i][a]])
            action.append(mat)
        return GradedModule(twisted_alg, self.dim, self.degrees, action)

    def suspend(self, g: GroupElement) -> GradedModule:
        """Degree shift M(g)_h = M_{g+h}: degree(m) -> degree(m) - g."""
        if g.spec != self.algebra.group:
            raise StructuralError("suspension element outside the grading group")
        return GradedModule(self.algebra, self.dim,
                            tuple(d - g for d in self.degrees), self.action)

    def isomorphic_by_degree_scaling(self, other: GradedModule, mu) -> bool:
        """Exact check that m -> mu(|m|) m intertwines the two actions.

        Twisting and suspension commute only up to this kind of canonical
        isomorphism: the composites differ by sigma(g, |a|) on the action
        of a, which is absorbed by mu(d) = sigma(g, d).
        """
        if self.degrees != other.degrees:
            return False
        if self.algebra.table != other.algebra.table:
            return False
        for i in range(self.algebra.dim):
            for a in range(self.dim):
                for b, c in enumerate(self.action[i][a]):
                    if (mu(self.degrees[a]) * other.action[i][a][b]
                            != mu(self.degrees[b]) * c):
                        return False
        return True

    def same_tables(self, other: GradedModule) -> bool:
        return (self.degrees == other.degrees
                and self.action == other.action
                and self.algebra.table == other.algebra.table)
