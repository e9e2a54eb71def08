"""PBW rewriting in the enveloping algebra of a Lie color algebra.

U(L) is T(L) modulo the relations x y - eps(|x|,|y|) y x - [x,y] for
homogeneous x, y.  Ordered monomials e_1^{a_1} ... e_n^{a_n} (with a_i <= 1
for odd generators) form a basis; multiplication normalizes the concatenated
word by the rewrite rules

    e_j e_i -> eps(d_j, d_i) e_i e_j + [e_j, e_i]   (j > i)
    e e     -> (1/2) [e, e]                          (e odd)

Each rewrite lowers (total degree, inversion count) lexicographically, so
normalization terminates without any truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abgroup import GroupElement
from .color import ColorAlgebra
from .cyclo import CycloScalar
from .errors import StructuralError, ValidationError
from .pairings import Cocycle


class PBWElement:
    """Sparse linear combination of exponent-vector monomials."""

    def __init__(self, dim: int, order: int, terms: dict | None = None):
        self.dim = dim
        self.order = order
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, dim: int, order: int) -> PBWElement:
        return cls(dim, order)

    @classmethod
    def unit(cls, dim: int, order: int) -> PBWElement:
        return cls(dim, order, {(0,) * dim: CycloScalar.one(order)})

    @classmethod
    def monomial(cls, dim: int, order: int, exps,
                 coeff: CycloScalar | None = None) -> PBWElement:
        exps = tuple(exps)
        return cls(dim, order, {exps: coeff if coeff is not None
                                else CycloScalar.one(order)})

    @classmethod
    def generator(cls, dim: int, order: int, i: int) -> PBWElement:
        exps = tuple(1 if k == i else 0 for k in range(dim))
        return cls.monomial(dim, order, exps)

    def __add__(self, other: PBWElement) -> PBWElement:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, CycloScalar.zero(self.order)) + c
        return PBWElement(self.dim, self.order, out)

    def __sub__(self, other: PBWElement) -> PBWElement:
        return self + other.scale(-CycloScalar.one(self.order))

    def scale(self, c: CycloScalar) -> PBWElement:
        return PBWElement(self.dim, self.order,
                          {m: c * v for m, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, PBWElement) and self.dim == other.dim
                and self.terms == other.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(f"e{i + 1}" + (f"^{e}" if e > 1 else "")
                            for i, e in enumerate(m) if e) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def monomial_word(exps) -> tuple[int, ...]:
    word = []
    for i, e in enumerate(exps):
        word.extend([i] * e)
    return tuple(word)


def word_exponents(word, dim: int) -> tuple[int, ...]:
    exps = [0] * dim
    for i in word:
        exps[i] += 1
    return tuple(exps)


@dataclass
class TruncatedProduct:
    element: PBWElement
    truncated: bool


class EnvelopingEngine:
    """Normal-form multiplication in U(L) for a fixed color algebra.

    `strategy` picks which bad adjacent pair is rewritten first; any
    strategy reaches the same normal form (exercised as a confluence
    property), leftmost is the default and the one that gets cached.
    """

    def __init__(self, L: ColorAlgebra, strategy: str = "leftmost"):
        if strategy not in ("leftmost", "rightmost"):
            raise ValidationError(f"unknown strategy {strategy!r}")
        self.L = L
        self.strategy = strategy
        self._cache: dict[tuple[int, ...], dict] = {}
        self._odd = [not L.epsilon.is_even(d) for d in L.degrees]
        self._half = CycloScalar.from_rational(L.order, Fraction(1, 2))

    def is_odd_generator(self, i: int) -> bool:
        return self._odd[i]

    def check_monomial(self, exps):
        for i, e in enumerate(exps):
            if e < 0:
                raise ValidationError("negative exponent")
            if e > 1 and self._odd[i]:
                raise ValidationError(
                    f"odd generator e{i + 1} with exponent {e} > 1")

    def _bad_position(self, word):
        n = len(word)
        rng = range(n - 1) if self.strategy == "leftmost" else range(n - 2, -1, -1)
        for t in rng:
            a, b = word[t], word[t + 1]
            if a > b or (a == b and self._odd[a]):
                return t
        return None

    def normal_form(self, word) -> dict:
        """Normal form of a generator word as {exponent tuple: coefficient}."""
        word = tuple(word)
        cached = self._cache.get(word)
        if cached is not None:
            return dict(cached)
        t = self._bad_position(word)
        if t is None:
            result = {word_exponents(word, self.L.dim): CycloScalar.one(self.L.order)}
            self._cache[word] = dict(result)
            return result
        a, b = word[t], word[t + 1]
        head, tail = word[:t], word[t + 2:]
        result: dict = {}

        def accumulate(sub: dict, factor: CycloScalar):
            for m, c in sub.items():
                prod = factor * c
                if m in result:
                    result[m] = result[m] + prod
                else:
                    result[m] = prod

        if a == b:
            # odd square: e e = (1/2) [e, e]
            for k, c in self.L.entry(a, a).items():
                accumulate(self.normal_form(head + (k,) + tail), self._half * c)
        else:
            eps = self.L.epsilon(self.L.degrees[a], self.L.degrees[b])
            accumulate(self.normal_form(head + (b, a) + tail), eps)
            for k, c in self.L.entry(a, b).items():
                accumulate(self.normal_form(head + (k,) + tail), c)
        result = {m: c for m, c in result.items() if c}
        self._cache[word] = dict(result)
        return result

    def multiply(self, u: PBWElement, v: PBWElement) -> PBWElement:
        out = PBWElement.zero(self.L.dim, self.L.order)
        for m1, c1 in u.terms.items():
            self.check_monomial(m1)
            w1 = monomial_word(m1)
            for m2, c2 in v.terms.items():
                self.check_monomial(m2)
                nf = self.normal_form(w1 + monomial_word(m2))
                out = out + PBWElement(self.L.dim, self.L.order, nf).scale(c1 * c2)
        return out

    def multiply_truncated(self, u: PBWElement, v: PBWElement,
                           cutoff: int) -> TruncatedProduct:
        """Full product with terms of total degree > cutoff discarded; the
        flag records whether anything was dropped."""
        full = self.multiply(u, v)
        kept = {m: c for m, c in full.terms.items() if sum(m) <= cutoff}
        return TruncatedProduct(PBWElement(self.L.dim, self.L.order, kept),
                                len(kept) != len(full.terms))

    def group_degree(self, exps) -> GroupElement:
        out = self.L.group.zero()
        for i, e in enumerate(exps):
            if e:
                out = out + self.L.degrees[i].scale(e)
        return out

    def monomials_up_to(self, max_degree: int) -> list[tuple[int, ...]]:
        """All PBW monomials of total degree <= max_degree."""
        out = []

        def rec(prefix, remaining):
            if len(prefix) == self.L.dim:
                out.append(tuple(prefix))
                return
            i = len(prefix)
            cap = 1 if self._odd[i] else remaining
            for e in range(min(cap, remaining) + 1):
                rec(prefix + [e], remaining - e)

        rec([], max_degree)
        return sorted(out, key=lambda m: (sum(m), m))


def twisted_product(L: ColorAlgebra, sigma: Cocycle, u: PBWElement,
                    v: PBWElement, engine: EnvelopingEngine | None = None) -> PBWElement:
    """The product of U(L)^sigma: each monomial pair is multiplied in U(L)
    and scaled by sigma of the pair's group degrees."""
    if sigma.group != L.group:
        raise StructuralError("cocycle lives on a different group")
    engine = engine or EnvelopingEngine(L)
    out = PBWElement.zero(L.dim, L.order)
    for m1, c1 in u.terms.items():
        for m2, c2 in v.terms.items():
            s = sigma(engine.group_degree(m1), engine.group_degree(m2))
            prod = engine.multiply(PBWElement.monomial(L.dim, L.order, m1),
                                   PBWElement.monomial(L.dim, L.order, m2))
            out = out + prod.scale(s * c1 * c2)
    return out


def monomial_twist_scale(engine: EnvelopingEngine, sigma: Cocycle,
                         exps) -> CycloScalar:
    """Normalization scalar of the isomorphism U(L^sigma) -> U(L)^sigma on an
    ordered monomial: the identity on generators sends e_{i_1} ... e_{i_k}
    (product in U(L^sigma)) to prod_{a<b} sigma(d_{i_a}, d_{i_b}) times the
    same PBW monomial of U(L)."""
    word = monomial_word(exps)
    out = CycloScalar.one(engine.L.order)
    for a in range(len(word)):
        for b in range(a + 1, len(word)):
            out = out * sigma(engine.L.degrees[word[a]],
                              engine.L.degrees[word[b]])
    return out


@dataclass
class IsoReport:
    ok: bool
    pairs_checked: int
    degree_bound: int
    mismatch: tuple | None  # (u exps, v exps, lhs, rhs) on failure


def check_scheunert_iso(L: ColorAlgebra, sigma: Cocycle,
                        degree_bound: int) -> IsoReport:
    """Machine check of U(L^sigma) ~ U(L)^sigma on a truncation.

    For every PBW monomial pair (u, v) with deg u + deg v <= degree_bound,
    compares the image of u *_{U(L^sigma)} v under the generator
    correspondence with the U(L)^sigma product of the images.  Untruncated:
    the normal forms are computed exactly.
    """
    twisted = L.twist(sigma)
    e_twisted = EnvelopingEngine(twisted)
    e_plain = EnvelopingEngine(L)
    monomials = e_plain.monomials_up_to(degree_bound)
    checked = 0
    for mu in monomials:
        du = sum(mu)
        for mv in monomials:
            if du + sum(mv) > degree_bound:
                continue
            u = PBWElement.monomial(L.dim, L.order, mu)
            v = PBWElement.monomial(L.dim, L.order, mv)
            # left side: multiply in U(L^sigma), then apply the iso scalars
            prod = e_twisted.multiply(u, v)
            lhs = PBWElement(L.dim, L.order, {
                m: monomial_twist_scale(e_plain, sigma, m) * c
                for m, c in prod.terms.items()})
            # right side: images of u and v, multiplied in U(L)^sigma
            su = monomial_twist_scale(e_plain, sigma, mu)
            sv = monomial_twist_scale(e_plain, sigma, mv)
            rhs = twisted_product(L, sigma, u, v, e_plain).scale(su * sv)
            checked += 1
            if lhs != rhs:
                return IsoReport(False, checked, degree_bound,
                                 (mu, mv, str(lhs), str(rhs)))
    return IsoReport(True, checked, degree_bound, None)
