import itertools

import pytest

from colorlie import lie
from colorlie.cyclo import CycloScalar
from colorlie.errors import ValidationError
from colorlie.pairings import scheunert_sigma
from colorlie.pbw import (EnvelopingEngine, PBWElement, check_scheunert_iso,
                          monomial_twist_scale, twisted_product)
from colorlie.pipeline import lie_to_color

from conftest import load_algebra


@pytest.fixture
def heis_engine():
    L = lie_to_color(lie.heisenberg(3))
    return EnvelopingEngine(L)


def gen(engine, i):
    return PBWElement.generator(engine.L.dim, engine.L.order, i)


def test_heisenberg_commutation_relation(heis_engine):
    e = heis_engine
    x, y, z = (gen(e, i) for i in range(3))
    # [x, y] = z in U: xy - yx = z
    assert e.multiply(x, y) - e.multiply(y, x) == z
    # z is central
    assert e.multiply(x, z) == e.multiply(z, x)


def test_normal_form_is_sorted(heis_engine):
    e = heis_engine
    nf = e.normal_form((2, 1, 0))  # e3 e2 e1
    for exps in nf:
        word = [i for i, k in enumerate(exps) for _ in range(k)]
        assert word == sorted(word)


def test_associativity_on_monomials():
    L = lie_to_color(lie.l5())
    e = EnvelopingEngine(L)
    gens = [gen(e, i) for i in range(5)]
    for a, b, c in itertools.product(gens[:3], repeat=3):
        assert e.multiply(e.multiply(a, b), c) == e.multiply(a, e.multiply(b, c))


def test_leftmost_rightmost_agree():
    L = lie_to_color(lie.l5())
    left = EnvelopingEngine(L, strategy="leftmost")
    right = EnvelopingEngine(L, strategy="rightmost")
    words = [(4, 3, 2, 1, 0), (2, 0, 1), (3, 1, 4, 0), (2, 2, 1, 1, 0, 0)]
    for w in words:
        assert left.normal_form(w) == right.normal_form(w)


def test_truncated_product():
    L = lie_to_color(lie.heisenberg(3))
    e = EnvelopingEngine(L)
    x, y = gen(e, 0), gen(e, 1)
    yx = e.multiply(y, x)  # = xy - z
    t = e.multiply_truncated(y, x, 1)
    assert t.truncated
    # the degree-1 commutator contribution -z survives the cutoff
    assert t.element == gen(e, 2).scale(-CycloScalar.one(e.L.order))
    full = e.multiply_truncated(y, x, 2)
    assert not full.truncated and full.element == yx


def test_odd_square_rule():
    sup = load_algebra("super_odd.alg").algebra
    e = EnvelopingEngine(sup)
    x = gen(e, 0)
    z = gen(e, 1)
    # x odd with [x, x] = z: in U, x*x = (1/2)[x, x] = z/2
    half = CycloScalar.from_rational(sup.order, 1) / \
        CycloScalar.from_rational(sup.order, 2)
    assert e.multiply(x, x) == z.scale(half)
    with pytest.raises(ValidationError):
        e.check_monomial((2, 0))  # not a PBW monomial: odd exponent > 1


def test_super_heisenberg_relations():
    sup = load_algebra("super_heisenberg.alg").algebra
    e = EnvelopingEngine(sup)
    x, y, z = (gen(e, i) for i in range(3))
    # odd x, y with [x, y] = z: xy + yx = z in U
    assert e.multiply(x, y) + e.multiply(y, x) == z
    assert e.multiply(x, x).is_zero()


def test_monomial_twist_scale_multiplicative_on_split_words():
    L = load_algebra("color_heisenberg.alg").algebra
    sigma = scheunert_sigma(L.epsilon)
    e = EnvelopingEngine(L)
    # c(uv) = c(u) c(v) sigma(deg u, deg v) for concatenated sorted words
    u, v = (1, 0, 0), (0, 1, 1)
    uv = tuple(a + b for a, b in zip(u, v))
    cu = monomial_twist_scale(e, sigma, u)
    cv = monomial_twist_scale(e, sigma, v)
    cuv = monomial_twist_scale(e, sigma, uv)
    assert cuv == cu * cv * sigma(e.group_degree(u), e.group_degree(v))


@pytest.mark.parametrize("name,bound", [
    ("color_heisenberg.alg", 3),
    ("super_odd.alg", 4),
    ("super_heisenberg.alg", 4),
])
def test_scheunert_iso(name, bound):
    L = load_algebra(name).algebra
    sigma = scheunert_sigma(L.epsilon)
    rep = check_scheunert_iso(L, sigma, bound)
    assert rep.ok, rep.mismatch
    assert rep.pairs_checked > 0


def test_iso_check_detects_wrong_cocycle():
    # products in U(L^sigma) must differ from plain (untwisted) products:
    # rewriting e2 e1 uses the twisted factor, not epsilon
    from colorlie.pairings import Cocycle
    L = load_algebra("color_heisenberg.alg").algebra
    sigma = scheunert_sigma(L.epsilon)
    e_tw = EnvelopingEngine(L.twist(sigma))
    u = PBWElement.generator(L.dim, L.order, 0)
    v = PBWElement.generator(L.dim, L.order, 1)
    lhs = e_tw.multiply(v, u)
    engine = EnvelopingEngine(L)
    trivial = Cocycle.trivial(L.group, L.order)
    rhs = twisted_product(L, trivial, v, u, engine)
    assert lhs != rhs
