import itertools
import random

import pytest

from colorlie.abgroup import GroupSpec
from colorlie.cyclo import CycloScalar
from colorlie.errors import ValidationError
from colorlie.pairings import (Bicharacter, Cocycle, CommutationFactor,
                               check_cocycle_identity,
                               generator_closed_sample, sample_elements,
                               scheunert_sigma)


def one(N):
    return CycloScalar.one(N)


def commutation_factor_family(group, N):
    """All commutation factors with +-1 generator values (diagonal free,
    off-diagonal pairs (v, 1/v) with v = +-1)."""
    n = group.ngens
    o, m = one(N), -one(N)
    diag_choices = []
    for i in range(n):
        mi = group.generator_order(i)
        if mi is not None and mi % 2:
            diag_choices.append([o])  # odd order forces +1
        else:
            diag_choices.append([o, m])
    off = [(i, j) for i in range(n) for j in range(i + 1, n)]
    off_choices = []
    for i, j in off:
        mi, mj = group.generator_order(i), group.generator_order(j)
        if (mi is not None and mi % 2) or (mj is not None and mj % 2):
            off_choices.append([o])
        else:
            off_choices.append([o, m])
    for diag in itertools.product(*diag_choices):
        for vals in itertools.product(*off_choices):
            table = [[o] * n for _ in range(n)]
            for i in range(n):
                table[i][i] = diag[i]
            for (i, j), v in zip(off, vals):
                table[i][j] = v
                table[j][i] = v.inverse()
            yield CommutationFactor(group, N,
                                    tuple(tuple(r) for r in table))


FAMILY_GROUPS = [
    (GroupSpec(0, (2,)), 4),
    (GroupSpec(0, (2, 2)), 4),
    (GroupSpec(0, (2, 3)), 12),
    (GroupSpec(1, (2,)), 4),
]


@pytest.mark.parametrize("group,N", FAMILY_GROUPS,
                         ids=["Z2", "Z2xZ2", "Z2xZ3", "ZxZ2"])
def test_scheunert_sigma_lands_on_super_factor(group, N):
    rng = random.Random(3)
    if group.is_finite():
        samples = list(group.elements())
        assert len(samples) <= 36
    else:
        samples = generator_closed_sample(group, rng, extra=10)
    for eps in commutation_factor_family(group, N):
        sigma = scheunert_sigma(eps)
        got = eps.product(sigma.delta())
        eps0 = eps.epsilon0()
        assert got.values == eps0.values
        # and pointwise on the sample, belt and suspenders
        for a in samples:
            for b in samples:
                assert got(a, b) == eps0(a, b)


@pytest.mark.parametrize("group,N", FAMILY_GROUPS,
                         ids=["Z2", "Z2xZ2", "Z2xZ3", "ZxZ2"])
def test_epsilon0_agrees_with_parity_definition(group, N):
    rng = random.Random(5)
    samples = (list(group.elements()) if group.is_finite()
               else generator_closed_sample(group, rng, extra=10))
    for eps in commutation_factor_family(group, N):
        eps0 = eps.epsilon0()
        o = one(N)
        for a in samples:
            for b in samples:
                want = -o if (not eps.is_even(a) and not eps.is_even(b)) else o
                assert eps0(a, b) == want


def test_commutation_factor_identity_on_elements():
    G = GroupSpec(0, (2, 2))
    for eps in commutation_factor_family(G, 4):
        for a in G.elements():
            for b in G.elements():
                assert eps(a, b) * eps(b, a) == one(4)
            assert eps(a, a).is_pm_one()


def test_bimultiplicativity():
    G = GroupSpec(1, (4,))
    N = 8
    z = CycloScalar.zeta(N, 2)  # order 4, well defined against torsion 4
    b = Bicharacter.from_values(G, N, {(0, 1): z, (1, 0): z, (1, 1): z})
    rng = random.Random(1)
    pts = sample_elements(G, rng, 8)
    for a in pts:
        for c in pts:
            for d in pts:
                assert b(a + c, d) == b(a, d) * b(c, d)
                assert b(d, a + c) == b(d, a) * b(d, c)


def test_torsion_well_definedness_enforced():
    G = GroupSpec(0, (2,))
    N = 8
    with pytest.raises(ValidationError):
        Bicharacter.from_values(G, N, {(0, 0): CycloScalar.zeta(N)})


def test_commutation_factor_rejects_bad_tables():
    G = GroupSpec(0, (2, 2))
    N = 4
    m = -one(N)
    with pytest.raises(ValidationError):
        # not mutually inverse off the diagonal
        CommutationFactor.from_values(G, N, {(0, 1): m})


def test_cocycle_identity_holds_for_bicharacters():
    G = GroupSpec(1, (2, 3))
    N = 12
    z3 = CycloScalar.zeta(N, 4)
    sigma = Cocycle.from_values(G, N, {(0, 2): z3, (1, 0): -one(N)})
    rep = check_cocycle_identity(sigma, samples=40, rng=random.Random(9))
    assert rep.ok, rep.witness
    assert rep.triples_checked > 64


def test_delta_is_antisymmetric():
    G = GroupSpec(0, (2, 2))
    N = 4
    sigma = Cocycle.from_values(G, N, {(1, 0): -one(N)})
    d = sigma.delta()
    for a in G.elements():
        for b in G.elements():
            assert d(a, b) * d(b, a) == one(N)
        assert d(a, a) == one(N)
