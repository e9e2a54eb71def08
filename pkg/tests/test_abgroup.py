import pytest

from colorlie.abgroup import GroupHom, GroupSpec
from colorlie.errors import StructuralError, ValidationError


def test_normalization_wraps_torsion():
    G = GroupSpec(1, (2, 3))
    g = G.element([5, 3, -1])
    assert g.coords == (5, 1, 2)
    assert (g + g).coords == (10, 0, 1)
    assert (-g).coords == (-5, 1, 1)
    assert (g - g).is_zero()


def test_scale_and_generators():
    G = GroupSpec(0, (4,))
    g = G.generator(0)
    assert g.scale(4).is_zero()
    assert g.scale(7) == g.scale(3)
    assert G.generator_order(0) == 4
    assert GroupSpec(2).generator_order(1) is None


def test_finite_enumeration():
    G = GroupSpec(0, (2, 3))
    els = list(G.elements())
    assert len(els) == 6
    assert len({e.coords for e in els}) == 6
    with pytest.raises(StructuralError):
        list(GroupSpec(1, (2,)).elements())


def test_mixed_group_arithmetic_rejected():
    a = GroupSpec(1).element([1])
    b = GroupSpec(0, (2,)).element([1])
    with pytest.raises(StructuralError):
        a + b


def test_hom_respects_torsion():
    Z2 = GroupSpec(0, (2,))
    Z4 = GroupSpec(0, (4,))
    # g of order 2 cannot map to an order-4 element
    with pytest.raises(ValidationError):
        GroupHom(Z2, Z4, (Z4.element([1]),))
    h = GroupHom(Z2, Z4, (Z4.element([2]),))
    assert h(Z2.element([1])).coords == (2,)
    assert h(Z2.element([0])).is_zero()


def test_hom_from_free_group_unconstrained():
    Z = GroupSpec(1)
    Z2 = GroupSpec(0, (2,))
    h = GroupHom(Z, Z2, (Z2.element([1]),))
    assert h(Z.element([3])).coords == (1,)
    ident = GroupHom.identity(Z2)
    assert ident(Z2.element([1])).coords == (1,)
