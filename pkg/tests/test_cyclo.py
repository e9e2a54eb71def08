import random
from fractions import Fraction

import pytest

from colorlie.cyclo import (CycloScalar, cyclotomic_polynomial, euler_phi,
                            format_scalar, parse_scalar, _poly_mul)
from colorlie.errors import ParseError


def test_cyclotomic_product_identity():
    # prod_{d | n} Phi_d(x) = x^n - 1, checked for every n up to 24
    for n in range(1, 25):
        prod = (Fraction(1),)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = _poly_mul(prod, cyclotomic_polynomial(d))
        want = [Fraction(0)] * (n + 1)
        want[0], want[n] = Fraction(-1), Fraction(1)
        assert list(prod) == want, f"n={n}"


def test_cyclotomic_degrees_match_phi():
    for n in (1, 2, 3, 4, 6, 8, 12, 15, 24):
        assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_small_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (Fraction(-1), Fraction(1))
    assert cyclotomic_polynomial(2) == (Fraction(1), Fraction(1))
    assert cyclotomic_polynomial(4) == (Fraction(1), Fraction(0), Fraction(1))
    # Phi_12 = x^4 - x^2 + 1
    assert cyclotomic_polynomial(12) == tuple(
        Fraction(c) for c in (1, 0, -1, 0, 1))


def test_zeta_relations():
    z = CycloScalar.zeta(12)
    one = CycloScalar.one(12)
    assert z ** 12 == one
    assert z ** 6 == -one
    assert (z ** 4) ** 3 == one
    assert z ** 4 != one
    # Phi_12(zeta) = 0: zeta^4 = zeta^2 - 1
    assert z ** 4 == z ** 2 - one


def test_field_axioms_randomized():
    rng = random.Random(7)
    N = 12
    phi = euler_phi(N)

    def rand_scalar():
        coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                  for _ in range(phi)]
        out = CycloScalar.zero(N)
        z = CycloScalar.one(N)
        zeta = CycloScalar.zeta(N)
        for c in coeffs:
            out = out + z.scale(c)
            z = z * zeta
        return out

    for _ in range(25):
        a, b, c = rand_scalar(), rand_scalar(), rand_scalar()
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a + b == b + a
        if a:
            assert a * a.inverse() == CycloScalar.one(N)
            assert (a ** -2) * a * a == CycloScalar.one(N)


def test_rational_detection():
    x = CycloScalar.from_rational(4, Fraction(3, 2))
    assert x.is_rational() and x.rational_value() == Fraction(3, 2)
    assert not CycloScalar.zeta(4).is_rational()
    assert CycloScalar.zeta(4) ** 2 == -CycloScalar.one(4)


def test_root_of_unity_exponent():
    z = CycloScalar.zeta(8, 3)
    assert z.root_of_unity_exponent() == 3
    assert CycloScalar.one(8).root_of_unity_exponent() == 0
    assert CycloScalar.from_rational(8, 2).root_of_unity_exponent() is None
    assert (-CycloScalar.one(8)).is_pm_one()


@pytest.mark.parametrize("text", [
    "1", "-1", "2/3", "-5/7", "zeta", "zeta^3", "-zeta^2",
    "1/2*zeta", "1 + zeta", "2 - 3/4*zeta^2", "-1/2 + zeta - zeta^3",
])
def test_parse_format_roundtrip(text):
    x = parse_scalar(text, 8)
    assert parse_scalar(format_scalar(x), 8) == x


def test_parse_rejects_junk():
    for bad in ("", "zeta^", "1 +", "2//3", "zeta*zeta", "x"):
        with pytest.raises(ParseError):
            parse_scalar(bad, 8)


def test_format_is_canonical():
    a = parse_scalar("zeta + 1", 4)
    b = parse_scalar("1 + zeta", 4)
    assert format_scalar(a) == format_scalar(b)
