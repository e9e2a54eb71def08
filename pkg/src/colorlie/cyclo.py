"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Scalars are represented by their canonical remainder modulo the N-th
cyclotomic polynomial Phi_N, as a vector of phi(N) rationals in the power
basis 1, zeta, ..., zeta^(phi(N)-1).  A single N is fixed per session (it
comes from the input file), so mixed-order arithmetic is a structural error
rather than a coercion.

Polynomials appear only as implementation detail here: dense tuples of
Fractions, constant term first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ParseError, StructuralError, ValidationError

# ---------------------------------------------------------------------------
# dense polynomial helpers over Q


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def _poly_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _poly_divmod(a, b):
    """Quotient and remainder of a by b over Q; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(_trim(rem)) >= len(b):
        rem = list(_trim(rem))
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, cb in enumerate(b):
            rem[shift + i] -= factor * cb
    return _trim(quot), _trim(rem)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Phi_n as a dense coefficient tuple, computed by the recursive division
    x^n - 1 = prod over d | n of Phi_d."""
    if n < 1:
        raise ValidationError("cyclotomic order must be positive")
    # x^n - 1
    poly = [Fraction(0)] * (n + 1)
    poly[0] = Fraction(-1)
    poly[n] = Fraction(1)
    poly = _trim(poly)
    for d in divisors(n):
        if d == n:
            continue
        poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
        if rem:
            raise AssertionError(f"Phi_{d} does not divide x^{n}-1")
    return poly


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@dataclass(frozen=True)
class CycloScalar:
    """An element of Q(zeta_order); coeffs has fixed length phi(order)."""

    order: int
    coeffs: tuple[Fraction, ...]

    # -- constructors -------------------------------------------------------

    @staticmethod
    def _reduce(order: int, poly) -> CycloScalar:
        phi = cyclotomic_polynomial(order)
        _, rem = _poly_divmod(_trim(poly), phi)
        deg = len(phi) - 1
        padded = tuple(rem[i] if i < len(rem) else Fraction(0) for i in range(deg))
        return CycloScalar(order, padded)

    @classmethod
    def from_rational(cls, order: int, value) -> CycloScalar:
        return cls._reduce(order, (Fraction(value),))

    @classmethod
    def zero(cls, order: int) -> CycloScalar:
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order: int) -> CycloScalar:
        return cls.from_rational(order, 1)

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> CycloScalar:
        """The root of unity zeta^(k mod order)."""
        k %= order
        poly = [Fraction(0)] * (k + 1)
        poly[k] = Fraction(1)
        return cls._reduce(order, poly)

    # -- structure ----------------------------------------------------------

    def _check(self, other: CycloScalar):
        if self.order != other.order:
            raise StructuralError(
                f"mixed cyclotomic orders {self.order} and {other.order}")

    def __bool__(self) -> bool:
        return any(c != 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValidationError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: CycloScalar) -> CycloScalar:
        self._check(other)
        return CycloScalar(self.order,
                           tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CycloScalar) -> CycloScalar:
        self._check(other)
        return CycloScalar(self.order,
                           tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycloScalar:
        return CycloScalar(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: CycloScalar) -> CycloScalar:
        self._check(other)
        return CycloScalar._reduce(self.order, _poly_mul(self.coeffs, other.coeffs))

    def scale(self, q) -> CycloScalar:
        q = Fraction(q)
        return CycloScalar(self.order, tuple(q * a for a in self.coeffs))

    def inverse(self) -> CycloScalar:
        """Multiplicative inverse via the extended Euclidean algorithm
        against Phi_order."""
        if not self:
            raise ZeroDivisionError("inverting zero cyclotomic scalar")
        phi = cyclotomic_polynomial(self.order)
        old_r, r = _trim(self.coeffs), phi
        old_s, s = (Fraction(1),), ()
        while r:
            q, rem = _poly_divmod(old_r, r)
            old_r, r = r, rem
            old_s, s = s, _poly_add(old_s, tuple(-c for c in _poly_mul(q, s)))
        # old_r = gcd(self, Phi); Phi is irreducible, so old_r is a nonzero constant
        if len(old_r) != 1:
            raise AssertionError("gcd with cyclotomic polynomial is not constant")
        inv = tuple(c / old_r[0] for c in old_s)
        return CycloScalar._reduce(self.order, inv)

    def __truediv__(self, other: CycloScalar) -> CycloScalar:
        return self * other.inverse()

    def __pow__(self, e: int) -> CycloScalar:
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloScalar.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- predicates ---------------------------------------------------------

    def root_of_unity_exponent(self) -> int | None:
        """The exponent k with self = zeta^k, or None when self is not a
        power of zeta.  Compares against all `order` candidates."""
        if not self:
            raise ValidationError("zero is not a root of unity")
        for k in range(self.order):
            if self == CycloScalar.zeta(self.order, k):
                return k
        return None

    def is_pm_one(self) -> bool:
        return self == CycloScalar.one(self.order) or self == -CycloScalar.one(self.order)

    def __str__(self):
        return format_scalar(self)


# ---------------------------------------------------------------------------
# scalar literal grammar:
#   expr := term ( ('+'|'-') term )*
#   term := [sign] (int | int '/' int) ['*' 'zeta' ['^' int]] | [sign] 'zeta' ['^' int]

_TOKEN = re.compile(r"\s*(zeta|\d+|[-+*/^])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"bad character in scalar literal: {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_scalar(text: str, order: int) -> CycloScalar:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty scalar literal")
    result = CycloScalar.zero(order)
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else None

    first = True
    while i < len(tokens):
        sign = 1
        if peek() in ("+", "-"):
            if peek() == "-":
                sign = -1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before {peek()!r} in {text!r}")
        first = False

        coeff = None
        if peek() is not None and peek().isdigit():
            num = int(tokens[i])
            i += 1
            if peek() == "/":
                i += 1
                if peek() is None or not peek().isdigit():
                    raise ParseError(f"expected denominator in {text!r}")
                coeff = Fraction(num, int(tokens[i]))
                i += 1
            else:
                coeff = Fraction(num)
            if peek() == "*":
                i += 1
                if peek() != "zeta":
                    raise ParseError(f"expected 'zeta' after '*' in {text!r}")
        if peek() == "zeta":
            i += 1
            power = 1
            if peek() == "^":
                i += 1
                psign = 1
                if peek() == "-":
                    psign = -1
                    i += 1
                if peek() is None or not peek().isdigit():
                    raise ParseError(f"expected exponent in {text!r}")
                power = psign * int(tokens[i])
                i += 1
            term = CycloScalar.zeta(order, power)
            if coeff is not None:
                term = term.scale(coeff)
        elif coeff is not None:
            term = CycloScalar.from_rational(order, coeff)
        else:
            raise ParseError(f"expected a number or 'zeta' in {text!r}")
        result = result + term.scale(sign)
    return result


def _format_coeff(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: CycloScalar) -> str:
    """Canonical rendering; round-trips through parse_scalar bit-exactly."""
    parts = []
    for k, c in enumerate(x.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _format_coeff(mag)
        else:
            z = "zeta" if k == 1 else f"zeta^{k}"
            body = z if mag == 1 else f"{_format_coeff(mag)}*{z}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    if not parts:
        return "0"
    return " ".join(parts)
