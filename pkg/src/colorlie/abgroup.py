"""Finitely generated abelian groups Z^r x Z/m_1 x ... x Z/m_s and their homomorphisms.

Elements are integer coordinate vectors against the fixed generating set:
first the r free generators, then the torsion generators.  Torsion
coordinates are always reduced into [0, m_i), so equality is plain tuple
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import StructuralError, ValidationError


@dataclass(frozen=True)
class GroupSpec:
    """Invariant-factor presentation of a finitely generated abelian group."""

    free_rank: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValidationError("free rank must be nonnegative")
        for m in self.invariant_factors:
            if m < 2:
                raise ValidationError(f"invariant factor {m} < 2")

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int:
        """Group order; only defined for finite groups."""
        if not self.is_finite():
            raise StructuralError("infinite group has no order")
        n = 1
        for m in self.invariant_factors:
            n *= m
        return n

    def normalize(self, coords) -> tuple[int, ...]:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ngens:
            raise StructuralError(
                f"expected {self.ngens} coordinates, got {len(coords)}")
        r = self.free_rank
        reduced = list(coords)
        for i, m in enumerate(self.invariant_factors):
            reduced[r + i] %= m
        return tuple(reduced)

    def element(self, coords) -> GroupElement:
        return GroupElement(self, self.normalize(coords))

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * self.ngens)

    def generator(self, i: int) -> GroupElement:
        coords = [0] * self.ngens
        coords[i] = 1
        return self.element(coords)

    def generators(self) -> list[GroupElement]:
        return [self.generator(i) for i in range(self.ngens)]

    def generator_order(self, i: int) -> int | None:
        """Order of generator i, or None for a free generator."""
        if i < self.free_rank:
            return None
        return self.invariant_factors[i - self.free_rank]

    def elements(self):
        """Iterate over all elements; finite groups only."""
        if not self.is_finite():
            raise StructuralError("cannot enumerate an infinite group")

        def rec(prefix, factors):
            if not factors:
                yield self.element(prefix)
                return
            for c in range(factors[0]):
                yield from rec(prefix + [c], factors[1:])

        yield from rec([], list(self.invariant_factors))

    def __str__(self):
        tor = ",".join(str(m) for m in self.invariant_factors)
        return f"group free={self.free_rank} torsion={tor}"


@dataclass(frozen=True)
class GroupElement:
    spec: GroupSpec
    coords: tuple[int, ...]

    def _check(self, other: GroupElement):
        if self.spec != other.spec:
            raise StructuralError("elements belong to different groups")

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return self.spec.element(a + b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> GroupElement:
        return self.spec.element(-a for a in self.coords)

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def scale(self, k: int) -> GroupElement:
        return self.spec.element(k * a for a in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by the images of the source generators.

    Torsion compatibility (m_i * images[i] = 0 in the target) is checked at
    construction; applying a validated hom can then never fail.
    """

    source: GroupSpec
    target: GroupSpec
    images: tuple[GroupElement, ...]

    def __post_init__(self):
        if len(self.images) != self.source.ngens:
            raise ValidationError(
                f"need {self.source.ngens} generator images, got {len(self.images)}")
        for img in self.images:
            if img.spec != self.target:
                raise StructuralError("generator image lies outside the target group")
        for i in range(self.source.ngens):
            m = self.source.generator_order(i)
            if m is not None and not self.images[i].scale(m).is_zero():
                raise ValidationError(
                    f"torsion incompatibility: order-{m} generator g{i + 1} "
                    f"maps to {self.images[i]} of larger order")

    def __call__(self, g: GroupElement) -> GroupElement:
        if g.spec != self.source:
            raise StructuralError("element does not belong to the hom's source")
        out = self.target.zero()
        for c, img in zip(g.coords, self.images):
            if c:
                out = out + img.scale(c)
        return out

    @staticmethod
    def identity(spec: GroupSpec) -> GroupHom:
        return GroupHom(spec, spec, tuple(spec.generators()))
