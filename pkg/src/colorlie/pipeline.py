"""End-to-end diamond decision for Lie color algebras.

Chains superization, the parity split, extraction of the even part as an
ordinary Lie algebra and the two-route diamond decision into one call, and
keeps every intermediate object for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgroup import GroupSpec
from .color import ColorAlgebra
from .errors import ValidationError
from .lie import (DEFAULT_SEED, DiamondVerdict, LieAlgebra, diamond_check,
                  from_color_even)
from .pairings import Cocycle, CommutationFactor


def lie_to_color(g: LieAlgebra, group: GroupSpec | None = None,
                 degrees=None) -> ColorAlgebra:
    """View an ordinary Lie algebra as a color algebra (trivial factor over
    the trivial group unless a grading is supplied)."""
    group = group or GroupSpec(0, ())
    if degrees is None:
        degrees = tuple(group.zero() for _ in range(g.dim))
    eps = CommutationFactor.trivial(group, g.order)
    return ColorAlgebra(group, g.order, g.dim, degrees, g.brackets, eps)


@dataclass
class PipelineResult:
    sigma: Cocycle
    superized: ColorAlgebra
    even_indices: list
    odd_indices: list
    even_part: LieAlgebra
    verdict: DiamondVerdict


def diamond_color_pipeline(L: ColorAlgebra,
                           seed: int = DEFAULT_SEED) -> PipelineResult:
    """superize -> parity split -> even part -> diamond_check."""
    if not L.is_nilpotent():
        raise ValidationError(
            "the diamond characterization requires a nilpotent algebra")
    superized, sigma = L.superize()
    even, odd = superized.parity_parts()
    even_part = from_color_even(superized)
    verdict = diamond_check(even_part, seed=seed) if even_part.dim else \
        DiamondVerdict(True, "abelian-after-strip", 0, None, None, (0, 0), True)
    return PipelineResult(sigma, superized, even, odd, even_part, verdict)
