"""colorlie: exact computations with G-graded Lie color algebras.

Structure-constant algebras over cyclotomic fields Q(zeta_N), cocycle
twists, Scheunert superization, truncated enveloping-algebra checks of
U(L^sigma) = U(L)^sigma, and a two-route decision procedure for the
diamond property of nilpotent Lie algebras.
"""

from .abgroup import GroupElement, GroupHom, GroupSpec
from .color import ColorAlgebra, GradedAlgebra, GradedModule, ValidationReport
from .cyclo import CycloScalar, cyclotomic_polynomial, format_scalar, parse_scalar
from .errors import (ColorLieError, ConsistencyError, ParseError,
                     StructuralError, ValidationError)
from .fileformat import (AlgebraFile, emit_algebra_file, emit_pairing_file,
                         parse_algebra_file, parse_pairing_file)
from .gradings import (Grading, induce_grading, is_coarsening,
                       standard_grading, validate_grading,
                       verify_grading_isomorphism)
from .lie import (DiamondVerdict, IndexReport, LieAlgebra, catalog,
                  decompose_codim1, diamond_check, from_color_even,
                  has_codim1_abelian_ideal, lie_index,
                  strip_central_abelian_factor)
from .pairings import (Bicharacter, Cocycle, CommutationFactor,
                       check_cocycle_identity, scheunert_sigma)
from .pbw import EnvelopingEngine, PBWElement, check_scheunert_iso
from .pipeline import diamond_color_pipeline, lie_to_color

__version__ = "0.1.0"
