"""Exact characters and weight-polytope lattice sums for simple Lie algebras.

Everything exponent-like is a tuple of fundamental-weight labels; formal
sums keep exact integer coefficients; floats appear only in the numeric
cross-check layer.
"""

from .demazure import (
    apply_D_root,
    apply_D_simple,
    apply_d_root,
    apply_d_simple,
    apply_r_root,
    apply_r_simple,
    apply_word,
    character_demazure,
    character_demazure_sum,
)
from .formal import EvalPoint, FormalSum, evaluate
from .polysum import (
    DEFAULT_SEED,
    GenericityError,
    PolytopeExpansion,
    PolytopeSizeError,
    PolytopeSum,
    VerificationReport,
    brion_eval,
    character_freudenthal,
    dominant_weight_multiplicities,
    dominant_weights_below,
    numeric_formula_check,
    polytope_expansion,
    polytope_member,
    polytope_sum_a3,
    polytope_sum_demazure,
    polytope_sum_oracle,
    polytope_sum_rank2,
    sample_generic_sigmas,
    verify_polytope_formula,
    weyl_character_eval,
    weyl_dimension,
)
from .rootsys import (
    AlgebraId,
    GammaSequence,
    Root,
    RootSystem,
    Weight,
    build_root_system,
    gamma_sequence,
    pairing,
)
from .weyl import (
    WeylElement,
    WeylGroupTable,
    dominant_representative,
    longest_element_via_gammas,
    orbit,
    reflect_at_root,
    reflect_simple,
    weyl_group,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraId",
    "DEFAULT_SEED",
    "EvalPoint",
    "FormalSum",
    "GammaSequence",
    "GenericityError",
    "PolytopeExpansion",
    "PolytopeSizeError",
    "PolytopeSum",
    "Root",
    "RootSystem",
    "VerificationReport",
    "Weight",
    "WeylElement",
    "WeylGroupTable",
    "apply_D_root",
    "apply_D_simple",
    "apply_d_root",
    "apply_d_simple",
    "apply_r_root",
    "apply_r_simple",
    "apply_word",
    "brion_eval",
    "build_root_system",
    "character_demazure",
    "character_demazure_sum",
    "character_freudenthal",
    "dominant_representative",
    "dominant_weight_multiplicities",
    "dominant_weights_below",
    "evaluate",
    "gamma_sequence",
    "longest_element_via_gammas",
    "numeric_formula_check",
    "orbit",
    "pairing",
    "polytope_expansion",
    "polytope_member",
    "polytope_sum_a3",
    "polytope_sum_demazure",
    "polytope_sum_oracle",
    "polytope_sum_rank2",
    "reflect_at_root",
    "reflect_simple",
    "sample_generic_sigmas",
    "verify_polytope_formula",
    "weyl_character_eval",
    "weyl_dimension",
    "weyl_group",
]
