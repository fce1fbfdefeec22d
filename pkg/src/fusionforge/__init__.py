"""Fusion rings of simple Lie algebras at a positive integer level.

Two independent computation routes (affine Weyl folding and the
Verlinde formula on the S-matrix), plus exact verification tooling for
the known fusion-ideal generator families.
"""

from .rootdata import (
    LieType,
    RootSystem,
    build_root_system,
    inner_product,
    is_dominant,
    parse_lie_type,
    theta_pairing,
)
from .weyl import dual_weight, to_dominant, weyl_orbit, weyl_orbit_signed, weyl_order
from .affine import (
    BETA_ZERO,
    FoldOutcome,
    WallWitness,
    affine_fold,
    in_fundamental_alcove,
    wall_witness,
)
from .repring import (
    DimensionCapError,
    SingularPointError,
    char_poly,
    dominant_weight_multiplicities,
    dynkin_index,
    eval_char_numeric,
    poly_eval,
    tensor_decompose,
    weight_system,
    weyl_dim,
)
from .fusion import (
    FusionPoint,
    FusionTable,
    LevelContext,
    NonIntegralCoefficientError,
    SMatrix,
    enumerate_plevel,
    fusion_kacwalton,
    fusion_points,
    fusion_table,
    fusion_verlinde,
    s_matrix,
    sl2_fusion,
)
from .ideals import (
    SOURCES,
    GeneratorSpec,
    VarietyComparison,
    VerificationReport,
    basic_weight_index,
    generator_list,
    solve_rank2_system,
    standard_sweep,
    tabulated_wall_root,
    verify_equality_rank2,
    verify_inclusion,
)

__version__ = "0.1.0"
