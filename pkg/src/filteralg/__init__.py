"""Exact toolkit for graded algebras cut out by upward-closed sets of partitions."""

from .partitions import (
    Partition,
    c_stat,
    check_partition,
    conjugate,
    contains,
    display_partition,
    enumerate_partitions,
    format_partition,
    hook_rectangle,
    in_hook,
    parse_partition,
)
from .lr import LRExpansion, count_lr_tableaux, lr_coefficient, outer_product
from .dims import (
    DimensionRecord,
    dimension_record,
    f_lambda,
    f_lambda_by_recursion,
    hs_eval,
    iter_super_tableaux,
    schur_dim,
    schur_dim_by_enumeration,
    w_dim,
)
from .filters import Filter, classical_identity_degree, minimize
from .series import (
    DimensionSeries,
    GrowthReport,
    dim_quotient,
    series,
    verify_growth,
)
from .oracle import (
    CapExceeded,
    MultilinearPoly,
    SuperBasis,
    TensorSubspace,
    br_cube,
    check_annihilation,
    check_ideal,
    commutator_product,
    ee_identity_kernel_dim,
    evaluate_identity,
    f_I,
    full_symmetrizer,
    generated_ideal,
    ideal_subspace,
    is_identity_EE,
    is_identity_EE_sampled,
    module_W,
    multilinear_from_free,
    multilinearize,
    named_poly,
    popov5a,
    popov5b,
    s3_cubed,
    sign_symmetrizer,
    standard_poly,
    standard_tableau,
    star_action,
    symmetrizer,
    tableau_symmetrizer,
)

__version__ = "0.1.0"
