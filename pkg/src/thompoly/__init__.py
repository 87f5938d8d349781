"""Exact Schur-function expansions of Thom polynomials."""

from .chern import (
    ZERO,
    BundleRing,
    FormalBundle,
    ProductSchurExpansion,
    StableExpansion,
    a1_thom,
    chern_class,
    direct_sum,
    dual,
    expand_product_schur,
    jets,
    segre_series,
    stable_expand,
    super_schur,
    sym_power,
    tensor_line,
    verify_a1_identity,
)
from .errors import (
    BoxOverflow,
    BoxTooSmall,
    CorankExceedsRank,
    DegreeOverflow,
    DomainError,
    ExprSyntaxError,
    NotSupersymmetric,
    ThomError,
)
from .grassmannian import GrassmannRing, extract_coefficient, giambelli, integrate, schubert_multiply
from .partitions import (
    Partition,
    box_complement,
    conjugate,
    contains,
    partitions_contained_in,
    partitions_in_box,
    staircase,
)
from .symmetric import SchurVector, jacobi_trudi, lr_coefficients, monomial_oracle, schur_multiply
from .thom import binomial_det, check_positivity, corank_thom, d_positivity_table

__version__ = "0.1.0"
