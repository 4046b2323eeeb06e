"""Exact invariants of symmetric powers of surface cotangent bundles.

Computes Chern data of symmetric powers of rank-2 bundles, Riemann-Roch
Euler characteristics, and the counting criteria deciding when the
pluri-cotangent maps of a surface of general type are generically finite;
ships constructors for three example families and a lattice scanner for the
(c1^2, c2) plane.  All arithmetic is exact.
"""

from .catalog import (
    Family,
    FamilySurface,
    abelian3fold_divisor,
    abelian4fold_ci,
    pq_threshold_h,
    product_quotient,
)
from .chern import (
    ChiIdentityReport,
    Rank2BundleData,
    Rational,
    SurfaceInvariants,
    SymPowerChernData,
    abc_bruteforce,
    abc_closed,
    chi_sym_cotangent,
    chi_sym_cotangent_via_rr,
    default_chi_grid,
    rr_chi,
    sym_power_c1_factor,
    sym_power_c2,
    sym_power_c2_split,
    sym_power_chern_data,
    verify_chi_identity,
)
from .criteria import (
    CriterionReport,
    DiscriminantAnalysis,
    ThresholdResult,
    Verdict,
    classify,
    corollary_c_threshold,
    deg_psi_upper_bound,
    degree_relation,
    discriminant_analysis,
    gauss_divisibility_check,
    h0_lower_bound,
    quadratic_Q,
    theorem_b_holds,
    veronese_bound,
)
from .errors import (
    HypothesisNotMetError,
    InconsistentInputError,
    InvalidPolarizationError,
    NoetherViolationError,
    PluricotError,
    PreconditionError,
    ResourceLimitError,
    SegreNotPositiveError,
)
from .geography import GeographyCell, classify_point, scan, to_csv, write_csv

__version__ = "0.1.0"

__all__ = [
    "ChiIdentityReport",
    "CriterionReport",
    "DiscriminantAnalysis",
    "Family",
    "FamilySurface",
    "GeographyCell",
    "HypothesisNotMetError",
    "InconsistentInputError",
    "InvalidPolarizationError",
    "NoetherViolationError",
    "PluricotError",
    "PreconditionError",
    "Rank2BundleData",
    "Rational",
    "ResourceLimitError",
    "SegreNotPositiveError",
    "SurfaceInvariants",
    "SymPowerChernData",
    "ThresholdResult",
    "Verdict",
    "abc_bruteforce",
    "abc_closed",
    "abelian3fold_divisor",
    "abelian4fold_ci",
    "chi_sym_cotangent",
    "chi_sym_cotangent_via_rr",
    "classify",
    "classify_point",
    "corollary_c_threshold",
    "default_chi_grid",
    "deg_psi_upper_bound",
    "degree_relation",
    "discriminant_analysis",
    "gauss_divisibility_check",
    "h0_lower_bound",
    "pq_threshold_h",
    "product_quotient",
    "quadratic_Q",
    "rr_chi",
    "scan",
    "sym_power_c1_factor",
    "sym_power_c2",
    "sym_power_c2_split",
    "sym_power_chern_data",
    "theorem_b_holds",
    "to_csv",
    "verify_chi_identity",
    "veronese_bound",
    "write_csv",
]
