"""Exact homology of unordered configuration spaces of R^n and stability-range checks."""

from .certify import (
    Certificate,
    ComplementProfile,
    certify_range,
    certify_range_by_induction,
    dual_degree,
    rn_slope,
    x_vanishing_bound,
)
from .errors import (
    ConstraintViolation,
    InvalidBase,
    InvalidPrime,
    MismatchedBounds,
    OutOfBounds,
    OutOfRange,
)
from .generators import (
    FORMAL_S,
    AdmissibilityMode,
    EnumerationBounds,
    GeneratorSet,
    base_classes,
    custom_mode,
    enumerate_generators,
)
from .hilbert import (
    HilbertTable,
    Monomial,
    hilbert_by_enumeration,
    hilbert_by_product,
    monomial_basis,
    rational_table,
)
from .operations import (
    BROWDER_EE,
    E,
    Base,
    Bigrading,
    DLApplication,
    OperationWord,
    apply_dl,
    base_bigrading,
    browder_bigrading,
    check_application,
    is_unstable,
    parse_word,
    product_bigrading,
    word_bigrading,
)
from .oracle import c2_oracle, rp_homology
from .stability import (
    RangeFunction,
    check_theorem_range,
    empirical_range,
    empirical_ranges,
    verify_unstable_facts,
    z_half_report,
)

__version__ = "0.1.0"
