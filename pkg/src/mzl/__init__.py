"""Motivic zeta laboratory: exact symmetric-power series, Hankel rationality
tests, and genus separation for formal variety classes."""

from mzl._kernels import BACKEND
from mzl.algebra import (
    EPolynomial,
    HankelScanner,
    InsufficientPrefix,
    LaurentClass,
    SeriesPrefix,
    UniPoly,
    binomial,
    hankel_det,
    laurent_mul_lpow,
)
from mzl.claim import (
    InvalidSurface,
    expand_determinant,
    genus_of_term,
    irrationality_witness,
    pg_sym_surface,
    verify_claim,
)
from mzl.hodge import (
    HodgeDiamond,
    InvalidDiamond,
    InvalidParams,
    curve,
    diamond_product,
    e_polynomial,
    genus_polynomial,
    make_standard,
    point,
    projective_space,
    stable_invariance_check,
    surface,
)
from mzl.rationality import (
    NonUnitLeadingTerm,
    RationalCertificate,
    check_global,
    determinantal_test,
    implication_chain_probe,
    pointwise_test,
    reconstruct_certificate,
)
from mzl.zeta import (
    SpecializationMap,
    ZeroDenominator,
    ZetaPrefix,
    invert_L,
    specialize,
    sym_coefficients,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EPolynomial",
    "HankelScanner",
    "HodgeDiamond",
    "InsufficientPrefix",
    "InvalidDiamond",
    "InvalidParams",
    "InvalidSurface",
    "LaurentClass",
    "NonUnitLeadingTerm",
    "RationalCertificate",
    "SeriesPrefix",
    "SpecializationMap",
    "UniPoly",
    "ZeroDenominator",
    "ZetaPrefix",
    "binomial",
    "check_global",
    "curve",
    "determinantal_test",
    "diamond_product",
    "e_polynomial",
    "expand_determinant",
    "genus_of_term",
    "genus_polynomial",
    "hankel_det",
    "implication_chain_probe",
    "invert_L",
    "irrationality_witness",
    "laurent_mul_lpow",
    "make_standard",
    "pg_sym_surface",
    "point",
    "pointwise_test",
    "projective_space",
    "reconstruct_certificate",
    "specialize",
    "stable_invariance_check",
    "surface",
    "sym_coefficients",
    "verify_claim",
    "__version__",
]
