"""Exact-arithmetic characteristic classes, zeta-regularized determinants of
circle operators, fermionic normalization checks, and topological index
evaluation on characteristic-number descriptors."""

__version__ = "0.1.0"

from .exact_algebra import (
    GradedPolynomial,
    Rational,
    TaylorSeries,
    bernoulli,
    genus_series,
    poly_mul,
    rational_arith,
    symmetric_reduce,
)
from .genera import (
    ChernCharacter,
    GenusClass,
    a_hat_class,
    chern_character,
    chern_to_pontryagin,
    l_class,
    multiplicative_sequence,
    signature_integrand_identity_check,
    todd_class,
)
from .zeta_det import (
    OperatorSpec,
    RegularizedDet,
    det_apbc_curvature_block,
    det_apbc_first_order,
    det_pbc_curvature_block,
    det_pbc_laplacian,
    fermion_partition,
    oracle_product,
    regularized_det,
)
from .clifford import (
    ComplexRational,
    GammaRep,
    GrassmannElement,
    berezin_integrate,
    build_gamma,
    chirality,
    normalization_psi2,
)
from .index_engine import (
    BundleDescriptor,
    IndexReport,
    ManifoldDescriptor,
    de_rham_euler,
    dolbeault_index,
    evaluate,
    hirzebruch_consistency,
    signature_index,
    spin_index,
)
from .catalog import (
    CatalogEntry,
    builtin_catalog,
    catalog_entry,
    load_descriptor,
    save_descriptor,
)
from .verification import VerifyReport, run_verification

__all__ = [
    "__version__",
    "Rational",
    "rational_arith",
    "bernoulli",
    "TaylorSeries",
    "genus_series",
    "GradedPolynomial",
    "poly_mul",
    "symmetric_reduce",
    "GenusClass",
    "ChernCharacter",
    "multiplicative_sequence",
    "l_class",
    "a_hat_class",
    "todd_class",
    "chern_character",
    "chern_to_pontryagin",
    "signature_integrand_identity_check",
    "OperatorSpec",
    "RegularizedDet",
    "det_pbc_laplacian",
    "det_pbc_curvature_block",
    "det_apbc_curvature_block",
    "det_apbc_first_order",
    "fermion_partition",
    "oracle_product",
    "regularized_det",
    "ComplexRational",
    "GrassmannElement",
    "GammaRep",
    "build_gamma",
    "chirality",
    "berezin_integrate",
    "normalization_psi2",
    "ManifoldDescriptor",
    "BundleDescriptor",
    "IndexReport",
    "evaluate",
    "signature_index",
    "dolbeault_index",
    "spin_index",
    "de_rham_euler",
    "hirzebruch_consistency",
    "CatalogEntry",
    "builtin_catalog",
    "catalog_entry",
    "load_descriptor",
    "save_descriptor",
    "VerifyReport",
    "run_verification",
]
