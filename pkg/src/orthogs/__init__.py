"""Classical orthogonal polynomials from determinantal Gram-Schmidt, in exact arithmetic."""

from .classical import (
    MomentFunctional,
    Polynomial,
    closed_hermite,
    closed_jacobi,
    closed_laguerre,
    gs_polynomial,
    hermite_parity_gs,
    moment,
    preset,
    scaling_check,
    to_monomial,
)
from .detkit import (
    ScaledDeterminant,
    bareiss_det,
    det_beta,
    det_gamma,
    eset,
    eset_ratio,
    pochhammer_matrix_det,
    pochhammer_ratio_det,
    ratio_det_recursive_oracle,
    vandermonde_delta,
)
from .exterior import InnerProductSpace, MultiVector, gs_hodge, hodge_star, pform_inner, volume_form, wedge
from .gschmidt import MomentTable, gram_minor, gs_determinant, gs_recursive, orthogonality_check
from .ratcore import GammaProduct, QuadExtScalar, format_rational, gamma_canonicalize, parse_rational, pochhammer

__version__ = "0.1.0"
