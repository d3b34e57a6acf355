"""Matrix norms induced by random vectors.

A family of norms on n-by-n complex matrices, one for each iid random
vector with enough moments and each even degree d: on Hermitian matrices
the d-th power of the norm is a cumulant-weighted symmetric polynomial in
the eigenvalues, and the same partition sum over trace words extends it to
all square matrices.  The package evaluates these norms by three
independent routes, emits their symbolic trace-polynomial form, implements
the positive-definite CHS combinations H_{d,alpha}, and verifies
everything against a seeded Monte Carlo oracle.
"""

from .cumulants import (
    CumulantVector,
    DistributionSpec,
    bernoulli_number,
    cumulants_to_moments,
    distribution_cumulants,
    distribution_moments,
    kappa_product,
    moments_to_cumulants,
    parse_distribution,
)
from .errors import MomentExistenceError, NonHermitianError, ParseError, PreconditionError
from .matrixcore import (
    Matrix,
    frobenius_norm,
    hermitian_eigenvalues,
    is_hermitian,
    is_majorized,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
    trace_powers,
)
from .normengine import (
    TracePolynomial,
    bell_value,
    circle_extension_check,
    general_norm_pow,
    hermitian_norm_pow,
    norm,
    normal_norm_pow_closed,
    pareto_norm_pow_multinomial,
    series_norm_pow,
    symbolic_formula,
    t_pi,
)
from .oracle import (
    McEstimate,
    khintchine_check,
    khintchine_constant,
    mc_norm,
    mc_norm_pow,
    sample,
)
from .partitions import Partition, enumerate_partitions, hunter_coefficient, y_of, z_of
from .series import TruncatedSeries
from .sympoly import (
    bernoulli_norm_hermitian,
    chs,
    chs_powersum_identity_check,
    hunter_poly,
    hunter_poly_recursive,
    monomial_sym,
    power_sum_product,
)

__version__ = "0.1.0"

__all__ = [
    "CumulantVector",
    "DistributionSpec",
    "Matrix",
    "McEstimate",
    "MomentExistenceError",
    "NonHermitianError",
    "ParseError",
    "Partition",
    "PreconditionError",
    "TracePolynomial",
    "TruncatedSeries",
    "bell_value",
    "bernoulli_norm_hermitian",
    "bernoulli_number",
    "chs",
    "chs_powersum_identity_check",
    "circle_extension_check",
    "cumulants_to_moments",
    "distribution_cumulants",
    "distribution_moments",
    "enumerate_partitions",
    "frobenius_norm",
    "general_norm_pow",
    "hermitian_eigenvalues",
    "hermitian_norm_pow",
    "hunter_coefficient",
    "hunter_poly",
    "hunter_poly_recursive",
    "is_hermitian",
    "is_majorized",
    "kappa_product",
    "khintchine_check",
    "khintchine_constant",
    "load_matrix",
    "matrix_from_json",
    "matrix_to_json",
    "mc_norm",
    "mc_norm_pow",
    "moments_to_cumulants",
    "monomial_sym",
    "norm",
    "normal_norm_pow_closed",
    "pareto_norm_pow_multinomial",
    "parse_distribution",
    "power_sum_product",
    "sample",
    "series_norm_pow",
    "symbolic_formula",
    "t_pi",
    "trace_powers",
    "y_of",
    "z_of",
]
