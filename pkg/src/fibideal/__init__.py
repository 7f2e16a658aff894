"""Exact arithmetic for the polynomials C_n(q) that count the
codimension-n right ideals of the Weyl algebra A_1 over a q-element
field, and for the integer sequence lambda_n they specialize to.

Everything here is integer-exact: quadratic integers stand in for the
golden-ratio powers, Laurent polynomials for the counting polynomials,
and truncated integer series for the generating functions.  No floats.
"""

from .core import (
    CnPolynomial,
    ConsistencyError,
    IdentityCheck,
    LambdaResult,
    cn_poly,
    lambda_divisor,
    lambda_eval,
    lambda_product,
    lattice_count,
    theorem_sides,
    verify_gf_identity,
    verify_lattice,
    verify_shape,
    verify_sigma,
    verify_specializations,
    verify_theorem,
)
from .numtheory import (
    DivisorProfile,
    divisor_in_window,
    divisor_profile,
    divisors,
    fib,
    lucas,
    sigma,
    window_bounds_check,
)
from .rings import (
    ALPHA,
    ALPHA_INV,
    GaussInt,
    LaurentPoly,
    NotInvertibleError,
    QuadInt,
    alpha_pow,
)
from .series import (
    TruncSeries,
    cn_product_series,
    f_series,
    lambda_product_series,
    symbolic_cn_product_series,
)
from .verify import SUITES, SuiteReport, run_suite, run_suites

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "ALPHA_INV",
    "CnPolynomial",
    "ConsistencyError",
    "DivisorProfile",
    "GaussInt",
    "IdentityCheck",
    "LambdaResult",
    "LaurentPoly",
    "NotInvertibleError",
    "QuadInt",
    "SUITES",
    "SuiteReport",
    "TruncSeries",
    "alpha_pow",
    "cn_poly",
    "cn_product_series",
    "divisor_in_window",
    "divisor_profile",
    "divisors",
    "f_series",
    "fib",
    "lambda_divisor",
    "lambda_eval",
    "lambda_product",
    "lambda_product_series",
    "lattice_count",
    "lucas",
    "run_suite",
    "run_suites",
    "sigma",
    "symbolic_cn_product_series",
    "theorem_sides",
    "verify_gf_identity",
    "verify_lattice",
    "verify_shape",
    "verify_sigma",
    "verify_specializations",
    "verify_theorem",
    "window_bounds_check",
]
