"""Exact symbolic-numeric toolkit for spherical expansions of quaternionic
slice-regular functions."""

from .errors import (AllCoefficientsZero, ExpressionSyntaxError, IllConditioned,
                     NegativePowerAtZero, NotAUnit, NotRegular, RealBasePoint,
                     RealPointNotExtendable, SliceError, StepTooLarge,
                     TooFewSamples, UnknownIdentifier)
from .expansion import (Multiplicity, SphericalExpansion, delta_basis_term,
                        derivative_coefficients, eigenfunction_recurrence,
                        evaluate_expansion, frak_poly, laplacian, multiplicity,
                        spherical_coefficient_functions, spherical_coefficients,
                        verify_diff_equation)
from .numeric import (CassiniBall, NumericSliceFunction, cassini_contains,
                      convergence_report, exp_function, fd_slice_derivative,
                      fit_coefficients_oracle, oracle_sample_points,
                      wrap_slice_function)
from .parser import lower_numeric, lower_symbolic, parse_expression
from .quaternion import Quaternion
from .slicefn import (SliceFunction, char_poly, constant, dcds, dsdc,
                      from_polynomial, idempotent, iterate_op, j_function,
                      monomial_stems, slice_power, slice_product, variable)
from .stem import LaurentStem, StemPair

__version__ = "0.1.0"
