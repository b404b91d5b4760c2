"""A priori upper bounds for the largest root modulus of complex polynomials.

The central bound is :func:`gamma_bound`, obtained from Cassini ovals of a
diagonally scaled companion matrix; it overestimates the largest root
modulus by at most a factor ``1.4655 n`` and the Cauchy bound by at most
``sqrt(9.45)``.
"""
from .bounds import (BoundReport, bound_matrix, cauchy_bound, combined_bound, fujiwara_bound,
                     full_report, gamma_bound, gamma_bound_expanded, tau)
from .estimators import AberthRootFinder, RootBoundTransformer, overestimation
from .exceptions import (CoefficientRangeError, ConfigurationError, DegreeError, DomainError,
                         InvalidPolynomialError, RootBoundError, UnsupportedGeometryError)
from .localization import (CassiniOval, ScaledCompanion, build_companion, oval_circumradius,
                           oval_max_modulus, oval_union_contains, ovals_at, reduced_row_sums)
from .oracle import RootSet, find_roots, find_roots_batch, max_modulus, viete_check
from .polynomial import (MonicPolynomial, Polynomial, evaluate, extremal_family, make_monic,
                         random_polynomial, scale)

__version__ = "0.1.0"
