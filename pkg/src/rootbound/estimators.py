"""scikit-learn compatible wrappers around the bound and oracle kernels.

``X`` is always a coefficient matrix: one polynomial per row, ascending
degree, all rows of the same degree. Complex entries are allowed.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bounds import DEFAULT_REL_TOL, METHODS, bound_matrix
from .exceptions import DegreeError
from .oracle import MAX_ITER, find_roots_batch
from .validation import check_coefficient_matrix

__all__ = ["RootBoundTransformer", "AberthRootFinder", "overestimation"]


class _CoefficientInput:
    def _validate(self, X, reset: bool):
        A = check_coefficient_matrix(X)
        if reset:
            self.n_features_in_ = A.shape[1]
            self.degree_ = A.shape[1] - 1
        elif A.shape[1] != self.n_features_in_:
            raise DegreeError(
                f"X has {A.shape[1]} coefficients per row, but the estimator was "
                f"fitted with {self.n_features_in_}"
            )
        return A


class RootBoundTransformer(_CoefficientInput, TransformerMixin, BaseEstimator):
    """Map polynomials to their root-modulus bounds.

    Parameters
    ----------
    methods : tuple of str, default all of ``METHODS``
        Output columns, in order. Any of ``cauchy``, ``fujiwara``, ``tau``,
        ``gamma``, ``combined`` and ``gamma_expanded``.
    rel_tol : float, default 1e-13
        Relative accuracy of the Cauchy bound bisection.

    Attributes
    ----------
    n_features_in_ : int
        Coefficients per row seen in ``fit``.
    degree_ : int
        Polynomial degree seen in ``fit``.
    """

    def __init__(self, methods=METHODS, rel_tol=DEFAULT_REL_TOL):
        self.methods = methods
        self.rel_tol = rel_tol

    def fit(self, X, y=None):
        A = self._validate(X, reset=True)
        # fail at fit time, not transform time, on bad configuration
        bound_matrix(A[:1], self.methods, rel_tol=self.rel_tol)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        A = self._validate(X, reset=False)
        out = bound_matrix(A, self.methods, rel_tol=self.rel_tol)
        return np.column_stack([out[m] for m in self.methods])

    def get_feature_names_out(self, input_features=None):
        return np.asarray(list(self.methods), dtype=object)


class AberthRootFinder(_CoefficientInput, RegressorMixin, BaseEstimator):
    """Predict the largest root modulus of each polynomial.

    ``predict`` returns the maximum root modulus; :meth:`find_roots` returns
    the full :class:`~rootbound.oracle.RootSet` per row.
    """

    def __init__(self, max_iter=MAX_ITER):
        self.max_iter = max_iter

    def fit(self, X, y=None):
        self._validate(X, reset=True)
        return self

    def find_roots(self, X):
        check_is_fitted(self, "n_features_in_")
        A = self._validate(X, reset=False)
        return find_roots_batch(A, self.max_iter)

    def predict(self, X):
        return np.array([rs.max_modulus for rs in self.find_roots(X)])


def overestimation(bounds, mu, degree=None):
    """Elementwise ``bounds / mu`` (or ``bounds / (degree * mu)``), NaN where mu is 0."""
    bounds = np.asarray(bounds, dtype=float)
    mu = np.asarray(mu, dtype=float)
    den = mu if degree is None else degree * mu
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(den > 0, bounds / np.where(den > 0, den, 1.0), np.nan)
