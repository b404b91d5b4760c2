"""Input validation helpers shared by the functional API and the estimators.

scikit-learn's ``check_array`` refuses complex input, so coefficient data is
validated here instead.
"""
from __future__ import annotations

import math
from numbers import Real

import numpy as np

from .exceptions import DomainError, InvalidPolynomialError


def check_coefficients(coeffs, *, allow_zero_leading=False) -> np.ndarray:
    """Return ``coeffs`` as a 1-D complex128 array in ascending-degree order.

    Raises InvalidPolynomialError for fewer than two entries, non-finite
    values, or (unless ``allow_zero_leading``) a zero leading coefficient.
    """
    try:
        arr = np.asarray(coeffs, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InvalidPolynomialError(f"coefficients are not numeric: {exc}") from None
    if arr.ndim != 1:
        raise InvalidPolynomialError(f"expected a 1-D coefficient vector, got shape {arr.shape}")
    if arr.size < 2:
        raise InvalidPolynomialError("a polynomial needs degree >= 1 (at least two coefficients)")
    if not np.all(np.isfinite(arr)):
        raise InvalidPolynomialError("coefficients must be finite")
    if not allow_zero_leading and arr[-1] == 0:
        raise InvalidPolynomialError("leading coefficient is zero")
    return arr


def check_coefficient_matrix(X, *, monic=False) -> np.ndarray:
    """Validate a batch of same-degree polynomials, one per row.

    Rows are ascending-degree coefficient vectors. With ``monic=True`` every
    row is divided by its leading coefficient.
    """
    try:
        arr = np.array(X, dtype=np.complex128, ndmin=2)
    except (TypeError, ValueError) as exc:
        raise InvalidPolynomialError(f"coefficients are not numeric: {exc}") from None
    if arr.ndim != 2:
        raise InvalidPolynomialError(f"expected a 2-D coefficient matrix, got shape {arr.shape}")
    if arr.shape[1] < 2:
        raise InvalidPolynomialError("each row needs at least two coefficients")
    if not np.all(np.isfinite(arr)):
        raise InvalidPolynomialError("coefficients must be finite")
    lead = arr[:, -1]
    if np.any(lead == 0):
        bad = int(np.flatnonzero(lead == 0)[0])
        raise InvalidPolynomialError(f"row {bad} has a zero leading coefficient")
    if monic:
        arr = arr / lead[:, None]
        arr[:, -1] = 1.0
    return arr


def check_positive(value, name: str) -> float:
    """Return ``value`` as float, raising DomainError unless finite and > 0."""
    if isinstance(value, bool) or not isinstance(value, (Real, np.floating, np.integer)):
        raise DomainError(f"{name} must be a positive real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise DomainError(f"{name} must be a positive real number, got {value!r}")
    return value
