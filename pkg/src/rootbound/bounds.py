"""Absolute upper bounds for the largest root modulus of a polynomial.

Every bound is implemented once, vectorized over the rows of a matrix of
coefficient moduli (one monic polynomial per row, ascending degree). The
scalar functions are thin wrappers that normalize a single polynomial first.

Implemented bounds, with ``n`` the degree and ``a_k`` the monic coefficients:

* Cauchy ``rho``: unique positive root of ``z**n - sum |a_k| z**k``.
* Fujiwara ``F = 2 max(|a_{n-1}|, |a_{n-2}|**(1/2), ..., (|a_0|/2)**(1/n))``.
* Cassini-oval bound ``gamma`` built on the scaling parameter ``tau``.
* ``combined = min(gamma, F)``.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .exceptions import CoefficientRangeError, DegreeError
from .polynomial import as_polynomial, make_monic
from .validation import check_coefficient_matrix

__all__ = [
    "BoundReport",
    "cauchy_bound",
    "fujiwara_bound",
    "tau",
    "gamma_bound",
    "gamma_bound_expanded",
    "combined_bound",
    "full_report",
    "bound_matrix",
    "METHODS",
    "SQRT_945",
]

METHODS = ("cauchy", "fujiwara", "tau", "gamma", "combined")

SQRT_945 = math.sqrt(9.45)
_SQRT_315 = math.sqrt(3.15)

MAX_COEFF_MODULUS = 1e300
# |a_{n-1}|**2 appears under a square root in gamma
MAX_SUBLEADING_MODULUS = 1e150

DEFAULT_REL_TOL = 1e-13
DEFAULT_MAX_ITER = 200


# --------------------------------------------------------------------------
# row-wise kernels; M holds moduli of monic polynomials, shape (m, n + 1)

def _check_range(M: np.ndarray) -> None:
    if M[:, :-1].size and np.max(M[:, :-1]) > MAX_COEFF_MODULUS:
        raise CoefficientRangeError(
            f"coefficient modulus exceeds {MAX_COEFF_MODULUS:g} after monic normalization"
        )


def _check_gamma_range(M: np.ndarray) -> None:
    if np.max(M[:, -2]) > MAX_SUBLEADING_MODULUS:
        raise CoefficientRangeError(
            f"|a_(n-1)| exceeds {MAX_SUBLEADING_MODULUS:g}; gamma would overflow"
        )


def _require_degree(n: int, minimum: int, what: str) -> None:
    if n < minimum:
        raise DegreeError(f"{what} requires degree >= {minimum}, got {n}")


def _root_terms(M: np.ndarray, divisors: np.ndarray) -> np.ndarray:
    """``(|a_{n-k}| / d_k) ** (1/k)`` for k = 1..n, columns ordered by k.

    Evaluated as ``exp(log(.)/k)``; zero moduli map to exactly 0.
    """
    n = M.shape[1] - 1
    lower = M[:, -2::-1]  # column k-1 holds |a_{n-k}|
    k = np.arange(1, n + 1, dtype=float)
    with np.errstate(divide="ignore"):
        logs = np.log(lower) - np.log(divisors)
    out = np.exp(logs / k)
    out[lower == 0] = 0.0
    return out


def _cauchy_rows(M: np.ndarray, rel_tol: float = DEFAULT_REL_TOL,
                 max_iter: int = DEFAULT_MAX_ITER) -> np.ndarray:
    n = M.shape[1] - 1
    lower = M[:, :-1]
    trivial = ~np.any(lower > 0, axis=1)
    # the sign of z**(-n) f(z) = 1 - sum |a_i| z**(i-n) equals that of f(z);
    # summing the terms in log space cannot overflow for large n
    with np.errstate(divide="ignore"):
        log_a = np.log(lower)
    powers = (n - np.arange(n)).astype(float)

    def at_or_above_root(z):
        with np.errstate(over="ignore", divide="ignore"):
            s = np.exp(log_a - powers * np.log(z)[:, None]).sum(axis=1)
        return s <= 1.0

    # [0, 1 + max|a_i|] always brackets rho, but for large n it is so wide
    # that bisection stalls; max_k |a_{n-k}|**(1/k) <= rho <= F(p) is a
    # ratio-2 bracket, used wherever its endpoints check out numerically
    hi = 1.0 + lower.max(axis=1)
    lo = np.zeros_like(hi)
    ones = np.ones(n)
    tight_lo = _root_terms(M, ones).max(axis=1) * (1.0 - 1e-12)
    tight_hi = np.minimum(hi, _fujiwara_rows(M) * (1.0 + 1e-12))
    valid = ~trivial & (tight_lo > 0)
    valid &= ~at_or_above_root(np.where(valid, tight_lo, 1.0)) & at_or_above_root(
        np.where(valid, tight_hi, 1.0))
    lo = np.where(valid, tight_lo, lo)
    hi = np.where(valid, tight_hi, hi)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        upper = at_or_above_root(mid)  # f(mid) >= 0, so mid >= rho
        hi = np.where(upper, mid, hi)
        lo = np.where(upper, lo, mid)
        if np.all((hi - lo <= rel_tol * hi) | trivial):
            break
    out = 0.5 * (lo + hi)
    out[trivial] = 0.0
    return out


def _fujiwara_rows(M: np.ndarray) -> np.ndarray:
    n = M.shape[1] - 1
    divisors = np.ones(n)
    divisors[-1] = 2.0  # only the constant term is halved
    return 2.0 * _root_terms(M, divisors).max(axis=1)


def _tau_rows(M: np.ndarray) -> np.ndarray:
    n = M.shape[1] - 1
    divisors = np.ones(n)
    divisors[2] = 2.15
    if n >= 4:
        divisors[3] = 2.0
    return _root_terms(M, divisors)[:, 2:].max(axis=1)


def _gamma_rows(M: np.ndarray, t: Optional[np.ndarray] = None) -> np.ndarray:
    t = _tau_rows(M) if t is None else t
    a1 = M[:, -2]
    a2 = M[:, -3]
    t2 = t * t
    disk = _SQRT_315 * np.sqrt(t2 + np.maximum(a2, 2.0 * t2))
    shifted = 0.5 * (a1 + np.sqrt(a1 * a1 + 4.0 * (t2 + np.maximum(a2, 2.15 * t2))))
    return np.maximum(disk, shifted)


def _gamma_expanded_rows(M: np.ndarray, t: Optional[np.ndarray] = None) -> np.ndarray:
    t = _tau_rows(M) if t is None else t
    a1 = M[:, -2]
    a2 = M[:, -3]
    t2 = t * t
    terms = np.stack([
        SQRT_945 * t,
        _SQRT_315 * np.sqrt(t2 + a2),
        0.5 * (a1 + np.sqrt(a1 * a1 + 12.6 * t2)),
        0.5 * (a1 + np.sqrt(a1 * a1 + 4.0 * t2 + 4.0 * a2)),
    ])
    return terms.max(axis=0)


def bound_matrix(X, methods=METHODS, *, rel_tol: float = DEFAULT_REL_TOL) -> dict:
    """Compute bounds for a batch of same-degree polynomials.

    Parameters
    ----------
    X : array_like, shape (m, n + 1)
        One coefficient vector per row, ascending degree; rows need not be
        monic.
    methods : iterable of str
        Subset of ``METHODS``; ``"gamma_expanded"`` is also accepted.

    Returns
    -------
    dict mapping method name to an array of shape (m,).
    """
    A = check_coefficient_matrix(X, monic=True)
    M = np.abs(A)
    _check_range(M)
    n = M.shape[1] - 1
    methods = tuple(methods)
    unknown = set(methods) - set(METHODS) - {"gamma_expanded"}
    if unknown:
        raise ValueError(f"unknown bound method(s): {sorted(unknown)}")
    needs_tau = {"tau", "gamma", "combined", "gamma_expanded"} & set(methods)
    if needs_tau:
        _require_degree(n, 3, "/".join(sorted(needs_tau)))
    out = {}
    t = _tau_rows(M) if needs_tau else None
    if {"gamma", "combined", "gamma_expanded"} & set(methods):
        _check_gamma_range(M)
    for name in methods:
        if name == "cauchy":
            out[name] = _cauchy_rows(M, rel_tol)
        elif name == "fujiwara":
            out[name] = _fujiwara_rows(M)
        elif name == "tau":
            out[name] = t
        elif name == "gamma":
            out[name] = _gamma_rows(M, t)
        elif name == "gamma_expanded":
            out[name] = _gamma_expanded_rows(M, t)
        elif name == "combined":
            g = out["gamma"] if "gamma" in out else _gamma_rows(M, t)
            f = out["fujiwara"] if "fujiwara" in out else _fujiwara_rows(M)
            out[name] = np.minimum(g, f)
    return out


# --------------------------------------------------------------------------
# scalar API

def _moduli(p) -> np.ndarray:
    M = np.abs(make_monic(as_polynomial(p)).coeffs)[None, :]
    _check_range(M)
    return M


def cauchy_bound(p, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """Cauchy bound: the positive root of ``z**n - sum |a_k| z**k``.

    Found by bisection on ``[0, 1 + max |a_k|]`` to relative accuracy
    ``rel_tol``. Returns exactly 0 for ``z**n``.
    """
    if not 0 < rel_tol < 1:
        raise ValueError(f"rel_tol must lie in (0, 1), got {rel_tol!r}")
    return float(_cauchy_rows(_moduli(p), rel_tol)[0])


def fujiwara_bound(p) -> float:
    """Fujiwara bound ``2 max(|a_{n-1}|, ..., |a_1|**(1/(n-1)), (|a_0|/2)**(1/n))``."""
    return float(_fujiwara_rows(_moduli(p))[0])


def tau(p) -> float:
    """Scaling parameter of the Cassini-oval bound (degree >= 3).

    ``max((|a_{n-3}|/2.15)**(1/3), (|a_{n-4}|/2)**(1/4), |a_{n-5}|**(1/5), ..., |a_0|**(1/n))``
    """
    M = _moduli(p)
    _require_degree(M.shape[1] - 1, 3, "tau")
    return float(_tau_rows(M)[0])


def gamma_bound(p) -> float:
    """Cassini-oval root bound, compact two-term form (degree >= 3)."""
    M = _moduli(p)
    _require_degree(M.shape[1] - 1, 3, "gamma_bound")
    _check_gamma_range(M)
    return float(_gamma_rows(M)[0])


def gamma_bound_expanded(p) -> float:
    """Cassini-oval root bound as the maximum of the four per-case radii.

    Identical to :func:`gamma_bound` in exact arithmetic; kept separate so
    the two forms can be checked against each other.
    """
    M = _moduli(p)
    _require_degree(M.shape[1] - 1, 3, "gamma_bound_expanded")
    _check_gamma_range(M)
    return float(_gamma_expanded_rows(M)[0])


def combined_bound(p) -> float:
    """``min(gamma_bound(p), fujiwara_bound(p))``, at most twice the Cauchy bound."""
    M = _moduli(p)
    _require_degree(M.shape[1] - 1, 3, "combined_bound")
    _check_gamma_range(M)
    return float(min(_gamma_rows(M)[0], _fujiwara_rows(M)[0]))


@dataclass(frozen=True)
class BoundReport:
    """All bounds for one polynomial.

    ``tau``, ``gamma`` and ``combined`` are None when the degree is below 3.
    """

    degree: int
    cauchy: float
    fujiwara: float
    tau: Optional[float]
    gamma: Optional[float]
    combined: Optional[float]

    @property
    def gamma_applicable(self) -> bool:
        return self.gamma is not None

    def get(self, method: str) -> Optional[float]:
        if method == "rho":
            method = "cauchy"
        if method not in METHODS:
            raise KeyError(method)
        return getattr(self, method)

    def as_dict(self) -> dict:
        return asdict(self)


def full_report(p, rel_tol: float = DEFAULT_REL_TOL) -> BoundReport:
    """Normalize ``p`` to monic form and compute every bound."""
    poly = as_polynomial(p)
    M = _moduli(poly)
    n = poly.degree
    cauchy = float(_cauchy_rows(M, rel_tol)[0])
    fujiwara = float(_fujiwara_rows(M)[0])
    if n < 3:
        return BoundReport(n, cauchy, fujiwara, None, None, None)
    _check_gamma_range(M)
    t = _tau_rows(M)
    gamma = float(_gamma_rows(M, t)[0])
    return BoundReport(n, cauchy, fujiwara, float(t[0]), gamma, min(gamma, fujiwara))


def ratio(numerator: Optional[float], denominator: float) -> Optional[float]:
    """``numerator / denominator``, or None when undefined (zero denominator)."""
    if numerator is None or denominator == 0:
        return None
    return numerator / denominator
