"""Reference root finder used as ground truth for overestimation ratios.

Simultaneous Aberth-Ehrlich iteration, vectorized over a batch of
same-degree polynomials. Trailing zero coefficients are split off as exact
zero roots before iterating.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import _fujiwara_rows, _gamma_rows, _tau_rows
from .polynomial import Polynomial, as_polynomial, evaluate, make_monic
from .validation import check_coefficient_matrix

__all__ = ["RootSet", "VieteDiagnostics", "find_roots", "find_roots_batch",
           "max_modulus", "viete_check", "residual_tolerance"]

MAX_ITER = 500
STEP_TOL = 1e-13
PHASE_OFFSET = 0.376999
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class RootSet:
    """Roots of one polynomial together with convergence diagnostics."""

    roots: np.ndarray
    residuals: np.ndarray
    max_modulus: float
    converged: bool
    iterations: int
    coeffs: np.ndarray = field(repr=False, default=None)

    @property
    def degree(self) -> int:
        return self.roots.size


def residual_tolerance(p, z) -> np.ndarray:
    """Acceptance threshold ``1e-10 * n * max|a_k| * max(1, |z|)**n`` for ``|p(z)|``."""
    coeffs = make_monic(as_polynomial(p)).coeffs
    n = coeffs.size - 1
    z = np.abs(np.asarray(z))
    return 1e-10 * n * np.abs(coeffs).max() * np.maximum(1.0, z) ** n


def _newton_terms(A: np.ndarray, absA: np.ndarray, z: np.ndarray):
    """Return ``p'(z)/p(z)``, and a mask where ``|p(z)|`` is at rounding level.

    Inside the unit disk ``p`` is evaluated directly; outside, via the
    reversed polynomial in ``w = 1/z``, which keeps every intermediate
    bounded.
    """
    n = A.shape[1] - 1
    inside = np.abs(z) <= 1.0
    w = np.where(inside, z, 1.0 / np.where(inside, 1.0, z))
    aw = np.abs(w)
    # Horner in z (ascending coefficients read from the top)
    p = np.broadcast_to(A[:, -1:], z.shape).astype(np.complex128)
    dp = np.zeros_like(p)
    bound_in = np.broadcast_to(absA[:, -1:], z.shape).astype(float)
    # Horner in w for q(w) = sum a_k w**(n-k)
    q = np.broadcast_to(A[:, :1], z.shape).astype(np.complex128)
    dq = np.zeros_like(q)
    bound_out = np.broadcast_to(absA[:, :1], z.shape).astype(float)
    for k in range(1, n + 1):
        dp = dp * w + p
        p = p * w + A[:, n - k, None]
        bound_in = bound_in * aw + absA[:, n - k, None]
        dq = dq * w + q
        q = q * w + A[:, k, None]
        bound_out = bound_out * aw + absA[:, k, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio_in = dp / p
        # p'(z)/p(z) = (n - w q'(w)/q(w)) / z with w = 1/z
        ratio_out = (n - w * dq / q) * w
    ratio = np.where(inside, ratio_in, ratio_out)
    value = np.where(inside, np.abs(p), np.abs(q))
    bound = np.where(inside, bound_in, bound_out)
    small = value <= (4 * n + 1) * _EPS * bound
    return ratio, small


def _initial_radius(A: np.ndarray) -> np.ndarray:
    M = np.abs(A)
    n = A.shape[1] - 1
    if n >= 3:
        r = np.minimum(_gamma_rows(M, _tau_rows(M)), _fujiwara_rows(M))
    else:
        r = _fujiwara_rows(M)
    return np.where(r > 0, r, 1.0)


def _aberth(A: np.ndarray, max_iter: int = MAX_ITER, tol: float = STEP_TOL):
    """Run Aberth-Ehrlich on monic rows of ``A`` (no zero constant terms)."""
    B, n = A.shape[0], A.shape[1] - 1
    absA = np.abs(A)
    angles = 2.0 * np.pi * np.arange(n) / n + PHASE_OFFSET
    z = _initial_radius(A)[:, None] * np.exp(1j * angles)[None, :]
    active = np.ones((B, n), dtype=bool)
    iterations = np.zeros(B, dtype=int)
    offdiag = ~np.eye(n, dtype=bool)
    for it in range(1, max_iter + 1):
        rows = np.flatnonzero(active.any(axis=1))
        if rows.size == 0:
            break
        zr = z[rows]
        ratio, small = _newton_terms(A[rows], absA[rows], zr)
        diff = zr[:, :, None] - zr[:, None, :]
        with np.errstate(divide="ignore", invalid="ignore"):
            S = np.where(offdiag, 1.0 / np.where(offdiag, diff, 1.0), 0.0).sum(axis=2)
            corr = 1.0 / (ratio - S)
        act = active[rows] & ~small
        bad = ~np.isfinite(corr)
        corr[bad] = 0.0
        corr[~act] = 0.0
        z[rows] = zr - corr
        done = small | (np.abs(corr) <= tol * (1.0 + np.abs(zr))) & ~bad
        active[rows] &= ~done
        iterations[rows] = it
    converged = ~active.any(axis=1)
    return z, converged, iterations


def find_roots_batch(X, max_iter: int = MAX_ITER) -> list[RootSet]:
    """Find all roots of a batch of same-degree polynomials (rows of ``X``)."""
    A = check_coefficient_matrix(X, monic=True)
    B, n = A.shape[0], A.shape[1] - 1
    # number of exact zero roots per row
    nz = A[:, :-1] != 0
    zeros = np.where(nz.any(axis=1), nz.argmax(axis=1), n)
    roots = np.zeros((B, n), dtype=np.complex128)
    converged = np.ones(B, dtype=bool)
    iterations = np.zeros(B, dtype=int)
    for m in np.unique(zeros):
        rows = np.flatnonzero(zeros == m)
        if m == n:
            continue
        z, conv, its = _aberth(A[rows, m:], max_iter)
        roots[rows, m:] = z
        converged[rows] = conv
        iterations[rows] = its
    out = []
    for b in range(B):
        r = roots[b]
        res = np.abs(evaluate(A[b], r)) if n else np.zeros(0)
        out.append(RootSet(
            roots=r,
            residuals=np.atleast_1d(res),
            max_modulus=float(np.abs(r).max()),
            converged=bool(converged[b]),
            iterations=int(iterations[b]),
            coeffs=A[b],
        ))
    return out


def find_roots(p, max_iter: int = MAX_ITER) -> RootSet:
    """All roots of ``p``; non-convergence is flagged, never raised."""
    poly = as_polynomial(p)
    return find_roots_batch(poly.coeffs[None, :], max_iter)[0]


def max_modulus(p) -> float:
    """Largest root modulus of ``p`` according to :func:`find_roots`."""
    return find_roots(p).max_modulus


@dataclass(frozen=True)
class VieteDiagnostics:
    sum_error: float
    product_error: float
    sum_tol: float
    product_tol: float

    @property
    def sum_ok(self) -> bool:
        return self.sum_error <= self.sum_tol

    @property
    def product_ok(self) -> bool:
        return self.product_error <= self.product_tol

    @property
    def passed(self) -> bool:
        return self.sum_ok and self.product_ok


def viete_check(p: Polynomial, r: RootSet, rtol: float = 1e-8) -> VieteDiagnostics:
    """Compare root sum and product against ``-a_{n-1}`` and ``(-1)**n a_0``.

    Tolerances scale with the magnitude of the summed terms, which for the
    product is ``|a_0|`` itself.
    """
    a = make_monic(as_polynomial(p)).coeffs
    n = a.size - 1
    roots = np.asarray(r.roots)
    sum_error = abs(roots.sum() + a[n - 1])
    product_error = abs(np.prod(roots) - (-1) ** n * a[0])
    sum_tol = rtol * (1.0 + max(abs(a[n - 1]), float(np.abs(roots).sum())))
    product_tol = rtol * (1.0 + abs(a[0]))
    return VieteDiagnostics(float(sum_error), float(product_error), sum_tol, product_tol)
