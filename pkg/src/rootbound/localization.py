"""Cassini-oval localization of the roots via a scaled companion matrix.

For a monic polynomial of degree ``n`` and ``t > 0``, conjugating the
Frobenius companion matrix (ones on the subdiagonal, ``-a_0..-a_{n-1}`` in
the last column) by ``diag(1, t, ..., t**(n-1))`` gives a matrix ``C(t)`` with
subdiagonal ``t`` and last column ``-a_{k-1} / t**(n-k)`` in row ``k``. Its
eigenvalues are the roots of the polynomial, so they lie in the union of the
Brauer ovals ``|z - c_ii| |z - c_jj| <= r_i r_j`` over row pairs.

The matrix is never materialized for the computations here; only the last
column and the constant subdiagonal are stored.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .bounds import _tau_rows
from .exceptions import DegreeError, UnsupportedGeometryError
from .polynomial import as_polynomial, make_monic
from .validation import check_positive

__all__ = [
    "ScaledCompanion",
    "CassiniOval",
    "build_companion",
    "reduced_row_sums",
    "ovals_at",
    "oval_max_modulus",
    "oval_circumradius",
    "circumradius_at",
    "oval_union_contains",
]


@dataclass(frozen=True)
class ScaledCompanion:
    """Sparse description of ``C(t)``; rows are 1-based in the docs, 0-based here."""

    t: float
    n: int
    last_column: np.ndarray

    @property
    def subdiagonal(self) -> float:
        return self.t

    @property
    def diagonal(self) -> np.ndarray:
        d = np.zeros(self.n, dtype=np.complex128)
        d[-1] = self.last_column[-1]
        return d

    def to_dense(self) -> np.ndarray:
        """Materialize ``C(t)`` as an ``n x n`` array (for inspection and tests)."""
        C = np.zeros((self.n, self.n), dtype=np.complex128)
        idx = np.arange(1, self.n)
        C[idx, idx - 1] = self.t
        C[:, -1] = self.last_column
        return C


@dataclass(frozen=True)
class CassiniOval:
    """Brauer oval ``{z : |z - center_i| |z - center_j| <= radius_product}``."""

    i: int
    j: int
    center_i: complex
    center_j: complex
    radius_product: float

    def contains(self, z, rel_slack: float = 0.0):
        z = np.asarray(z, dtype=np.complex128)
        lhs = np.abs(z - self.center_i) * np.abs(z - self.center_j)
        return lhs <= self.radius_product + rel_slack * np.maximum(lhs, self.radius_product)

    @property
    def max_modulus(self) -> float:
        return oval_max_modulus(self)


def build_companion(p, t: float) -> ScaledCompanion:
    """Scaled companion matrix ``C(t) = S C_F S**-1`` of the monic form of ``p``."""
    t = check_positive(t, "t")
    a = make_monic(as_polynomial(p)).coeffs
    n = a.size - 1
    if n < 2:
        raise DegreeError(f"companion localization requires degree >= 2, got {n}")
    powers = t ** np.arange(n - 1, -1, -1, dtype=float)  # t**(n-k), k = 1..n
    last = -a[:-1] / powers
    last.setflags(write=False)
    return ScaledCompanion(t=t, n=n, last_column=last)


def reduced_row_sums(c: ScaledCompanion) -> np.ndarray:
    """Off-diagonal absolute row sums ``r_i`` of ``C(t)``.

    Row 1 holds only its last-column entry, rows 2..n-1 add the subdiagonal
    ``t``, and row n (whose last-column entry is diagonal) has just ``t``.
    """
    r = np.abs(c.last_column).astype(float)
    r[1:] += c.t
    r[-1] = c.t
    return r


def ovals_at(p, t: float) -> list[CassiniOval]:
    """All ``n(n-1)/2`` Brauer ovals of ``C(t)``, indexed 1-based with ``i < j``."""
    c = build_companion(p, t)
    r = reduced_row_sums(c)
    d = c.diagonal + 0j  # drop negative zeros
    return [
        CassiniOval(i + 1, j + 1, complex(d[i]), complex(d[j]), float(r[i] * r[j]))
        for i, j in combinations(range(c.n), 2)
    ]


def oval_max_modulus(o: CassiniOval) -> float:
    """Largest ``|z|`` over the oval.

    With foci 0 and ``c`` the farthest point lies on the ray through ``c`` at
    ``(|c| + sqrt(|c|**2 + 4g)) / 2``; with both foci at 0 that is ``sqrt(g)``.
    """
    ci, cj = complex(o.center_i), complex(o.center_j)
    g = o.radius_product
    if ci != 0 and cj != 0:
        if ci != cj:
            raise UnsupportedGeometryError(
                f"oval ({o.i}, {o.j}) has two distinct non-zero foci {ci} and {cj}"
            )
        return abs(ci) + math.sqrt(g)
    c = abs(ci) + abs(cj)
    return 0.5 * (c + math.sqrt(c * c + 4.0 * g))


def circumradius_at(p, t: float) -> float:
    """Radius of the smallest origin-centred disk containing every oval of ``C(t)``.

    Equals ``max(oval_max_modulus(o) for o in ovals_at(p, t))`` but uses the
    two largest row sums instead of enumerating pairs.
    """
    c = build_companion(p, t)
    r = reduced_row_sums(c)
    a1 = abs(c.last_column[-1])
    head = np.sort(r[:-1])  # rows with centre 0
    disk = math.sqrt(head[-1] * head[-2]) if head.size >= 2 else 0.0
    g = r[-1] * head[-1]
    return max(disk, 0.5 * (a1 + math.sqrt(a1 * a1 + 4.0 * g)))


def oval_circumradius(p) -> Optional[float]:
    """Exact enclosing radius of the oval union at ``t = tau(p)``.

    Returns None when ``tau(p) == 0``: the scaling degenerates and the
    polynomial is ``z**(n-2)`` times a quadratic.
    """
    a = make_monic(as_polynomial(p)).coeffs
    n = a.size - 1
    if n < 3:
        raise DegreeError(f"oval_circumradius requires degree >= 3, got {n}")
    t = float(_tau_rows(np.abs(a)[None, :])[0])
    if t == 0:
        return None
    return circumradius_at(a, t)


def oval_union_contains(c: ScaledCompanion, z, rel_slack: float = 1e-9) -> np.ndarray:
    """Boolean mask: which points ``z`` lie in at least one oval of ``c``."""
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    r = reduced_row_sums(c)
    dist = np.abs(z[:, None] - c.diagonal[None, :])  # (m, n)
    lhs = dist[:, :, None] * dist[:, None, :]
    rhs = np.broadcast_to((r[:, None] * r[None, :])[None], lhs.shape)
    ok = lhs <= rhs + rel_slack * np.maximum(lhs, rhs)
    pairs = ~np.eye(c.n, dtype=bool)
    return np.any(ok & pairs[None], axis=(1, 2))
