"""Polynomial representation, evaluation, scaling and test families.

Coefficients are always stored in ascending-degree order, ``coeffs[k]`` being
the coefficient of ``z**k``.
"""
from __future__ import annotations

import json
import math
from typing import Sequence

import numpy as np

from .exceptions import ConfigurationError, DomainError, InvalidPolynomialError
from .validation import check_coefficients, check_positive

__all__ = [
    "Polynomial",
    "MonicPolynomial",
    "make_monic",
    "evaluate",
    "scale",
    "extremal_family",
    "random_polynomial",
    "DISTRIBUTIONS",
    "DEFAULT_DISTRIBUTIONS",
    "MAX_EXTREMAL_DEGREE",
    "polynomial_from_json",
    "polynomial_to_json",
    "parse_coefficient_text",
]

MAX_EXTREMAL_DEGREE = 1000

DISTRIBUTIONS = ("uniform", "disk", "normal", "complex-normal", "loguniform")
# one real, one complex-bounded, one unbounded, one wide dynamic range
DEFAULT_DISTRIBUTIONS = ("uniform", "disk", "normal", "loguniform")


class Polynomial:
    """Immutable complex polynomial ``a_0 + a_1 z + ... + a_n z**n``.

    Parameters
    ----------
    coeffs : array_like
        Coefficients ``(a_0, ..., a_n)``; ``a_n`` must be non-zero.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        arr = check_coefficients(coeffs).copy()
        arr.setflags(write=False)
        self._coeffs = arr

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def degree(self) -> int:
        return self._coeffs.size - 1

    @property
    def leading(self) -> complex:
        return complex(self._coeffs[-1])

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs[-1] == 1)

    def is_pure_power(self) -> bool:
        """True for ``a_n z**n`` (all lower coefficients zero)."""
        return not np.any(self._coeffs[:-1])

    def __call__(self, z):
        return evaluate(self, z)

    def __len__(self):
        return self._coeffs.size

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self._coeffs, other._coeffs)

    def __hash__(self):
        return hash(self._coeffs.tobytes())

    def __repr__(self):
        body = ", ".join(_fmt_complex(c) for c in self._coeffs)
        return f"{type(self).__name__}([{body}])"


class MonicPolynomial(Polynomial):
    """Polynomial whose leading coefficient is exactly 1."""

    __slots__ = ()

    def __init__(self, coeffs):
        super().__init__(coeffs)
        if self._coeffs[-1] != 1:
            raise InvalidPolynomialError(
                f"leading coefficient must be exactly 1, got {self.leading!r}"
            )


def _fmt_complex(c: complex) -> str:
    c = complex(c)
    return repr(c.real) if c.imag == 0 else repr(c)


def make_monic(p) -> MonicPolynomial:
    """Divide every coefficient by the leading one.

    Accepts a Polynomial or anything ``Polynomial`` accepts. Roots are
    unchanged.
    """
    if isinstance(p, MonicPolynomial):
        return p
    coeffs = p.coeffs if isinstance(p, Polynomial) else check_coefficients(p)
    out = coeffs / coeffs[-1]
    out[-1] = 1.0
    return MonicPolynomial(out)


def evaluate(p, z):
    """Evaluate ``p`` at ``z`` (scalar or array) by Horner's scheme."""
    coeffs = p.coeffs if isinstance(p, Polynomial) else check_coefficients(p, allow_zero_leading=True)
    z = np.asarray(z, dtype=np.complex128)
    acc = np.full(z.shape, coeffs[-1], dtype=np.complex128)
    for a in coeffs[-2::-1]:
        acc = acc * z + a
    return complex(acc) if acc.ndim == 0 else acc


def scale(p: Polynomial, c: float) -> Polynomial:
    """Return ``c**n * p(z / c)``, whose roots are ``c`` times those of ``p``.

    Coefficient ``a_k`` becomes ``a_k * c**(n - k)``; a monic input stays monic.
    """
    c = check_positive(c, "scale factor c")
    n = p.degree
    powers = c ** np.arange(n, -1, -1, dtype=float)
    return type(p)(p.coeffs * powers)


def extremal_family(n: int) -> MonicPolynomial:
    """Return ``(z - 1)**n``, on which the Cauchy bound attains its worst ratio."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"degree must be an integer >= 1, got {n!r}")
    if n > MAX_EXTREMAL_DEGREE:
        # central binomials leave binary64 range shortly after n = 1000
        raise DomainError(f"degree {n} exceeds the supported maximum {MAX_EXTREMAL_DEGREE}")
    n = int(n)
    coeffs = [(-1) ** (n - k) * float(math.comb(n, k)) for k in range(n + 1)]
    return MonicPolynomial(coeffs)


def _draw(rng: np.random.Generator, dist: str, size: int) -> np.ndarray:
    if dist == "uniform":
        return rng.uniform(-1.0, 1.0, size).astype(np.complex128)
    if dist == "disk":
        radius = np.sqrt(rng.uniform(0.0, 1.0, size))
        return radius * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size))
    if dist == "normal":
        return rng.standard_normal(size).astype(np.complex128)
    if dist == "complex-normal":
        return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2.0)
    if dist == "loguniform":
        magnitude = 10.0 ** rng.uniform(-6.0, 6.0, size)
        return magnitude * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size))
    raise ConfigurationError(
        f"unknown distribution {dist!r}; choose one of {', '.join(DISTRIBUTIONS)}"
    )


def random_polynomial(n: int, dist: str = "uniform", seed: int = 0) -> MonicPolynomial:
    """Monic degree-``n`` polynomial with i.i.d. lower coefficients from ``dist``.

    The result depends only on ``(n, dist, seed)``.
    """
    if dist not in DISTRIBUTIONS:
        raise ConfigurationError(
            f"unknown distribution {dist!r}; choose one of {', '.join(DISTRIBUTIONS)}"
        )
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"degree must be an integer >= 1, got {n!r}")
    rng = np.random.default_rng(seed)
    coeffs = np.empty(int(n) + 1, dtype=np.complex128)
    coeffs[:-1] = _draw(rng, dist, int(n))
    coeffs[-1] = 1.0
    return MonicPolynomial(coeffs)


# --------------------------------------------------------------------------
# serialization

def _parse_entry(entry) -> complex:
    if isinstance(entry, bool):
        raise InvalidPolynomialError(f"invalid coefficient {entry!r}")
    if isinstance(entry, (int, float)):
        return complex(float(entry), 0.0)
    if isinstance(entry, (list, tuple)) and len(entry) == 2 and all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry
    ):
        return complex(float(entry[0]), float(entry[1]))
    raise InvalidPolynomialError(f"invalid coefficient {entry!r}; expected a number or [re, im]")


def polynomial_from_json(source) -> Polynomial:
    """Parse the JSON polynomial format.

    ``source`` is a JSON string or an already-decoded object. Accepted shapes:
    ``{"coeffs": [[re, im], ...]}``, ``{"coeffs": [re, ...]}`` and a bare
    array of either kind. Order is ascending degree.
    """
    if isinstance(source, (str, bytes)):
        try:
            source = json.loads(source)
        except json.JSONDecodeError as exc:
            raise InvalidPolynomialError(f"malformed JSON: {exc}") from None
    if isinstance(source, dict):
        if "coeffs" not in source:
            raise InvalidPolynomialError('JSON object lacks the "coeffs" key')
        source = source["coeffs"]
    if not isinstance(source, list):
        raise InvalidPolynomialError("coefficients must be a JSON array")
    return Polynomial([_parse_entry(e) for e in source])


def polynomial_to_json(p: Polynomial) -> str:
    """Serialize to ``{"coeffs": [[re, im], ...]}`` (always the pair form)."""
    return json.dumps({"coeffs": [[float(c.real), float(c.imag)] for c in p.coeffs]})


def parse_coefficient_text(text: str) -> Polynomial:
    """Parse whitespace-separated coefficients, ascending degree.

    Tokens are reals; Python complex literals such as ``1+2j`` are also
    accepted.
    """
    values: list[complex] = []
    for token in text.replace(",", " ").split():
        try:
            values.append(complex(float(token)))
        except ValueError:
            try:
                values.append(complex(token))
            except ValueError:
                raise InvalidPolynomialError(f"cannot parse coefficient {token!r}") from None
    return Polynomial(values)


def as_polynomial(p) -> Polynomial:
    """Coerce coefficient sequences to Polynomial; pass Polynomials through."""
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, (str, bytes)):
        raise InvalidPolynomialError("pass coefficients, not a string")
    return Polynomial(p)
