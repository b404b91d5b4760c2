"""Fuzz sweeps and extremal-family tables comparing bounds with the oracle."""
from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Optional, Sequence

import numpy as np

from .bounds import SQRT_945, bound_matrix, cauchy_bound, gamma_bound
from .oracle import find_roots_batch
from .polynomial import DEFAULT_DISTRIBUTIONS, DISTRIBUTIONS, extremal_family, random_polynomial
from .exceptions import ConfigurationError, DomainError

__all__ = [
    "SweepRow",
    "SweepSummary",
    "ExtremalRow",
    "sample_seeds",
    "run_sweep",
    "summarize",
    "extremal_table",
    "cauchy_threshold",
    "rows_to_csv",
    "write_csv",
    "thread_count",
    "THEOREM_CONSTANT",
    "CAUCHY_RATIO_CONSTANT",
    "SOUNDNESS_SLACK",
]

THEOREM_CONSTANT = 1.4655
CAUCHY_RATIO_CONSTANT = SQRT_945
SOUNDNESS_SLACK = 1e-9
MAX_SWEEP_DEGREE = 1000
MAX_EXTREMAL_N = 300


@dataclass(frozen=True)
class SweepRow:
    degree: int
    seed: int
    dist: str
    mu: float
    cauchy: float
    fujiwara: float
    tau: float
    gamma: float
    combined: float
    ratio_gamma_mu: Optional[float]
    ratio_gamma_rho: Optional[float]
    ratio_gamma_n_mu: Optional[float]
    converged: bool = True

    def violations(self, slack: float = SOUNDNESS_SLACK) -> list[str]:
        """Names of bounds that fall below mu beyond the rounding slack."""
        floor = self.mu - slack * (1.0 + self.mu)
        return [name for name in ("cauchy", "fujiwara", "gamma", "combined")
                if getattr(self, name) < floor]


@dataclass(frozen=True)
class ExtremalRow:
    n: int
    rho: float
    threshold: float
    gamma: float
    ratio_rho_mu: float
    ratio_gamma_mu: float


@dataclass(frozen=True)
class SweepSummary:
    rows: int
    nonconverged: int
    soundness_violations: int
    max_ratio_gamma_n_mu: Optional[float]
    max_ratio_gamma_rho: Optional[float]
    max_ratio_gamma_mu: Optional[float]

    @property
    def within_constants(self) -> bool:
        ok = self.soundness_violations == 0
        if self.max_ratio_gamma_n_mu is not None:
            ok &= self.max_ratio_gamma_n_mu <= THEOREM_CONSTANT
        if self.max_ratio_gamma_rho is not None:
            ok &= self.max_ratio_gamma_rho <= CAUCHY_RATIO_CONSTANT + 1e-9
        return ok

    def lines(self) -> list[str]:
        def fmt(x):
            return "n/a" if x is None else f"{x:.6f}"
        return [
            f"rows                      {self.rows}",
            f"oracle non-converged      {self.nonconverged}",
            f"soundness violations      {self.soundness_violations}",
            f"max gamma/(n*mu)          {fmt(self.max_ratio_gamma_n_mu)}  (limit {THEOREM_CONSTANT})",
            f"max gamma/rho             {fmt(self.max_ratio_gamma_rho)}  (limit {CAUCHY_RATIO_CONSTANT:.6f})",
            f"max gamma/mu              {fmt(self.max_ratio_gamma_mu)}",
        ]


def thread_count(default: int = 0) -> int:
    """Worker count from ``ROOTBOUND_THREADS`` (0 or unset means one per CPU)."""
    raw = os.environ.get("ROOTBOUND_THREADS", str(default))
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"ROOTBOUND_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise ConfigurationError(f"ROOTBOUND_THREADS must be >= 0, got {value}")
    return value or (os.cpu_count() or 1)


def sample_seeds(seed: int, dist: str, degree: int, samples: int) -> np.ndarray:
    """Per-sample seeds for one (dist, degree) cell, fixed by the base seed."""
    return np.random.SeedSequence([seed, DISTRIBUTIONS.index(dist), degree]).generate_state(samples)


def _ratio(num: float, den: float) -> Optional[float]:
    return None if den == 0 else num / den


def _sweep_cell(dist: str, degree: int, samples: int, seed: int) -> list[SweepRow]:
    seeds = sample_seeds(seed, dist, degree, samples)
    X = np.array([random_polynomial(degree, dist, int(s)).coeffs for s in seeds])
    b = bound_matrix(X)
    roots = find_roots_batch(X)
    rows = []
    for k, (s, rs) in enumerate(zip(seeds, roots)):
        mu = rs.max_modulus
        g, rho = float(b["gamma"][k]), float(b["cauchy"][k])
        rows.append(SweepRow(
            degree=degree,
            seed=int(s),
            dist=dist,
            mu=mu,
            cauchy=rho,
            fujiwara=float(b["fujiwara"][k]),
            tau=float(b["tau"][k]),
            gamma=g,
            combined=float(b["combined"][k]),
            ratio_gamma_mu=_ratio(g, mu),
            ratio_gamma_rho=_ratio(g, rho),
            ratio_gamma_n_mu=_ratio(g, degree * mu),
            converged=rs.converged,
        ))
    return rows


def run_sweep(degrees: Iterable[int], samples: int, dists: Sequence[str] = DEFAULT_DISTRIBUTIONS,
              seed: int = 42, threads: Optional[int] = None) -> list[SweepRow]:
    """Random-coefficient sweep; rows ordered by (dist, degree, sample index).

    Output depends only on the arguments, not on ``threads``.
    """
    degrees = list(degrees)
    for n in degrees:
        if not 3 <= n <= MAX_SWEEP_DEGREE:
            raise DomainError(f"sweep degrees must lie in [3, {MAX_SWEEP_DEGREE}], got {n}")
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    for d in dists:
        if d not in DISTRIBUTIONS:
            raise ConfigurationError(
                f"unknown distribution {d!r}; choose one of {', '.join(DISTRIBUTIONS)}"
            )
    cells = [(d, n) for d in dists for n in degrees]
    workers = thread_count() if threads is None else max(1, threads)
    if workers == 1:
        chunks = [_sweep_cell(d, n, samples, seed) for d, n in cells]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda c: _sweep_cell(c[0], c[1], samples, seed), cells))
    return [row for chunk in chunks for row in chunk]


def summarize(rows: Sequence[SweepRow]) -> SweepSummary:
    """Ratio maxima over converged rows and the count of soundness violations."""
    good = [r for r in rows if r.converged]

    def maximum(attr):
        vals = [getattr(r, attr) for r in good if getattr(r, attr) is not None]
        return max(vals) if vals else None

    return SweepSummary(
        rows=len(rows),
        nonconverged=len(rows) - len(good),
        soundness_violations=sum(1 for r in good if r.violations()),
        max_ratio_gamma_n_mu=maximum("ratio_gamma_n_mu"),
        max_ratio_gamma_rho=maximum("ratio_gamma_rho"),
        max_ratio_gamma_mu=maximum("ratio_gamma_mu"),
    )


def cauchy_threshold(n: int) -> float:
    """``1 / (2**(1/n) - 1)``: the Cauchy bound of ``(z - 1)**n``."""
    return 1.0 / math.expm1(math.log(2.0) / n)


def extremal_table(n_max: int) -> list[ExtremalRow]:
    """Rows for ``(z - 1)**n``, n = 3..n_max, with the analytic ``mu = 1``."""
    if not 1 <= n_max <= MAX_EXTREMAL_N:
        raise DomainError(f"n_max must lie in [1, {MAX_EXTREMAL_N}], got {n_max}")
    rows = []
    for n in range(3, n_max + 1):
        p = extremal_family(n)
        rho = cauchy_bound(p)
        g = gamma_bound(p)
        rows.append(ExtremalRow(n, rho, cauchy_threshold(n), g, rho, g))
    return rows


# --------------------------------------------------------------------------
# CSV

def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def rows_to_csv(rows: Sequence, row_type=None) -> str:
    """Serialize dataclass rows with a header; undefined values become empty cells."""
    row_type = row_type or (type(rows[0]) if rows else SweepRow)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f.name for f in fields(row_type)])
    for row in rows:
        writer.writerow([_cell(v) for v in astuple(row)])
    return buf.getvalue()


def write_csv(rows: Sequence, path, row_type=None) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(rows_to_csv(rows, row_type))
