"""Acceptance suite: one test and one PASS/FAIL line per criterion.

Run on its own with ``pytest tests/test_acceptance.py -v``; the PASS/FAIL lines
appear both on stdout (``-s``) and in the terminal summary.
"""
import math

import numpy as np
import pytest

from rootbound.bounds import (bound_matrix, cauchy_bound, gamma_bound, gamma_bound_expanded,
                              tau)
from rootbound.cli import main
from rootbound.harness import THEOREM_CONSTANT, cauchy_threshold
from rootbound.localization import build_companion, oval_circumradius, oval_union_contains
from rootbound.polynomial import (DEFAULT_DISTRIBUTIONS, MonicPolynomial, extremal_family,
                                  random_polynomial, scale)

SLACK = 1e-9
CAUCHY_RATIO_LIMIT = 3.07410 + 1e-6

pytestmark = pytest.mark.slow
METHODS = ("cauchy", "fujiwara", "tau", "gamma", "combined")


def report(log, number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    log.append(line)
    return ok


@pytest.fixture(scope="module")
def corpus_bounds(corpus):
    return {key: bound_matrix(X) for key, X in corpus}


def test_criterion_1_extremal_threshold(acceptance_log):
    worst = 0.0
    for n in range(3, 101):
        expected = 1.0 / (2.0 ** (1.0 / n) - 1.0)
        worst = max(worst, abs(cauchy_bound(extremal_family(n)) - expected) / expected)
    assert report(acceptance_log, 1, worst <= 1e-9, f"max rel err {worst:.2e} (tol 1e-9)")


def test_criterion_2_theorem_constant(acceptance_log, corpus, corpus_bounds):
    worst = 0.0
    violations = nonconverged = 0
    for key, X in corpus:
        mu, conv = corpus.mu(key)
        nonconverged += int(np.count_nonzero(~conv))
        r = corpus_bounds[key]["gamma"][conv] / (key[1] * mu[conv])
        worst = max(worst, r.max())
        violations += int(np.count_nonzero(r > THEOREM_CONSTANT))
    for n in range(3, 101):
        r = gamma_bound(extremal_family(n)) / n
        worst = max(worst, r)
        violations += r > THEOREM_CONSTANT
    ok = violations == 0 and nonconverged == 0
    assert report(acceptance_log, 2, ok,
                  f"max gamma/(n*mu) {worst:.6f} (limit {THEOREM_CONSTANT}), "
                  f"violations {violations}, nonconverged {nonconverged}")


def test_criterion_3_cauchy_ratio(acceptance_log, corpus, corpus_bounds):
    worst = 0.0
    for key, _ in corpus:
        b = corpus_bounds[key]
        keep = b["cauchy"] > 0
        worst = max(worst, (b["gamma"][keep] / b["cauchy"][keep]).max())
    for n in range(3, 101):
        p = extremal_family(n)
        worst = max(worst, gamma_bound(p) / cauchy_bound(p))
    assert report(acceptance_log, 3, worst <= CAUCHY_RATIO_LIMIT,
                  f"max gamma/rho {worst:.6f} (limit {CAUCHY_RATIO_LIMIT:.6f})")


def test_criterion_4_soundness(acceptance_log, corpus, corpus_bounds):
    counts = {"gamma": 0, "fujiwara": 0, "cauchy": 0}
    for key, _ in corpus:
        mu, conv = corpus.mu(key)
        floor = (mu - SLACK * (1 + mu))[conv]
        for m in counts:
            counts[m] += int(np.count_nonzero(corpus_bounds[key][m][conv] < floor))
    ok = sum(counts.values()) == 0
    detail = ", ".join(f"{m} {c}" for m, c in counts.items())
    assert report(acceptance_log, 4, ok, f"violations: {detail} over {len(corpus)} polynomials")


def test_criterion_5_form_equivalence(acceptance_log):
    rng = np.random.default_rng(2024)
    rows = {}
    for i in range(10_000):
        n = int(rng.integers(3, 31))
        dist = DEFAULT_DISTRIBUTIONS[i % 4]
        rows.setdefault(n, []).append(random_polynomial(n, dist, int(rng.integers(2**63))).coeffs)
    worst = 0.0
    for n, coeffs in rows.items():
        b = bound_matrix(np.array(coeffs), ("gamma", "gamma_expanded"))
        worst = max(worst, (np.abs(b["gamma"] - b["gamma_expanded"]) / b["gamma"]).max())
    assert report(acceptance_log, 5, worst <= 1e-12,
                  f"max rel gap {worst:.2e} over 10000 polynomials (tol 1e-12)")


def test_criterion_6_geometric_sandwich(acceptance_log, corpus):
    checked = below = above = 0
    for key, X in corpus:
        if key[1] > 15:
            continue
        mu, conv = corpus.mu(key)
        for row, m, c in zip(X, mu, conv):
            if tau(row) == 0 or not c:
                continue
            r = oval_circumradius(row)
            g = gamma_bound_expanded(row)
            checked += 1
            below += not (m <= r)
            above += not (r <= g + 1e-9 * g)
    ok = below == 0 and above == 0 and checked > 0
    assert report(acceptance_log, 6, ok,
                  f"{checked} polynomials; mu > circumradius {below}, "
                  f"circumradius > gamma_expanded {above}")


def test_criterion_7_containment(acceptance_log, corpus):
    picks = corpus.subsample(1000, rng_seed=7)
    outside = checked = 0
    for key, i in picks:
        row = corpus.cells[key][i]
        rs = corpus.roots(key)[i]
        t0 = tau(row)
        if not rs.converged or t0 == 0:
            continue
        checked += 1
        for t in (0.5 * t0, t0, 2 * t0):
            outside += int(np.count_nonzero(~oval_union_contains(build_companion(row, t),
                                                                 rs.roots, 1e-9)))
    ok = outside == 0 and checked == len(picks)
    assert report(acceptance_log, 7, ok,
                  f"{checked} polynomials x 3 scalings; roots outside union {outside}")


def test_criterion_8_homogeneity(acceptance_log, corpus):
    picks = corpus.subsample(1000, rng_seed=8)
    by_degree = {}
    for key, i in picks:
        by_degree.setdefault(key[1], []).append(corpus.cells[key][i])
    worst = 0.0
    for n, rows in by_degree.items():
        X = np.array(rows)
        base = bound_matrix(X, METHODS)
        for c in (1e-3, 0.5, 2.0, 1e3):
            Xc = np.array([scale(MonicPolynomial(row), c).coeffs for row in X])
            scaled = bound_matrix(Xc, METHODS)
            for m in METHODS:
                expected = c * base[m]
                keep = expected > 0
                err = np.abs(scaled[m][keep] - expected[keep]) / expected[keep]
                worst = max(worst, err.max(initial=0.0))
    assert report(acceptance_log, 8, worst <= 1e-10,
                  f"max rel err {worst:.2e} over 1000 polynomials x 4 factors (tol 1e-10)")


def test_criterion_9_combined_cap(acceptance_log, corpus, corpus_bounds):
    excess = -math.inf
    violations = 0
    for key, _ in corpus:
        b = corpus_bounds[key]
        gap = b["combined"] - (2 * b["cauchy"] + 1e-12)
        excess = max(excess, gap.max())
        violations += int(np.count_nonzero(gap > 0))
    assert report(acceptance_log, 9, violations == 0,
                  f"violations {violations}; max of min(gamma,F) - 2 rho = {excess + 1e-12:.3e}")


def test_criterion_10_asymptotic(acceptance_log, corpus, corpus_bounds, capsys):
    # the sweep command must surface the empirical maximum
    main(["sweep", "--degrees", "3:5", "--samples", "5", "--seed", "42"])
    err = capsys.readouterr().err
    reported = "max gamma/(n*mu)" in err

    worst = 0.0
    for key, _ in corpus:
        mu, conv = corpus.mu(key)
        worst = max(worst, (corpus_bounds[key]["gamma"][conv] / (key[1] * mu[conv])).max())
    empirical_ok = reported and worst <= THEOREM_CONSTANT

    limit = 1.0 / math.log(2.0)
    column = cauchy_threshold(300) / 300
    gap = abs(column - limit)
    threshold_ok = gap <= 1e-3

    ok = empirical_ok and threshold_ok
    detail = (f"empirical max gamma/(n*mu) {worst:.6f} <= {THEOREM_CONSTANT}: "
              f"{'ok' if empirical_ok else 'no'}; threshold(300)/300 = {column:.9f}, "
              f"|. - 1/ln 2| = {gap:.3e} (tol 1e-3): {'ok' if threshold_ok else 'no'}")
    assert report(acceptance_log, 10, ok, detail)
