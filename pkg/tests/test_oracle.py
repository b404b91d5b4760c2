import numpy as np
import pytest

from rootbound.bounds import bound_matrix
from rootbound.oracle import (find_roots, find_roots_batch, max_modulus, residual_tolerance,
                              viete_check)
from rootbound.polynomial import extremal_family, random_polynomial


def assert_same_multiset(found, expected, tol):
    found = list(np.asarray(found, dtype=complex))
    for z in np.asarray(expected, dtype=complex):
        k = int(np.argmin([abs(z - w) for w in found]))
        assert abs(found[k] - z) <= tol, (z, found)
        found.pop(k)


def test_quadratic():
    rs = find_roots([-1, 0, 1])
    assert_same_multiset(rs.roots, [1, -1], 1e-14)
    assert rs.max_modulus == pytest.approx(1.0, rel=1e-14)
    assert rs.converged


def test_cubic_ones():
    rs = find_roots([1, 1, 1, 1])
    assert_same_multiset(rs.roots, [-1, 1j, -1j], 1e-13)
    assert rs.max_modulus == pytest.approx(1.0, rel=1e-13)


def test_multiple_root_cluster():
    rs = find_roots(extremal_family(5))
    assert np.all(np.abs(rs.roots - 1) <= 1e-2)
    assert 0.99 <= rs.max_modulus <= 1.01


def test_pure_power():
    rs = find_roots([0, 0, 0, 0, 1])
    np.testing.assert_array_equal(rs.roots, 0)
    assert rs.max_modulus == 0.0 and rs.converged


def test_zero_roots_split_off():
    # z^2 (z - 3)(z + 2)
    rs = find_roots([0, 0, -6, -1, 1])
    assert np.count_nonzero(rs.roots == 0) == 2
    assert_same_multiset(rs.roots, [0, 0, 3, -2], 1e-13)


def test_cube_roots_of_eight():
    assert max_modulus([-8, 0, 0, 1]) == pytest.approx(2.0, rel=1e-14)


@pytest.mark.parametrize("n", [3, 6, 10])
def test_extremal_family_mu(n):
    # an n-fold root spreads to radius ~ (eps * 2**n)**(1/n) in binary64
    assert max_modulus(extremal_family(n)) == pytest.approx(1.0, abs=0.1)


def test_linear():
    rs = find_roots([-5, 1])
    assert rs.roots[0] == pytest.approx(5.0)


def test_nonmonic_input():
    rs = find_roots([-18, 0, 2])
    assert_same_multiset(rs.roots, [3, -3], 1e-13)


def test_matches_numpy_roots(small_corpus):
    for key, X in small_corpus:
        for row, rs in zip(X, small_corpus.roots(key)):
            ref = np.roots(row[::-1])
            tol = 1e-6 * (1 + np.abs(ref).max())
            assert_same_multiset(rs.roots, ref, tol)


def test_count_and_residuals(small_corpus):
    for key, X in small_corpus:
        for row, rs in zip(X, small_corpus.roots(key)):
            assert rs.roots.size == row.size - 1
            assert rs.max_modulus == np.abs(rs.roots).max()
            assert rs.converged
            assert np.all(rs.residuals <= residual_tolerance(row, rs.roots))


def test_cauchy_soundness_hook(small_corpus):
    for key, X in small_corpus:
        rho = bound_matrix(X, ("cauchy",))["cauchy"]
        mu = np.array([rs.max_modulus for rs in small_corpus.roots(key)])
        assert np.all(mu <= rho + 1e-9 * (1 + mu))


def test_iteration_cap_reports_nonconvergence():
    rs = find_roots(random_polynomial(20, "loguniform", 3), max_iter=2)
    assert not rs.converged
    assert rs.iterations == 2
    assert rs.roots.size == 20


def test_batch_matches_single():
    X = np.array([random_polynomial(7, "disk", s).coeffs for s in range(5)])
    for row, rs in zip(X, find_roots_batch(X)):
        np.testing.assert_array_equal(rs.roots, find_roots(row).roots)


def test_batch_mixed_zero_roots():
    X = np.array([[0, 0, 1, 0, 1], [1, 0, 1, 0, 1], [0, 0, 0, 0, 1]], dtype=complex)
    out = find_roots_batch(X)
    assert np.count_nonzero(out[0].roots == 0) == 2
    assert out[2].max_modulus == 0
    assert all(r.converged for r in out)


class TestViete:
    def test_quadratic(self):
        v = viete_check([-1, 0, 1], find_roots([-1, 0, 1]))
        assert v.passed
        assert v.sum_error <= 1e-15 and v.product_error <= 1e-15

    def test_cubic_ones(self):
        p = [1, 1, 1, 1]
        v = viete_check(p, find_roots(p))
        assert v.passed and v.sum_error < 1e-14 and v.product_error < 1e-14

    def test_detects_wrong_roots(self):
        rs = find_roots([1, 1, 1, 1])
        bad = type(rs)(roots=rs.roots + 0.1, residuals=rs.residuals, max_modulus=1.1,
                       converged=True, iterations=0)
        assert not viete_check([1, 1, 1, 1], bad).passed

    def test_random_degree_10(self, rng):
        for dist in ("uniform", "disk", "normal", "complex-normal"):
            p = random_polynomial(10, dist, int(rng.integers(2**32)))
            rs = find_roots(p)
            assert rs.converged
            v = viete_check(p, rs)
            a = p.coeffs
            assert v.sum_error <= 1e-8 * (1 + abs(a[9]))
            assert v.product_error <= 1e-8 * (1 + abs(a[0]))

    def test_corpus_pass_rate(self, small_corpus):
        passed = total = 0
        for key, X in small_corpus:
            for row, rs in zip(X, small_corpus.roots(key)):
                total += 1
                passed += viete_check(row, rs).passed
        assert passed >= 0.99 * total
