import numpy as np
import pytest

from rootbound.harness import sample_seeds
from rootbound.oracle import find_roots_batch
from rootbound.polynomial import DEFAULT_DISTRIBUTIONS, random_polynomial

CORPUS_SEED = 42
CORPUS_DEGREES = range(3, 31)
CORPUS_SAMPLES = 500


class Corpus:
    """Default fuzz corpus: (dist, degree) -> coefficient matrix and oracle roots."""

    def __init__(self, seed=CORPUS_SEED, degrees=CORPUS_DEGREES, samples=CORPUS_SAMPLES,
                 dists=DEFAULT_DISTRIBUTIONS):
        self.cells = {}
        for dist in dists:
            for n in degrees:
                seeds = sample_seeds(seed, dist, n, samples)
                X = np.array([random_polynomial(n, dist, int(s)).coeffs for s in seeds])
                self.cells[dist, n] = X
        self._roots = {}

    def roots(self, key):
        if key not in self._roots:
            self._roots[key] = find_roots_batch(self.cells[key])
        return self._roots[key]

    def mu(self, key):
        rs = self.roots(key)
        return np.array([r.max_modulus for r in rs]), np.array([r.converged for r in rs])

    def __iter__(self):
        return iter(self.cells.items())

    def __len__(self):
        return sum(X.shape[0] for X in self.cells.values())

    def subsample(self, count, max_degree=None, rng_seed=0):
        """``count`` polynomials drawn across cells, as (key, row index) pairs."""
        keys = [k for k in self.cells if max_degree is None or k[1] <= max_degree]
        rng = np.random.default_rng(rng_seed)
        picks = []
        for i in range(count):
            key = keys[i % len(keys)]
            picks.append((key, int(rng.integers(self.cells[key].shape[0]))))
        return picks


@pytest.fixture(scope="session")
def corpus():
    return Corpus()


@pytest.fixture(scope="session")
def small_corpus():
    """A quick 4 x degrees 3..15 x 20 corpus for property tests."""
    return Corpus(seed=7, degrees=range(3, 16), samples=20)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LOG = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LOG


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LOG, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
