import numpy as np
import pytest

from qlab.geometry import GeometricSpace, block_unitary_isometry

ACCEPTANCE_RESULTS = {}


def random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_hermitian(rng, n, scale=1.0):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (a + a.conj().T) / 2


def random_vector(rng, n):
    return rng.normal(size=n) + 1j * rng.normal(size=n)


def random_signature(rng, n, allow_zero=False):
    r = int(rng.integers(0, n + 1))
    s = int(rng.integers(r, n + 1)) if allow_zero else n
    return GeometricSpace((1,) * r + (-1,) * (s - r) + (0,) * (n - s))


def random_block_isometry(rng, space):
    r = space.r
    return block_unitary_isometry(random_unitary(rng, r), random_unitary(rng, space.n - r), space)


def random_state(rng, space):
    """Quadric-norm-1 vector with ||x-||^2 uniform in [0, 2]; needs r >= 1."""
    r = space.r
    minus_sq = rng.uniform(0, 2) if space.n > r else 0.0
    plus = random_vector(rng, r)
    minus = random_vector(rng, space.n - r)
    plus *= np.sqrt(1 + minus_sq) / np.linalg.norm(plus)
    if space.n > r:
        minus *= np.sqrt(minus_sq) / np.linalg.norm(minus)
    return space.vector(np.concatenate([plus, minus]))


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion identifier")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (rep.when == "call" or rep.failed):
        prev = ACCEPTANCE_RESULTS.get(marker.args[0])
        if prev != "FAIL":
            ACCEPTANCE_RESULTS[marker.args[0]] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    rows = {k: v for k, v in ACCEPTANCE_RESULTS.items() if isinstance(v, str)}
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(rows, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{rows[label]}  {label}")
