import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def hermitian(rng, K, scale=1.0, decay=None):
    """Random centred coefficients of a real function, optionally decaying."""
    half = rng.standard_normal(K) + 1j * rng.standard_normal(K)
    if decay is not None:
        half *= np.exp(-decay * np.arange(1, K + 1))
    out = np.empty(2 * K + 1, dtype=complex)
    out[K] = rng.standard_normal()
    out[K + 1:] = half
    out[:K] = np.conj(half[::-1])
    return scale * out


def normal_pdf(t, mu, sigma):
    return np.exp(-0.5 * ((np.asarray(t) - mu) / sigma) ** 2) / (sigma * math.sqrt(2 * math.pi))


_CRITERIA = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash.setdefault(_CRITERIA, {})

    def record(number, title, ok, detail):
        line = f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'}  {detail}"
        lines[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_CRITERIA, None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for key in sorted(lines):
            terminalreporter.write_line(lines[key])
