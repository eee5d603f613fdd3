"""
Add the '--runslow' command line option to pytest else skip slow markers,
and share parameter sets between the test modules.
"""
import math

import pytest

from cqedmetro.hamiltonians import SystemParams


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark test as slow to run")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def systems():
    """
    Parameter sets used across tests.

    dispersive: theta = pi/3, Omega = 1, Delta = 0.2, g/Delta = 0.1
    spectrum: theta = pi/3, Omega = 5, omega_c = 4, Delta = 1
    degenerate: lambda = 1/2, theta = pi/2
    """
    d = {}
    d['dispersive'] = SystemParams(
        n_qubits=4, b_z=1.0, B_x=0.5 * math.sqrt(3), lam=0.0, lam_c=0.04,
        omega_c=0.8)
    d['spectrum'] = SystemParams(
        n_qubits=2, b_z=10.0, B_x=math.sqrt(18.75), lam=0.25, lam_c=0.02,
        omega_c=4.0)
    d['degenerate'] = SystemParams(
        n_qubits=3, b_z=1.0, B_x=0.3, lam=0.5, lam_c=0.02, omega_c=0.2)
    return d
