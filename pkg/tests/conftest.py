import sys

import numpy as np
import pytest

from orthoglide import DesignRequirements, MechanismGeometry, synthesize


def hand_geometry(edge=200.0, e=0.0):
    """Prototype design from hand trigonometry at psi_max = 2.

    tau(1/2) = 1/sqrt(6) and tau(-1/4) = -1/sqrt(18) fix the corners; the
    rest follows from the loop closure at Q1' and Q2.
    """
    L = edge / (1 / np.sqrt(6) + 1 / np.sqrt(18))
    q1, q2 = -L / np.sqrt(18), L / np.sqrt(6)
    a = q1 - e - L
    rho_max = q2 - a - L * np.sqrt(2.0 / 3.0) - e
    return MechanismGeometry(leg_length=L, tool_offset=e, base_offset=a, rho_max=rho_max, q1=q1, q2=q2)


@pytest.fixture(scope="session")
def geom():
    return synthesize(DesignRequirements(workspace_edge=200.0, psi_max=2.0, tool_offset=0.0))


@pytest.fixture(scope="session")
def hand_geom():
    return hand_geometry()


@pytest.fixture
def rng():
    return np.random.default_rng(20021014)


def cube_points(geom, n, rng):
    return rng.uniform(geom.q1, geom.q2, size=(n, 3))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
