import random

import pytest

from realcubic.atlas import build_atlas
from realcubic.topology import propagate
from realcubic.walls import MoveKind, cusp_stratum


@pytest.fixture(scope="session")
def k4():
    return build_atlas("K4")


@pytest.fixture(scope="session")
def k3():
    return build_atlas("K3")


@pytest.fixture(scope="session")
def cusp_verdicts(k4):
    """Verdicts for every R-edge, keyed by (source id, target id)."""
    out = {}
    for e in k4.edges:
        if e.move == MoveKind.R:
            out[(e.source, e.target)] = cusp_stratum(
                (k4.vertex(e.source), k4.vertex(e.target)))
    return out


@pytest.fixture(scope="session")
def propagation(k4, cusp_verdicts):
    return propagate(k4, dict(cusp_verdicts))


@pytest.fixture()
def rng():
    return random.Random(0)
