# tests/conftest.py
"""Shared test fixtures and configuration."""

from pathlib import Path

import pytest

from tightness_mcp.complex import from_facets
from tightness_mcp.engine import TopologyEngine
from tightness_mcp.generators import boundary_simplex, csaszar_torus, kuehnel_handle
from tightness_mcp.linalg import GF2, RATIONALS, FieldSpec

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


@pytest.fixture
def engine():
    """A fresh engine with default settings and an empty memo."""
    return TopologyEngine(field="f2")


@pytest.fixture
def q():
    return RATIONALS


@pytest.fixture
def f2():
    return GF2


@pytest.fixture
def f3():
    return FieldSpec(3)


@pytest.fixture
def h2():
    """The 5-vertex Möbius band H(2)."""
    return kuehnel_handle(2)


@pytest.fixture
def fan():
    """A disc: cone over the 4-cycle 1-2-3-4 with apex 0."""
    return from_facets([(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 1, 4)])


@pytest.fixture
def tetra_boundary():
    """∂Δ³, the 4-vertex 2-sphere."""
    return boundary_simplex(2)


@pytest.fixture
def c5():
    """The 5-cycle."""
    return from_facets([(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture(scope="session")
def torus():
    """The bundled 7-vertex torus."""
    return csaszar_torus()


@pytest.fixture
def samples_dir():
    return SAMPLES


@pytest.fixture
def h2_facets():
    return [[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4], [0, 1, 4]]


@pytest.fixture
def fan_facets():
    return [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 1, 4]]
