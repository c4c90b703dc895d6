"""
Shared ring fixtures
"""

import pytest

from app.models.ring import FieldSpec, PolyRing
from tests.strategies import ring_of


@pytest.fixture
def qxy() -> PolyRing:
    return ring_of("x,y")


@pytest.fixture
def qxyz() -> PolyRing:
    return ring_of("x,y,z")


@pytest.fixture
def f3xyz() -> PolyRing:
    return ring_of("x,y,z", FieldSpec.prime(3))


@pytest.fixture
def f7xyz() -> PolyRing:
    return ring_of("x,y,z", FieldSpec.prime(7))
