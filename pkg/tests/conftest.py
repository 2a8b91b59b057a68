from pathlib import Path

import pytest

from hessberg.rootsys import Root, build_root_system, parse_cartan
from hessberg.weyl import levi_datum, weyl_group


@pytest.fixture
def system():
    """Root system by type name, e.g. ``system('A2')``."""
    return lambda name: build_root_system(parse_cartan(name))


@pytest.fixture
def group(system):
    return lambda name: weyl_group(system(name))


@pytest.fixture
def a2(system):
    return system('A2')


@pytest.fixture
def W_a2(group):
    return group('A2')


@pytest.fixture
def torus_a2(W_a2):
    return levi_datum(W_a2, [])


@pytest.fixture
def root():
    return lambda *coeffs: Root(tuple(coeffs))


@pytest.fixture
def golden():
    """Bytes of a checked-in file under tests/golden/."""
    return lambda name: (Path(__file__).parent / 'golden' / name).read_bytes()
