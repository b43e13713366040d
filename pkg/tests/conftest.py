from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from c1atlas.catalog import default_catalog
from c1atlas.chevalley import build_algebra
from c1atlas.rootsys import root_system
from c1atlas.scalars import GAUSSIAN


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture(scope="session")
def g2_split():
    return build_algebra(root_system("G2", 2))


@pytest.fixture(scope="session")
def g2_gaussian():
    return build_algebra(root_system("G2", 2), GAUSSIAN)


@pytest.fixture(scope="session")
def a2_split():
    return build_algebra(root_system("A", 2))
