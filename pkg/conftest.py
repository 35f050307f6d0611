import random
import sys
from pathlib import Path

import pytest

# namespace packages (algebra/, sumengine/, ...) resolve from the repository root
sys.path.insert(0, str(Path(__file__).resolve().parent))

from algebra.GroupSpec import GroupSpec  # noqa: E402


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240607)


@pytest.fixture
def z4() -> GroupSpec:
    return GroupSpec.cyclic(4)


@pytest.fixture
def z5() -> GroupSpec:
    return GroupSpec.cyclic(5)


@pytest.fixture
def z6() -> GroupSpec:
    return GroupSpec.cyclic(6)


@pytest.fixture
def klein() -> GroupSpec:
    return GroupSpec((2, 2))
