import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).parents[1]))

from jordkit.algebra import standard_k3, standard_k10, standard_k10_tensor  # noqa: E402
from jordkit.morphisms import standard_iso  # noqa: E402


# Shared algebras; elements compare their algebras by identity, so tests use
# the cached instances.
@pytest.fixture(scope="session")
def k10():
    return standard_k10()


@pytest.fixture(scope="session")
def tensor():
    return standard_k10_tensor()


@pytest.fixture(scope="session")
def k3():
    return standard_k3()


@pytest.fixture(scope="session")
def iso():
    return standard_iso()
