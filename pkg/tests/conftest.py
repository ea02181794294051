import pytest

from agstab.pipeline import load_cone_specs, load_dataset


@pytest.fixture(scope="session")
def matroidal_specs():
    _, specs = load_cone_specs("matroidal")
    return {s.name: s for s in specs}


@pytest.fixture(scope="session")
def perfect_specs():
    _, specs = load_cone_specs("perfect")
    return {s.name: s for s in specs}


@pytest.fixture(scope="session")
def matroidal_dataset():
    return load_dataset("matroidal", order=24)


@pytest.fixture(scope="session")
def perfect_dataset():
    return load_dataset("perfect", order=24)
