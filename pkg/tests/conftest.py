import random

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--seed", type=int, default=20240824,
        help="seed for randomized property tests")


@pytest.fixture
def rng(request):
    """A fresh seeded generator per test, reproducible via --seed."""
    return random.Random(request.config.getoption("--seed"))
