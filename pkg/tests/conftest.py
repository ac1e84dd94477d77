"""
Shared fixtures: small rings, worked example codes and the property-suite corpus.
"""

from pathlib import Path

import pytest

from src.models.ring import RingParams
from src.processors.search_harness import build_corpus
from src.utils.linear_code import ambient_code, code_from_lists, zero_code

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def z4():
    return RingParams(2, 2)


@pytest.fixture(scope="session")
def z8():
    return RingParams(2, 3)


@pytest.fixture(scope="session")
def z9():
    return RingParams(3, 2)


@pytest.fixture(scope="session")
def z27():
    return RingParams(3, 3)


@pytest.fixture(scope="session")
def z9_ambient(z9):
    return ambient_code(z9, 1)


@pytest.fixture(scope="session")
def z9_three(z9):
    """<3> over Z_9, n = 1."""
    return code_from_lists(z9, 1, [[3]])


@pytest.fixture(scope="session")
def z9_pair(z9):
    """<(1,2)> over Z_9."""
    return code_from_lists(z9, 2, [[1, 2]])


@pytest.fixture(scope="session")
def z9_zero(z9):
    return zero_code(z9, 2)


@pytest.fixture(scope="session")
def corpus():
    """Fixed-seed corpus shared by the property suites."""
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_s2(corpus):
    return [code for code in corpus if code.ring.s >= 2]
