from pathlib import Path

import pytest

from cliffordcorr.oracle import example_library

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def library():
    return {inst.name: inst for inst in example_library()}


@pytest.fixture(scope="session")
def s3a3(library):
    return library["S3>A3"]


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
