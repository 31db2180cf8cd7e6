import pathlib

import pytest

from sboxmq.mqgen import (build_aia32, build_chain_aia, build_chain_rd,
                          build_rd16, build_rd23, build_rd32)
from sboxmq.sbox import aia_spec, rd_spec, truth_table

DATA = pathlib.Path(__file__).parent / "data"


def data_text(name):
    return (DATA / name).read_text()


def data_lines(name):
    return data_text(name).splitlines()


@pytest.fixture(scope="session")
def rd_table():
    return truth_table(rd_spec())


@pytest.fixture(scope="session")
def aia_table():
    return truth_table(aia_spec())


@pytest.fixture(scope="session")
def rd23():
    return build_rd23()


@pytest.fixture(scope="session")
def rd16():
    return build_rd16()


@pytest.fixture(scope="session")
def rd32():
    return build_rd32()


@pytest.fixture(scope="session")
def aia32():
    return build_aia32()


@pytest.fixture(scope="session")
def chain_rd():
    return build_chain_rd()


@pytest.fixture(scope="session")
def chain_aia():
    return build_chain_aia()
