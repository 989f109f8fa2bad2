import pytest

from seqlab.classical import bernoulli_upto, derived_bernoulli, euler_upto, sequence_e


@pytest.fixture(scope="session")
def btable300():
    return bernoulli_upto(300)


@pytest.fixture(scope="session")
def derived300(btable300):
    return derived_bernoulli(300, btable300)


@pytest.fixture(scope="session")
def etable200():
    return euler_upto(200)


@pytest.fixture(scope="session")
def e200():
    return sequence_e(200)
