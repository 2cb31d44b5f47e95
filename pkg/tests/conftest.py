import pytest

from eigenmult.algebraic import default_lambda_set
from eigenmult.enumeration import connected_graphs, trees


@pytest.fixture(scope="session")
def lambdas_q8():
    return default_lambda_set(8)


@pytest.fixture(scope="session")
def lambdas_q9():
    return default_lambda_set(9)


@pytest.fixture(scope="session")
def conn_upto6():
    return [g for n in range(1, 7) for g in connected_graphs(n)]


@pytest.fixture(scope="session")
def conn_upto7():
    return [g for n in range(1, 8) for g in connected_graphs(n)]


@pytest.fixture(scope="session")
def trees_upto12():
    return [t for n in range(1, 13) for t in trees(n)]
