import pytest

from projcode.graphs import build_graph, incidence_graph_1_3


@pytest.fixture(scope="session")
def pi732():
    return build_graph(7, 3, 2, "simplex")


@pytest.fixture(scope="session")
def gamma_1_3():
    return incidence_graph_1_3()


@pytest.fixture(scope="session")
def gamma2_f2_4():
    return build_graph(4, 2, 2, "all")
