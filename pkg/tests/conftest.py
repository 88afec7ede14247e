"""Shared fixtures for the interdiction test suite."""

import numpy as np
import pytest

from interdiction.services.graph import incidence, parse_graph
from interdiction.services.paper_instance import builtin_paper_instance
from interdiction.services.payoff import build_objective_matrix
from interdiction.services.solver import solve_zero_sum
from tests.fixtures.factories import GraphFactory


@pytest.fixture
def rng():
    """Seeded generator so randomized tests are reproducible."""
    return np.random.default_rng(20240917)


@pytest.fixture(scope="session")
def paper_instance():
    """Built-in 10-node instance and its 18 canonical paths."""
    return builtin_paper_instance()


@pytest.fixture(scope="session")
def paper_incidence(paper_instance):
    graph, paths = paper_instance
    return incidence(graph, paths)


@pytest.fixture(scope="session")
def paper_objective(paper_instance, paper_incidence):
    graph, paths = paper_instance
    return build_objective_matrix(graph, paths, paper_incidence)


@pytest.fixture(scope="session")
def paper_saddle_point(paper_objective):
    return solve_zero_sum(paper_objective)


@pytest.fixture
def diamond_graph():
    return parse_graph(GraphFactory.diamond())


@pytest.fixture
def single_edge_graph():
    return parse_graph(GraphFactory.single_edge())
