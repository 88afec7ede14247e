"""LP game values against independent oracles on random matrices."""

import numpy as np
import pytest

from interdiction.services.solver import solve_zero_sum, verify_equilibrium
from tests.fixtures.factories import MatrixFactory
from tests.fixtures.oracles import fictitious_play, support_enumeration_value

pytestmark = [pytest.mark.integration, pytest.mark.slow]

SEEDS = range(200)


@pytest.mark.parametrize("seed", SEEDS)
def test_value_matches_oracles(seed):
    m = MatrixFactory.uniform(np.random.default_rng(1000 + seed))

    solution = solve_zero_sum(m)

    assert verify_equilibrium(m, solution.y, solution.x).exploitability <= 1e-6

    lower, upper = fictitious_play(m, max_iterations=5000)
    assert lower - 1e-9 <= solution.value <= upper + 1e-9
    if upper - lower <= 2e-3:
        assert solution.value == pytest.approx((lower + upper) / 2, abs=1e-3)

    exact = support_enumeration_value(m)
    if exact is not None:
        assert solution.value == pytest.approx(exact, abs=1e-9)


@pytest.mark.parametrize("seed", range(25))
def test_degenerate_matrices_certify(seed):
    m = MatrixFactory.with_duplicated_row(np.random.default_rng(seed))

    solution = solve_zero_sum(m)

    assert solution.certified
    assert solution.exploitability <= 1e-6
