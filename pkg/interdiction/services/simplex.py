"""
Dense two-phase simplex for the small LPs behind matrix-game solving.

The kernel works on a full tableau: games here have tens of rows and
columns, so dense pivots are cheaper than any sparse bookkeeping.

Pivoting uses Dantzig's most-negative reduced cost with a smallest-basis-index
ratio-test tie-break.  After ``bland_threshold`` consecutive degenerate
pivots the phase switches to Bland's rule, which cannot cycle.  Both rules
are deterministic, so the same problem always yields the same vertex.
"""

import logging

import numpy as np

from interdiction.config import (
    LP_BLAND_THRESHOLD,
    LP_FEASIBILITY_TOLERANCE,
    LP_MAX_ITERATIONS,
    LP_PIVOT_TOLERANCE,
)
from interdiction.models.game import ConstraintSense, LpProblem, LpResult

logger = logging.getLogger(__name__)


class LpError(Exception):
    """Base class for LP kernel failures."""

    pass


class InfeasibleError(LpError):
    """No point satisfies the constraints."""

    pass


class UnboundedError(LpError):
    """The objective improves without bound over the feasible set."""

    pass


class IterationLimitError(LpError):
    """The pivot cap was reached before optimality."""

    pass


_FLIPPED = {
    ConstraintSense.LE: ConstraintSense.GE,
    ConstraintSense.GE: ConstraintSense.LE,
    ConstraintSense.EQ: ConstraintSense.EQ,
}


class _Tableau:
    """Row-reduced tableau ``[B^-1 A | B^-1 b]`` with its basis."""

    def __init__(
        self,
        table: np.ndarray,
        basis: np.ndarray,
        *,
        pivot_tol: float,
        tol: float,
        bland_threshold: int,
    ):
        self.table = table
        self.basis = basis
        self.pivot_tol = pivot_tol
        self.tol = tol
        self.bland_threshold = bland_threshold
        self.bland_engaged = False

    @property
    def rhs(self) -> np.ndarray:
        return self.table[:, -1]

    def pivot(self, row: int, col: int) -> None:
        t = self.table
        t[row] /= t[row, col]
        column = t[:, col].copy()
        column[row] = 0.0
        t -= np.outer(column, t[row])
        self.basis[row] = col

    def optimize(self, costs: np.ndarray, allowed: np.ndarray, budget: int) -> int:
        """
        Minimize ``costs @ x`` from the current basic feasible solution.

        Returns:
            Number of pivots performed

        Raises:
            UnboundedError: If an entering column has no positive entry
            IterationLimitError: If more than ``budget`` pivots are needed
        """
        pivots = 0
        degenerate_run = 0
        use_bland = False

        while True:
            reduced = costs - costs[self.basis] @ self.table[:, :-1]
            reduced[~allowed] = 0.0
            candidates = np.flatnonzero(reduced < -self.tol)
            if candidates.size == 0:
                return pivots

            if use_bland:
                col = int(candidates[0])
            else:
                col = int(candidates[np.argmin(reduced[candidates])])

            column = self.table[:, col]
            rows = np.flatnonzero(column > self.pivot_tol)
            if rows.size == 0:
                raise UnboundedError(f"Objective is unbounded along variable {col}")

            ratios = self.rhs[rows] / column[rows]
            step = ratios.min()
            ties = rows[ratios <= step + self.tol]
            row = int(ties[np.argmin(self.basis[ties])])

            if pivots >= budget:
                raise IterationLimitError(f"Simplex did not converge within {budget} pivots")
            self.pivot(row, col)
            pivots += 1

            degenerate_run = degenerate_run + 1 if step <= self.tol else 0
            if not use_bland and degenerate_run > self.bland_threshold:
                use_bland = True
                self.bland_engaged = True
                logger.warning(
                    f"{degenerate_run} consecutive degenerate pivots, switching to Bland's rule"
                )

    def drive_out(self, artificial: np.ndarray) -> None:
        """Pivot zero-valued artificials out of the basis; drop redundant rows."""
        redundant = []
        for row in range(self.table.shape[0]):
            if not artificial[self.basis[row]]:
                continue
            candidates = np.flatnonzero(
                ~artificial & (np.abs(self.table[row, :-1]) > self.pivot_tol)
            )
            if candidates.size:
                self.pivot(row, int(candidates[0]))
            else:
                redundant.append(row)
        if redundant:
            logger.warning(f"Dropping {len(redundant)} redundant constraint row(s)")
            self.table = np.delete(self.table, redundant, axis=0)
            self.basis = np.delete(self.basis, redundant)
        self.table[:, -1] = np.maximum(self.table[:, -1], 0.0)


def solve_lp(
    problem: LpProblem,
    *,
    max_iterations: int = LP_MAX_ITERATIONS,
    pivot_tol: float = LP_PIVOT_TOLERANCE,
    tol: float = LP_FEASIBILITY_TOLERANCE,
    bland_threshold: int = LP_BLAND_THRESHOLD,
) -> LpResult:
    """
    Solve an LP over nonnegative variables with the two-phase simplex method.

    Phase one minimizes the sum of artificial variables added to ``>=`` and
    ``=`` rows; phase two optimizes the real objective from the feasible
    basis it leaves behind.  Problems with only ``<=`` rows and nonnegative
    right-hand sides start directly in phase two from the slack basis.

    Args:
        problem: The LP to solve
        max_iterations: Pivot cap across both phases
        pivot_tol: Smallest admissible pivot magnitude
        tol: Feasibility and optimality tolerance
        bland_threshold: Consecutive degenerate pivots before Bland's rule

    Returns:
        LpResult with the optimal vertex and objective value

    Raises:
        InfeasibleError: If phase one ends with positive infeasibility
        UnboundedError: If the objective is unbounded
        IterationLimitError: If ``max_iterations`` pivots are exceeded
    """
    A = problem.constraints.copy()
    b = problem.rhs.copy()
    senses = list(problem.senses)
    m, n = A.shape

    for i in range(m):
        if b[i] < 0:
            A[i] *= -1.0
            b[i] *= -1.0
            senses[i] = _FLIPPED[senses[i]]

    n_slack = sum(s != ConstraintSense.EQ for s in senses)
    n_artificial = sum(s != ConstraintSense.LE for s in senses)
    total = n + n_slack + n_artificial

    table = np.zeros((m, total + 1))
    table[:, :n] = A
    table[:, -1] = b
    basis = np.empty(m, dtype=int)
    artificial = np.zeros(total, dtype=bool)

    slack_col, artificial_col = n, n + n_slack
    for i, sense in enumerate(senses):
        if sense != ConstraintSense.EQ:
            table[i, slack_col] = 1.0 if sense == ConstraintSense.LE else -1.0
            if sense == ConstraintSense.LE:
                basis[i] = slack_col
            slack_col += 1
        if sense != ConstraintSense.LE:
            table[i, artificial_col] = 1.0
            basis[i] = artificial_col
            artificial[artificial_col] = True
            artificial_col += 1

    tableau = _Tableau(
        table, basis, pivot_tol=pivot_tol, tol=tol, bland_threshold=bland_threshold
    )

    phase_one = 0
    if artificial.any():
        phase_one = tableau.optimize(
            artificial.astype(float), np.ones(total, dtype=bool), max_iterations
        )
        infeasibility = float(tableau.rhs[artificial[tableau.basis]].sum())
        if infeasibility > tol * max(1.0, float(np.abs(b).max(initial=0.0))):
            raise InfeasibleError(f"LP is infeasible (phase-one residual {infeasibility:.3e})")
        tableau.drive_out(artificial)
        logger.debug(f"Phase one reached a feasible basis after {phase_one} pivots")

    costs = np.zeros(total)
    costs[:n] = -problem.objective if problem.maximize else problem.objective
    phase_two = tableau.optimize(costs, ~artificial, max_iterations - phase_one)

    solution = np.zeros(total)
    solution[tableau.basis] = tableau.rhs
    x = np.maximum(solution[:n], 0.0)
    value = float(problem.objective @ x)
    logger.debug(f"LP solved in {phase_one + phase_two} pivots, objective {value:.12g}")

    return LpResult(
        x=x,
        value=value,
        iterations=phase_one + phase_two,
        phase_one_iterations=phase_one,
        bland_engaged=tableau.bland_engaged,
    )
