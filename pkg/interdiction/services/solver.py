"""Zero-sum matrix game solving via the LP reduction, with equilibrium certification."""

import logging
from typing import overload

import numpy as np

from interdiction.config import EQUILIBRIUM_TOLERANCE
from interdiction.models.game import (
    ConstraintSense,
    EquilibriumReport,
    GameSolution,
    LpProblem,
    MixedStrategy,
    PayoffMatrix,
)
from interdiction.services.payoff import DimensionMismatchError
from interdiction.services.simplex import LpError, solve_lp

logger = logging.getLogger(__name__)


class SolverError(Exception):
    """An LP behind a game solve failed."""

    pass


class CertificationError(SolverError):
    """A recovered strategy pair failed its equilibrium certificate."""

    pass


def _entries(m: PayoffMatrix | np.ndarray) -> np.ndarray:
    entries = m.entries if isinstance(m, PayoffMatrix) else np.asarray(m, dtype=float)
    if entries.ndim != 2 or 0 in entries.shape:
        raise DimensionMismatchError(f"Expected a non-empty 2-D payoff matrix, got {entries.shape}")
    return entries


def _describe(m: PayoffMatrix | np.ndarray) -> str:
    rows, cols = _entries(m).shape
    kind = m.kind if isinstance(m, PayoffMatrix) else "matrix"
    return f"{kind} game ({rows}x{cols})"


@overload
def shift_positive(m: PayoffMatrix) -> tuple[PayoffMatrix, float]: ...
@overload
def shift_positive(m: np.ndarray) -> tuple[np.ndarray, float]: ...


def shift_positive(
    m: PayoffMatrix | np.ndarray,
) -> tuple[PayoffMatrix | np.ndarray, float]:
    """
    Add a constant so every entry is strictly positive.

    The LP reduction divides by the game value, so it needs a positive
    matrix.  Adding a constant to every entry shifts the value by that
    constant and leaves the optimal strategies unchanged.

    Returns:
        (shifted matrix, c) with c = 0 when the minimum entry is already
        positive, else c = 1 - min entry so every shifted entry is >= 1.
    """
    entries = _entries(m)
    lowest = float(entries.min())
    shift = 0.0 if lowest > 0 else 1.0 - lowest
    if shift == 0.0:
        return m, 0.0

    logger.debug(f"Shifting payoff matrix by {shift:.6g} (min entry {lowest:.6g})")
    if isinstance(m, PayoffMatrix):
        return (
            PayoffMatrix(
                entries=entries + shift,
                kind=m.kind,
                row_labels=m.row_labels,
                column_labels=m.column_labels,
            ),
            shift,
        )
    return entries + shift, shift


def evader_lp(entries: np.ndarray) -> LpProblem:
    """max 1^T y_hat  s.t.  M^T y_hat <= 1, y_hat >= 0."""
    rows, cols = entries.shape
    return LpProblem(
        objective=np.ones(rows),
        constraints=entries.T,
        senses=(ConstraintSense.LE,) * cols,
        rhs=np.ones(cols),
        maximize=True,
    )


def interdictor_lp(entries: np.ndarray) -> LpProblem:
    """min 1^T x_hat  s.t.  M x_hat >= 1, x_hat >= 0."""
    rows, cols = entries.shape
    return LpProblem(
        objective=np.ones(cols),
        constraints=entries,
        senses=(ConstraintSense.GE,) * rows,
        rhs=np.ones(rows),
        maximize=False,
    )


def verify_equilibrium(
    m: PayoffMatrix | np.ndarray,
    y: MixedStrategy,
    x: MixedStrategy,
    eps: float = EQUILIBRIUM_TOLERANCE,
) -> EquilibriumReport:
    """
    Measure how far a strategy pair is from a saddle point.

    The evader gap is ``y^T M x - min_h (M x)_h`` (gain from the best pure
    path deviation); the interdictor gap is ``max_n (y^T M)_n - y^T M x``.
    The pair is an equilibrium when both gaps are at most ``eps``.

    Raises:
        DimensionMismatchError: If strategy lengths do not match the matrix
    """
    entries = _entries(m)
    rows, cols = entries.shape
    if len(y) != rows or len(x) != cols:
        raise DimensionMismatchError(
            f"Strategies of length ({len(y)}, {len(x)}) do not fit a {rows}x{cols} matrix"
        )
    column_payoffs = y.probabilities @ entries
    row_payoffs = entries @ x.probabilities
    value = float(column_payoffs @ x.probabilities)
    return EquilibriumReport(
        value=value,
        evader_gap=max(0.0, value - float(row_payoffs.min())),
        interdictor_gap=max(0.0, float(column_payoffs.max()) - value),
        tolerance=eps,
    )


def security_level(m: PayoffMatrix | np.ndarray, y: MixedStrategy) -> float:
    """u_1(y): the worst payoff the evader can suffer while playing ``y``."""
    return float((y.probabilities @ _entries(m)).max())


def guaranteed_level(m: PayoffMatrix | np.ndarray, x: MixedStrategy) -> float:
    """u_2(x): the payoff the interdictor secures while playing ``x``."""
    return float((_entries(m) @ x.probabilities).min())


def solve_zero_sum(
    m: PayoffMatrix | np.ndarray,
    *,
    eps: float = EQUILIBRIUM_TOLERANCE,
    strict: bool = True,
) -> GameSolution:
    """
    Solve a zero-sum game where the row player minimizes ``y^T M x``.

    Both LPs run on the shifted matrix.  The evader LP yields y = y_hat / mu_1
    and value 1/mu_1; the interdictor LP yields x = x_hat / mu_2 and value
    1/mu_2.  Values are unshifted before they are reported.

    The pair is certified on the unshifted matrix: exploitability <= eps,
    mu_1 = mu_2 to relative ``eps``, and the two recovered values agree.

    Args:
        m: Payoff matrix, H >= 1 rows and N >= 1 columns
        eps: Certification tolerance
        strict: Raise on a failed certificate instead of flagging it

    Returns:
        GameSolution

    Raises:
        SolverError: If either LP fails
        CertificationError: If ``strict`` and the certificate fails
    """
    entries = _entries(m)
    shifted, shift = shift_positive(entries)

    try:
        primal = solve_lp(evader_lp(shifted))
        dual = solve_lp(interdictor_lp(shifted))
    except LpError as e:
        raise SolverError(f"LP failed while solving {_describe(m)}: {e}") from e

    mu_primal, mu_dual = primal.value, dual.value
    y = MixedStrategy.from_weights(primal.x)
    x = MixedStrategy.from_weights(dual.x)
    value_primal = 1.0 / mu_primal - shift
    value_dual = 1.0 / mu_dual - shift

    report = verify_equilibrium(entries, y, x, eps)
    identity_ok = abs(mu_primal - mu_dual) <= eps * max(mu_primal, mu_dual)
    values_ok = abs(value_primal - value_dual) <= eps * max(1.0, abs(value_primal))
    certified = report.is_equilibrium and identity_ok and values_ok

    if not certified:
        message = (
            f"Certificate failed for {_describe(m)}: exploitability {report.exploitability:.3e}, "
            f"mu_1={mu_primal:.12g}, mu_2={mu_dual:.12g}"
        )
        if strict:
            raise CertificationError(message)
        logger.warning(message)

    logger.debug(
        f"Solved {_describe(m)}: value {value_primal:.6f}, exploitability "
        f"{report.exploitability:.2e}, shift {shift:.4g}"
    )
    return GameSolution(
        y=y,
        x=x,
        value=value_primal,
        value_primal=value_primal,
        value_dual=value_dual,
        mu_primal=mu_primal,
        mu_dual=mu_dual,
        exploitability=report.exploitability,
        evader_gap=report.evader_gap,
        interdictor_gap=report.interdictor_gap,
        shift=shift,
        iterations={"evader": primal.iterations, "interdictor": dual.iterations},
        certified=certified,
    )


def solve_pt_security(
    m_vendor: PayoffMatrix, m_attacker: PayoffMatrix, *, strict: bool = True
) -> tuple[GameSolution, GameSolution]:
    """
    Security strategies of two players who value outcomes differently.

    The vendor plays the min-max strategy of its own matrix and the attacker
    the max-min strategy of its own; each comes from ``solve_zero_sum`` on
    that matrix.  The combined pair is generally not a saddle point of
    either game.

    Returns:
        (vendor solution, attacker solution); use ``vendor.y`` and ``attacker.x``

    Raises:
        DimensionMismatchError: If the matrices differ in shape
        SolverError: Propagated from either solve
    """
    if m_vendor.shape != m_attacker.shape:
        raise DimensionMismatchError(
            f"Vendor matrix {m_vendor.shape} and attacker matrix {m_attacker.shape} differ"
        )
    vendor = solve_zero_sum(m_vendor, strict=strict)
    attacker = solve_zero_sum(m_attacker, strict=strict)
    return vendor, attacker
