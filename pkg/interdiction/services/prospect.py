"""Prospect-theoretic probability weighting and value functions."""

import logging
from typing import overload

import numpy as np
from numpy.typing import ArrayLike

from interdiction.schemas.experiment import ProspectParams

logger = logging.getLogger(__name__)


class ProbabilityDomainError(ValueError):
    """Probability outside [0, 1] or rationality exponent outside (0, 1]."""

    pass


@overload
def prelec_weight(p: float, gamma: float) -> float: ...
@overload
def prelec_weight(p: np.ndarray, gamma: float) -> np.ndarray: ...


def prelec_weight(p: float | np.ndarray, gamma: float) -> float | np.ndarray:
    """
    Prelec weighting w(p) = exp(-(-ln p)^gamma).

    Overweights probabilities below 1/e and underweights those above when
    gamma < 1; gamma = 1 is the identity.  w(0) = 0 by continuity, w(1) = 1.

    Args:
        p: Probability or array of probabilities in [0, 1]
        gamma: Rationality exponent in (0, 1]

    Returns:
        Subjective weight(s), same shape as ``p``

    Raises:
        ProbabilityDomainError: If any p is outside [0, 1] or gamma outside (0, 1]
    """
    if not 0.0 < gamma <= 1.0:
        raise ProbabilityDomainError(f"gamma must be in (0, 1], got {gamma}")
    arr = np.asarray(p, dtype=float)
    if np.any((arr < 0.0) | (arr > 1.0)) or np.any(np.isnan(arr)):
        raise ProbabilityDomainError(f"Probabilities must be in [0, 1], got {p}")

    positive = arr > 0.0
    safe = np.where(positive, arr, 1.0)
    weighted = np.where(positive, np.exp(-np.power(-np.log(safe), gamma)), 0.0)
    if np.ndim(p) == 0:
        return float(weighted)
    return weighted


def _power(magnitude: np.ndarray, exponent: float) -> np.ndarray:
    # exp(e * ln a) on the strictly positive branch, 0 at a = 0.
    positive = magnitude > 0.0
    return np.where(positive, np.exp(exponent * np.log(np.where(positive, magnitude, 1.0))), 0.0)


@overload
def value_vendor(a: float, params: ProspectParams) -> float: ...
@overload
def value_vendor(a: np.ndarray, params: ProspectParams) -> np.ndarray: ...


def value_vendor(a: float | np.ndarray, params: ProspectParams) -> float | np.ndarray:
    """
    Vendor (minimizer) value function.

    A delivery time above the reference (a >= 0) is a loss and is amplified:
    ``lambda * a**beta``.  Below the reference (a < 0) it is a gain:
    ``-(-a)**alpha``.
    """
    arr = np.asarray(a, dtype=float)
    losses = params.loss_multiplier * _power(np.where(arr >= 0, arr, 0.0), params.beta)
    gains = -_power(np.where(arr < 0, -arr, 0.0), params.alpha)
    result = np.where(arr >= 0, losses, gains)
    return float(result) if np.ndim(a) == 0 else result


@overload
def value_attacker(a: float, params: ProspectParams) -> float: ...
@overload
def value_attacker(a: np.ndarray, params: ProspectParams) -> np.ndarray: ...


def value_attacker(a: float | np.ndarray, params: ProspectParams) -> float | np.ndarray:
    """
    Attacker (maximizer) value function.

    A delivery time below the reference (a < 0) is a loss for the attacker:
    ``-lambda * (-a)**beta``.  At or above it (a >= 0) it is a gain:
    ``a**alpha``.
    """
    arr = np.asarray(a, dtype=float)
    losses = -params.loss_multiplier * _power(np.where(arr < 0, -arr, 0.0), params.beta)
    gains = _power(np.where(arr >= 0, arr, 0.0), params.alpha)
    result = np.where(arr < 0, losses, gains)
    return float(result) if np.ndim(a) == 0 else result


def perceived_probabilities(probabilities: ArrayLike, gamma: float) -> np.ndarray:
    """Subjective weights w(p_n) for every node, in the order given."""
    return np.asarray(prelec_weight(np.asarray(probabilities, dtype=float), gamma))
