"""
Centralized configuration for the interdiction game toolkit.

All environment variable reads live here. Import from this module rather than
calling os.getenv() directly in library code.
"""

import os

# Directory that experiment runs and figure CSVs are written to.
OUTPUT_DIR: str = os.getenv("INTERDICTION_OUTPUT_DIR", "results")

# Root log level applied by the CLI when --log-level is not given.
LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")


# ── LP kernel ──────────────────────────────────────────────────────
#
# The dense simplex is sized for games with tens of paths and nodes.
# Exceeding the pivot cap is reported as an error, never truncated.
LP_MAX_ITERATIONS: int = int(os.getenv("LP_MAX_ITERATIONS", "10000"))

# Entries smaller than this are never chosen as pivots.
LP_PIVOT_TOLERANCE: float = float(os.getenv("LP_PIVOT_TOLERANCE", "1e-10"))

# Residual / reduced-cost tolerance for feasibility and optimality tests.
LP_FEASIBILITY_TOLERANCE: float = float(os.getenv("LP_FEASIBILITY_TOLERANCE", "1e-9"))

# Consecutive degenerate pivots tolerated under Dantzig's rule before the
# kernel switches to Bland's rule for the rest of the phase.
LP_BLAND_THRESHOLD: int = int(os.getenv("LP_BLAND_THRESHOLD", "50"))


# ── Equilibrium certification ──────────────────────────────────────
EQUILIBRIUM_TOLERANCE: float = float(os.getenv("EQUILIBRIUM_TOLERANCE", "1e-6"))
STRATEGY_SUM_TOLERANCE: float = float(os.getenv("STRATEGY_SUM_TOLERANCE", "1e-9"))


# ── Experiments ────────────────────────────────────────────────────
#
# Sweep points are independent.  ``0`` solves them inline on the calling
# thread; a positive value fans them out to a spawn-context process pool.
SWEEP_WORKERS: int = int(os.getenv("SWEEP_WORKERS", "0"))

# Promised delivery time T^o in minutes; also the default reference point.
TARGET_DELIVERY_TIME: float = float(os.getenv("TARGET_DELIVERY_TIME", "30"))


# ── Prospect-theory defaults ───────────────────────────────────────
PT_DEFAULT_GAMMA: float = float(os.getenv("PT_DEFAULT_GAMMA", "0.5"))
PT_DEFAULT_LAMBDA: float = float(os.getenv("PT_DEFAULT_LAMBDA", "5"))
PT_DEFAULT_BETA: float = float(os.getenv("PT_DEFAULT_BETA", "0.8"))
PT_DEFAULT_ALPHA: float = float(os.getenv("PT_DEFAULT_ALPHA", "0.2"))
