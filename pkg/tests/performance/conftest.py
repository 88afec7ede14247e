"""Pytest configuration for the performance benchmark suite.

Houses CLI flags that gate heavyweight scenarios (e.g. the large random
graph benchmark).  ``pytest_addoption`` only fires when registered at the
``conftest`` level, so the option lives here instead of the test file.
"""

from __future__ import annotations


def pytest_addoption(parser):
    """Register opt-in flags used by the performance benchmark scenarios."""
    group = parser.getgroup("solver-benchmark")
    group.addoption(
        "--run-large-games",
        action="store_true",
        default=False,
        help="Run the benchmark on a large random security graph (slow).",
    )
