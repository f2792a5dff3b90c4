"""Shepard-Bernoulli scattered data interpolation."""

from ._bshep import (
    ArgumentError,
    Interpolant,
    NumericalError,
    generate_nodes,
    run_benchmark,
    test_function,
)

__all__ = [
    "ArgumentError",
    "Interpolant",
    "NumericalError",
    "generate_nodes",
    "run_benchmark",
    "test_function",
]
__version__ = "0.1.0"
