"""Numerical verification of inner product space inequalities.

The package turns classical Schwarz, triangle and uncertainty type
inequalities (with their refinements, reverses and equality cases) into
executable checks over finite dimensional real and complex spaces and
quadrature-discretized vector valued functions.
"""

from .core import (CVector, WeightVector, as_vector, complex_inner,
                   conj_vector, field_of, inner, norm, weighted_inner)
from .catalog import (Check, CheckInstance, CheckReport, all_checks,
                      checks_in_suite, equality_witness, evaluate,
                      get_check, hypothesis_holds)

__all__ = [
    "CVector", "WeightVector", "as_vector", "complex_inner", "conj_vector",
    "field_of", "inner", "norm", "weighted_inner",
    "Check", "CheckInstance", "CheckReport", "all_checks", "checks_in_suite",
    "equality_witness", "evaluate", "get_check", "hypothesis_holds",
]

__version__ = "0.1.0"
