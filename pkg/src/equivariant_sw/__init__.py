"""Mod-p congruences for Seiberg-Witten invariants under Z_p-actions.

Weight-data models of equivariant monopole maps, local multiplicities at
fixed strata, the resulting congruence, and a brute-force zero-counting
oracle on small equivariant polynomial systems.
"""

from equivariant_sw.errors import (
    DimensionMismatchError,
    EmptyStratumError,
    EquivariantSWError,
    InfeasibleWeightsError,
    InvalidMatchingError,
    NonSplitSystemError,
    OrbitInconsistencyError,
    OverdeterminedError,
    PositiveDimensionError,
    StructuralError,
    UnderdeterminedError,
    ZeroDivisionModP,
    ZeroTargetError,
)
from equivariant_sw.modp import PrimeModulus, Residue, as_exponent, inv, ratio
from equivariant_sw.reps import ModelSpec, WeightVector

__all__ = [
    "DimensionMismatchError",
    "EmptyStratumError",
    "EquivariantSWError",
    "InfeasibleWeightsError",
    "InvalidMatchingError",
    "ModelSpec",
    "NonSplitSystemError",
    "OrbitInconsistencyError",
    "OverdeterminedError",
    "PositiveDimensionError",
    "PrimeModulus",
    "Residue",
    "StructuralError",
    "UnderdeterminedError",
    "WeightVector",
    "ZeroDivisionModP",
    "ZeroTargetError",
    "as_exponent",
    "inv",
    "ratio",
]

__version__ = "0.1.0"
