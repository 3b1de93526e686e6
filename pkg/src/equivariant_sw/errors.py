"""Exception hierarchy. Every error raised by the package derives from
:class:`EquivariantSWError` so the CLI can map them onto exit codes."""


class EquivariantSWError(Exception):
    pass


class ZeroDivisionModP(EquivariantSWError, ZeroDivisionError):
    """Inverse or exponent of the zero residue was requested."""


class StructuralError(EquivariantSWError, ValueError):
    """A model violates a structural invariant (negative multiplicity, h[0] != 0, ...)."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class EmptyStratumError(EquivariantSWError, ValueError):
    pass


class DimensionMismatchError(EquivariantSWError, ValueError):
    """Residual dimensions disagree after cancellation: the model is inconsistent."""


class InvalidMatchingError(EquivariantSWError, ValueError):
    pass


class PositiveDimensionError(EquivariantSWError, ValueError):
    """d(c, G_j) > 0: the local multiplicity is not defined."""


class OverdeterminedError(EquivariantSWError, ValueError):
    pass


class UnderdeterminedError(EquivariantSWError, ValueError):
    pass


class ZeroTargetError(EquivariantSWError, ValueError):
    pass


class NonSplitSystemError(EquivariantSWError, ValueError):
    pass


class InfeasibleWeightsError(EquivariantSWError, ValueError):
    pass


class OrbitInconsistencyError(EquivariantSWError, RuntimeError):
    """A group image of a zero matched no computed zero (missed roots)."""
