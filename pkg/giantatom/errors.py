from typing import Optional


class GiantAtomError(Exception):
    """Base class for the library's domain failures."""


class ValidationError(GiantAtomError, ValueError):
    """A physics or schema violation attributable to a named field."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class ConfigError(ValidationError):
    pass


class QuadratureError(GiantAtomError):
    def __init__(
        self,
        message: str,
        abserr: float = float("nan"),
        tolerance: float = float("nan"),
        grid_point: Optional[float] = None,
    ):
        super().__init__(message)
        self.abserr = abserr
        self.tolerance = tolerance
        self.grid_point = grid_point

    def __reduce__(self):
        return (self.__class__, (self.args[0], self.abserr, self.tolerance, self.grid_point))

    def at_grid_point(self, omega: float) -> "QuadratureError":
        return QuadratureError(
            f"{self.args[0]} (at omega={omega:.17g})",
            abserr=self.abserr,
            tolerance=self.tolerance,
            grid_point=omega,
        )


class SingularLoopError(GiantAtomError):
    pass


class ChannelCountError(GiantAtomError):
    pass


class TripletShapeError(GiantAtomError):
    pass


class DegenerateSteadyStateError(GiantAtomError):
    def __init__(self, message: str, nullity: int):
        super().__init__(message)
        self.nullity = nullity


class IntegrationError(GiantAtomError):
    def __init__(self, message: str, status: int = -1):
        super().__init__(message)
        self.status = status


class UnknownPresetError(GiantAtomError, KeyError):
    pass
