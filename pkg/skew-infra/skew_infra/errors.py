from typing import Optional


class SkewInfraError(Exception):
    pass


class ValidationError(SkewInfraError):
    pass


class DimensionMismatchError(ValidationError):
    def __init__(self, expected, actual, what: str = "dimension"):
        super().__init__(f"{what} mismatch: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class ReducibleCombinatoricsError(ValidationError):
    def __init__(self, top, bottom, prefix_length: int):
        super().__init__(
            f"Combinatorics {list(top)}/{list(bottom)} is reducible: "
            f"the first {prefix_length} labels of both rows coincide as sets"
        )
        self.prefix_length = prefix_length


class LoopError(ValidationError):
    pass


class NotPositiveError(ValidationError):
    def __init__(self, message: str, power: Optional[int] = None):
        super().__init__(message)
        self.power = power


class InstanceValidationError(ValidationError):
    def __init__(self, message: str, source: Optional[str] = None, line: Optional[int] = None):
        location = ""
        if source is not None:
            location = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(f"{location}{message}")
        self.source = source
        self.line = line


class CocycleGenerationError(ValidationError):
    def __init__(self, factors):
        super().__init__(f"Cocycle values do not generate the lattice (invariant factors {list(factors)})")
        self.factors = tuple(factors)


class FloorRangeError(ValidationError):
    def __init__(self, level: int, tower: int, height: int, tower_height: int):
        super().__init__(f"Height {height} outside level-{level} tower {tower} of height {tower_height}")
        self.tower_height = tower_height


class PathError(ValidationError):
    pass


class AdmissibilityError(PathError):
    pass


class PathLengthError(PathError):
    pass


class BoundaryPathError(SkewInfraError):
    """The path lies on the excluded orbit of minimal/maximal paths at this truncation depth"""

    def __init__(self, path):
        super().__init__(f"{self.__class__.__name__}: {path}")
        self.path = path


class MaximalPathError(BoundaryPathError):
    pass


class MinimalPathError(BoundaryPathError):
    pass


class NumericalError(SkewInfraError):
    pass


class PrecisionAlarm(NumericalError):
    def __init__(self, point, distance, step: int):
        super().__init__(f"Orbit point {point} came within {distance} of a discontinuity at step {step}")
        self.distance = distance
        self.step = step


class HorizonExceeded(NumericalError):
    def __init__(self, horizon: int, tower: int):
        super().__init__(f"No return to the induction interval within {horizon} steps (tower {tower})")
        self.horizon = horizon


class ConvergenceError(NumericalError):
    def __init__(self, iterations: int, residual: float):
        super().__init__(f"Power iteration did not converge after {iterations} iterations (residual {residual:.3e})")
        self.iterations = iterations
        self.residual = residual


class AmplificationBoundExceeded(SkewInfraError):
    def __init__(self, bound: int, diagnostics: dict):
        super().__init__(f"No qualifying common prefix up to repetition {bound}: {diagnostics}")
        self.bound = bound
        self.diagnostics = diagnostics


class NonPositiveParameterError(ValidationError):
    def __init__(self, values):
        super().__init__(f"Evaluation point must be strictly positive, got {list(values)}")
        self.values = tuple(values)
