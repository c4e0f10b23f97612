class BopsError(Exception):
    """Base class for library errors."""


class BackendError(BopsError, TypeError):
    """Rational and float scalars were mixed, or a backend is unsupported."""


class ShapeError(BopsError, ValueError):
    pass


class SingularMatrixError(BopsError, ArithmeticError):
    pass


class NotPositiveDefiniteError(BopsError, ValueError):
    def __init__(self, eigenvalue, message=None):
        self.eigenvalue = eigenvalue
        super().__init__(message or f"matrix is not positive definite (eigenvalue {eigenvalue!r})")


class ConvergenceError(BopsError, RuntimeError):
    def __init__(self, message, estimate=None):
        self.estimate = estimate
        super().__init__(message)


class QuasiDefinitenessError(BopsError, ArithmeticError):
    """The moment functional is not quasi-definite up to the requested degree."""

    def __init__(self, degree, detail=""):
        self.degree = degree
        msg = f"moment functional is not quasi-definite at degree {degree}"
        super().__init__(f"{msg}: {detail}" if detail else msg)
