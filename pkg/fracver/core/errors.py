"""Exceptions de fracver"""
from typing import Optional


class FracverError(Exception):
    """Erreur de base : toutes les erreurs de la bibliothèque en héritent."""

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self) -> str:
        if not self.context:
            return self.message
        details = ", ".join(f"{k}={v}" for k, v in self.context.items())
        return f"{self.message} ({details})"


class ConfigurationError(FracverError):
    pass


class PoleError(FracverError):
    """Gamma évaluée en un entier négatif ou nul."""


class DomainError(FracverError):
    """Ordre ou argument hors du domaine de l'opération."""


class SingularityError(DomainError):
    """Noyau non borné évalué en 0."""


class NonConvergenceError(FracverError):
    """Série ou itération de point fixe non convergée."""

    def __init__(self, message: str, step: Optional[int] = None,
                 gap: Optional[float] = None, **context):
        if step is not None:
            context["step"] = step
        if gap is not None:
            context["gap"] = gap
        super().__init__(message, **context)
        self.step = step
        self.gap = gap


class GridTooSmallError(FracverError):
    pass


class MissingDerivativeError(FracverError):
    pass


class NotApplicableError(FracverError):
    """Diagnostic réservé aux noyaux bornés."""


class UnsupportedKernelError(FracverError):
    pass


class ConstraintViolationError(FracverError):
    """g(0, y0) != 0 pour une réduction qui l'exige."""


class DegenerateSystemError(FracverError):
    pass


class QuadratureError(FracverError):
    pass


class UnknownClaimError(FracverError):
    pass
