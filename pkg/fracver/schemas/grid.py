"""Schémas Pydantic pour les grilles et les fonctions échantillonnées"""
from typing import Callable, List, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from fracver.schemas.common import FloatArray


class Grid(BaseModel):
    """Maillage uniforme t_j = j·h de [0, T]"""
    model_config = ConfigDict(frozen=True)

    T: float = Field(..., gt=0, description="Horizon")
    N: int = Field(..., ge=1, description="Nombre de pas")

    @property
    def h(self) -> float:
        return self.T / self.N

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(0.0, self.T, self.N + 1)

    @property
    def midpoints(self) -> np.ndarray:
        return (np.arange(self.N) + 0.5) * self.h


class SampledFunction(BaseModel):
    """Valeurs (et dérivées optionnelles) d'une fonction sur une grille"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    grid: Grid
    values: FloatArray
    deriv_values: Optional[FloatArray] = None
    # La valeur en t_0 est une limite (convention), pas une évaluation
    limit_at_zero: bool = False
    unbounded_at_zero: bool = False
    # deriv_values obtenues par différences finies sur values
    numeric_derivative: bool = False
    warnings: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_lengths(self):
        expected = self.grid.N + 1
        if self.values.shape != (expected,):
            raise ValueError(f"values doit avoir {expected} éléments, reçu {self.values.shape}")
        if self.deriv_values is not None and self.deriv_values.shape != (expected,):
            raise ValueError(f"deriv_values doit avoir {expected} éléments")
        return self

    @property
    def nodes(self) -> np.ndarray:
        return self.grid.nodes

    def with_derivative(self, deriv_values: np.ndarray, warning: Optional[str] = None,
                        numeric: bool = False) -> "SampledFunction":
        warnings = list(self.warnings) + ([warning] if warning else [])
        return self.model_copy(update={"deriv_values": np.asarray(deriv_values, dtype=float),
                                       "numeric_derivative": numeric, "warnings": warnings})


class AnalyticFunction(BaseModel):
    """Fonction donnée par une référence vectorisée, avec dérivée analytique optionnelle"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str = "f"
    f: Callable[[np.ndarray], np.ndarray]
    df: Optional[Callable[[np.ndarray], np.ndarray]] = None

    def __call__(self, t) -> np.ndarray:
        return np.asarray(self.f(np.asarray(t, dtype=float)), dtype=float) * np.ones_like(t, dtype=float)

    def derivative(self, t) -> np.ndarray:
        return np.asarray(self.df(np.asarray(t, dtype=float)), dtype=float) * np.ones_like(t, dtype=float)

    def sample(self, grid: Grid) -> SampledFunction:
        t = grid.nodes
        deriv = self.derivative(t) if self.df is not None else None
        return SampledFunction(grid=grid, values=self(t), deriv_values=deriv)


# Entrée des opérateurs : référence analytique ou table d'échantillons
FunctionInput = Union[AnalyticFunction, SampledFunction]
