"""Schémas du problème de diffusion fractionnaire en temps sur [0, 1]"""
from typing import Callable, List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from fracver.schemas.common import FloatArray
from fracver.schemas.grid import Grid
from fracver.schemas.kernel import KernelSpec


def _zero_forcing(x, t):
    return np.zeros_like(np.asarray(x, dtype=float))


def _zero_boundary(t):
    return 0.0


class HeatProblem(BaseModel):
    """D_t u − Δu = f sur (0, 1) × (0, T], Dirichlet, u(x, 0) = v0(x)"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    x_nodes: int = Field(..., ge=3, description="Points intérieurs")
    grid: Grid
    kernel: KernelSpec
    v0: Callable = Field(..., description="Donnée initiale, vectorisée en x")
    forcing: Callable = Field(_zero_forcing, description="f(x, t), vectorisée en x")
    g_left: Callable = _zero_boundary
    g_right: Callable = _zero_boundary

    @property
    def dx(self) -> float:
        return 1.0 / (self.x_nodes + 1)

    @property
    def x(self) -> np.ndarray:
        """Nœuds intérieurs"""
        return np.arange(1, self.x_nodes + 1) * self.dx

    @property
    def compatible(self) -> bool:
        """v0(0) = g_left(0) et v0(1) = g_right(0)"""
        ends = np.asarray(self.v0(np.array([0.0, 1.0])), dtype=float)
        return bool(np.isclose(ends[0], self.g_left(0.0), atol=1e-12)
                    and np.isclose(ends[1], self.g_right(0.0), atol=1e-12))

    def with_grid(self, grid: Grid) -> "HeatProblem":
        return self.model_copy(update={"grid": grid})


class HeatSolution(BaseModel):
    """Champ u (une ligne par niveau de temps, colonnes = nœuds intérieurs)"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    grid: Grid
    x: FloatArray
    field: FloatArray
    per_level_residuals: FloatArray
    initial_slice_residual: float
    satisfiable: bool = True
    annotations: List[str] = Field(default_factory=list)

    def summary(self) -> dict:
        return {
            "initial_slice_residual": self.initial_slice_residual,
            "per_level_residuals": self.per_level_residuals,
            "satisfiable": self.satisfiable,
            "annotations": self.annotations,
        }

